#include "shellflow/blocktri.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace shellflow {

Vec5 operator*(const Mat5& A, const Vec5& x) {
    Vec5 y;
    for (int r = 0; r < kBlock; ++r) {
        double acc = 0.0;
        for (int c = 0; c < kBlock; ++c) acc += A(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

Mat5 operator*(const Mat5& A, const Mat5& B) {
    Mat5 C;
    for (int r = 0; r < kBlock; ++r)
        for (int c = 0; c < kBlock; ++c) {
            double acc = 0.0;
            for (int k = 0; k < kBlock; ++k) acc += A(r, k) * B(k, c);
            C(r, c) = acc;
        }
    return C;
}

Mat5 operator*(double a, const Mat5& A) {
    Mat5 B = A;
    B *= a;
    return B;
}

Vec5 operator*(double a, const Vec5& x) {
    Vec5 y;
    for (int i = 0; i < kBlock; ++i) y[i] = a * x[i];
    return y;
}

Vec5 operator+(Vec5 a, const Vec5& b) { a += b; return a; }
Vec5 operator-(Vec5 a, const Vec5& b) { a -= b; return a; }
Mat5 operator+(Mat5 a, const Mat5& b) { a += b; return a; }
Mat5 operator-(Mat5 a, const Mat5& b) { a -= b; return a; }

void Lu5::factor(const Mat5& A) {
    lu_ = A;
    norm1_ = 0.0;
    for (int c = 0; c < kBlock; ++c) {
        double s = 0.0;
        for (int r = 0; r < kBlock; ++r) s += std::abs(A(r, c));
        norm1_ = std::max(norm1_, s);
    }
    for (int k = 0; k < kBlock; ++k) {
        int pmax = k;
        double vmax = std::abs(lu_(k, k));
        for (int r = k + 1; r < kBlock; ++r) {
            const double v = std::abs(lu_(r, k));
            if (v > vmax) { vmax = v; pmax = r; }
        }
        piv_[k] = pmax;
        if (pmax != k)
            for (int c = 0; c < kBlock; ++c)
                std::swap(lu_(k, c), lu_(pmax, c));
        const double pivot = lu_(k, k);
        if (pivot == 0.0) continue;  // surfaced via rcond() == 0
        for (int r = k + 1; r < kBlock; ++r) {
            lu_(r, k) /= pivot;
            const double f = lu_(r, k);
            for (int c = k + 1; c < kBlock; ++c)
                lu_(r, c) -= f * lu_(k, c);
        }
    }
}

Vec5 Lu5::solve(const Vec5& b) const {
    Vec5 x = b;
    for (int k = 0; k < kBlock; ++k)
        if (piv_[k] != k) std::swap(x[k], x[piv_[k]]);
    for (int r = 1; r < kBlock; ++r)
        for (int c = 0; c < r; ++c) x[r] -= lu_(r, c) * x[c];
    for (int r = kBlock - 1; r >= 0; --r) {
        for (int c = r + 1; c < kBlock; ++c) x[r] -= lu_(r, c) * x[c];
        x[r] /= lu_(r, r);
    }
    return x;
}

Mat5 Lu5::solve(const Mat5& B) const {
    Mat5 X;
    for (int c = 0; c < kBlock; ++c) {
        Vec5 col;
        for (int r = 0; r < kBlock; ++r) col[r] = B(r, c);
        col = solve(col);
        for (int r = 0; r < kBlock; ++r) X(r, c) = col[r];
    }
    return X;
}

double Lu5::rcond() const {
    for (int k = 0; k < kBlock; ++k)
        if (lu_(k, k) == 0.0) return 0.0;
    const Mat5 inv = solve(Mat5::identity());
    double inv_norm = 0.0;
    for (int c = 0; c < kBlock; ++c) {
        double s = 0.0;
        for (int r = 0; r < kBlock; ++r) s += std::abs(inv(r, c));
        inv_norm = std::max(inv_norm, s);
    }
    if (norm1_ == 0.0 || inv_norm == 0.0) return 0.0;
    return 1.0 / (norm1_ * inv_norm);
}

std::vector<Vec5> BlockTridiagonalSystem::apply(const std::vector<Vec5>& x) const {
    const int m = n();
    std::vector<Vec5> y(m);
    for (int i = 0; i < m; ++i) {
        Vec5 acc = diag[i] * x[i];
        if (i > 0) acc += lower[i] * x[i - 1];
        if (i + 1 < m) acc += upper[i] * x[i + 1];
        y[i] = acc;
    }
    return y;
}

void Partition::validate(int n) const {
    int prev = 0;
    for (int c : cuts) {
        if (c <= prev || c >= n)
            throw std::invalid_argument("partition: cuts must split [0,n) into non-empty ordered segments");
        prev = c;
    }
}

namespace {

constexpr double kRcondFloor = 1e-12;

/// Block LU of a tridiagonal subrange; reusable for several right sides.
class BlockThomasFactor {
public:
    // Operates on blocks [begin, end) of the given sequences.
    BlockThomasFactor(const std::vector<Mat5>& lower, const std::vector<Mat5>& diag,
                      const std::vector<Mat5>& upper, int begin, int end)
        : lower_(&lower), upper_(&upper), begin_(begin), n_(end - begin) {
        factors_.reserve(n_);
        Mat5 d = diag[begin];
        for (int i = 0; i < n_; ++i) {
            if (i > 0) {
                const Mat5 w = factors_.back().solve((*upper_)[begin + i - 1]);
                d = diag[begin + i] - (*lower_)[begin + i] * w;
            }
            factors_.emplace_back(d);
            if (factors_.back().rcond() < kRcondFloor)
                throw SingularBlockError("solve_thomas: near-singular pivot block", begin + i);
        }
    }

    template <typename T>
    std::vector<T> solve(std::vector<T> c) const {
        for (int i = 1; i < n_; ++i)
            c[i] -= (*lower_)[begin_ + i] * factors_[i - 1].solve(c[i - 1]);
        std::vector<T> x(n_);
        x[n_ - 1] = factors_[n_ - 1].solve(c[n_ - 1]);
        for (int i = n_ - 2; i >= 0; --i)
            x[i] = factors_[i].solve(c[i] - (*upper_)[begin_ + i] * x[i + 1]);
        return x;
    }

private:
    const std::vector<Mat5>* lower_;
    const std::vector<Mat5>* upper_;
    int begin_;
    int n_;
    std::vector<Lu5> factors_;
};

} // namespace

std::vector<Vec5> solve_thomas(const BlockTridiagonalSystem& sys) {
    const int n = sys.n();
    if (n == 0) return {};
    BlockThomasFactor f(sys.lower, sys.diag, sys.upper, 0, n);
    return f.solve(sys.rhs);
}

std::vector<Vec5> solve_schur(const BlockTridiagonalSystem& sys,
                              const Partition& partition) {
    const int n = sys.n();
    partition.validate(n);
    const int m = static_cast<int>(partition.cuts.size()) + 1;
    if (m == 1) return solve_thomas(sys);

    // Segment q spans [s[q], s[q+1]); its interface block (last index) is
    // e[q] = s[q+1]-1 for q < m-1.  Interiors exclude interfaces.
    std::vector<int> s(m + 1);
    s[0] = 0;
    for (int q = 1; q < m; ++q) s[q] = partition.cuts[q - 1];
    s[m] = n;

    struct Segment {
        int a = 0, b = 0;                 // interior range [a, b)
        std::vector<Vec5> y;              // T^{-1} rhs
        std::vector<Mat5> zl, zr;         // T^{-1} couplings to left/right interface
        bool has_left = false, has_right = false;
    };
    std::vector<Segment> segs(m);

    for (int q = 0; q < m; ++q) {
        Segment& sg = segs[q];
        sg.a = s[q];
        sg.b = (q < m - 1) ? s[q + 1] - 1 : n;
        if (sg.a == sg.b) continue;  // empty interior (size-1 segment)
        BlockThomasFactor f(sys.lower, sys.diag, sys.upper, sg.a, sg.b);
        const int len = sg.b - sg.a;
        std::vector<Vec5> rhs(sys.rhs.begin() + sg.a, sys.rhs.begin() + sg.b);
        sg.y = f.solve(rhs);
        if (q > 0) {  // coupling of first interior row to interface q-1
            std::vector<Mat5> c(len);
            c[0] = sys.lower[sg.a];
            sg.zl = f.solve(c);
            sg.has_left = true;
        }
        if (q < m - 1) {  // coupling of last interior row to interface q
            std::vector<Mat5> c(len);
            c[len - 1] = sys.upper[sg.b - 1];
            sg.zr = f.solve(c);
            sg.has_right = true;
        }
    }

    // Reduced block-tridiagonal system over the m-1 interface blocks.
    const int ni = m - 1;
    BlockTridiagonalSystem red(ni);
    for (int q = 0; q < ni; ++q) {
        const int e = s[q + 1] - 1;
        red.diag[q] = sys.diag[e];
        red.rhs[q] = sys.rhs[e];
        const Segment& left = segs[q];
        if (left.a < left.b) {
            const int last = left.b - left.a - 1;
            red.diag[q] -= sys.lower[e] * left.zr[last];
            if (left.has_left) red.lower[q] -= sys.lower[e] * left.zl[last];
            red.rhs[q] -= sys.lower[e] * left.y[last];
        } else if (q > 0) {
            red.lower[q] += sys.lower[e];
        }
        const Segment& right = segs[q + 1];
        if (right.a < right.b) {
            red.diag[q] -= sys.upper[e] * right.zl[0];
            if (right.has_right) red.upper[q] -= sys.upper[e] * right.zr[0];
            red.rhs[q] -= sys.upper[e] * right.y[0];
        } else {
            red.upper[q] += sys.upper[e];
        }
    }

    std::vector<Vec5> xi;
    try {
        xi = solve_thomas(red);
    } catch (const SingularBlockError& err) {
        throw SingularBlockError("solve_schur: singular interface (Schur) block", err.block_index);
    }

    // Back-substitution.
    std::vector<Vec5> x(n);
    for (int q = 0; q < ni; ++q) x[s[q + 1] - 1] = xi[q];
    for (int q = 0; q < m; ++q) {
        const Segment& sg = segs[q];
        for (int i = sg.a; i < sg.b; ++i) {
            Vec5 val = sg.y[i - sg.a];
            if (sg.has_left) val -= sg.zl[i - sg.a] * xi[q - 1];
            if (sg.has_right) val -= sg.zr[i - sg.a] * xi[q];
            x[i] = val;
        }
    }
    return x;
}

std::vector<Vec5> dense_oracle(const BlockTridiagonalSystem& sys) {
    const int n = sys.n();
    const int N = n * kBlock;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
    Eigen::VectorXd b(N);
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < kBlock; ++r) {
            b(i * kBlock + r) = sys.rhs[i][r];
            for (int c = 0; c < kBlock; ++c) {
                A(i * kBlock + r, i * kBlock + c) = sys.diag[i](r, c);
                if (i > 0) A(i * kBlock + r, (i - 1) * kBlock + c) = sys.lower[i](r, c);
                if (i + 1 < n) A(i * kBlock + r, (i + 1) * kBlock + c) = sys.upper[i](r, c);
            }
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (!lu.isInvertible())
        throw SingularBlockError("dense_oracle: singular assembled matrix", -1);
    const Eigen::VectorXd x = lu.solve(b);
    std::vector<Vec5> out(n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < kBlock; ++r) out[i][r] = x(i * kBlock + r);
    return out;
}

} // namespace shellflow
