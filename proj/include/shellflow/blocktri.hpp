#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellflow {

constexpr int kBlock = 5;

struct Vec5 {
    std::array<double, kBlock> v{};

    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }

    Vec5& operator+=(const Vec5& o) {
        for (int i = 0; i < kBlock; ++i) v[i] += o.v[i];
        return *this;
    }
    Vec5& operator-=(const Vec5& o) {
        for (int i = 0; i < kBlock; ++i) v[i] -= o.v[i];
        return *this;
    }
    Vec5 operator-() const {
        Vec5 r;
        for (int i = 0; i < kBlock; ++i) r.v[i] = -v[i];
        return r;
    }
};

struct Mat5 {
    // Row-major.
    std::array<double, kBlock * kBlock> m{};

    double& operator()(int r, int c) { return m[r * kBlock + c]; }
    double operator()(int r, int c) const { return m[r * kBlock + c]; }

    static Mat5 identity() {
        Mat5 I;
        for (int i = 0; i < kBlock; ++i) I(i, i) = 1.0;
        return I;
    }

    Mat5& operator+=(const Mat5& o) {
        for (int i = 0; i < kBlock * kBlock; ++i) m[i] += o.m[i];
        return *this;
    }
    Mat5& operator-=(const Mat5& o) {
        for (int i = 0; i < kBlock * kBlock; ++i) m[i] -= o.m[i];
        return *this;
    }
    Mat5& operator*=(double a) {
        for (double& x : m) x *= a;
        return *this;
    }
};

Vec5 operator*(const Mat5& A, const Vec5& x);
Mat5 operator*(const Mat5& A, const Mat5& B);
Mat5 operator*(double a, const Mat5& A);
Vec5 operator*(double a, const Vec5& x);
Vec5 operator+(Vec5 a, const Vec5& b);
Vec5 operator-(Vec5 a, const Vec5& b);
Mat5 operator+(Mat5 a, const Mat5& b);
Mat5 operator-(Mat5 a, const Mat5& b);

/// Dense LU with partial pivoting of a single 5x5 block.
class Lu5 {
public:
    Lu5() = default;
    explicit Lu5(const Mat5& A) { factor(A); }

    void factor(const Mat5& A);

    Vec5 solve(const Vec5& b) const;
    Mat5 solve(const Mat5& B) const;  // columnwise

    /// Reciprocal 1-norm condition estimate (exact inverse, blocks are tiny).
    double rcond() const;

private:
    Mat5 lu_;
    std::array<int, kBlock> piv_{};
    double norm1_ = 0.0;
};

struct SingularBlockError : std::runtime_error {
    SingularBlockError(const std::string& what, int index)
        : std::runtime_error(what), block_index(index) {}
    int block_index;
};

/// Block-tridiagonal system with 5x5 blocks.  lower[0] and upper[n-1] are
/// unused.
struct BlockTridiagonalSystem {
    std::vector<Mat5> lower, diag, upper;
    std::vector<Vec5> rhs;

    int n() const { return static_cast<int>(diag.size()); }

    explicit BlockTridiagonalSystem(int n = 0)
        : lower(n), diag(n), upper(n), rhs(n) {}

    std::vector<Vec5> apply(const std::vector<Vec5>& x) const;
};

/// Contiguous-segment partition of [0,n): cut indices are the interface
/// blocks separating consecutive segments.
struct Partition {
    std::vector<int> cuts;

    void validate(int n) const;
};

/// Sequential block Thomas elimination.  Throws SingularBlockError when a
/// pivot block's reciprocal condition estimate drops below 1e-12.
std::vector<Vec5> solve_thomas(const BlockTridiagonalSystem& sys);

/// Schur-complement partitioned solve: segment interiors are eliminated
/// independently, a reduced block-tridiagonal system over the
/// (#segments - 1) interface blocks is solved, then back-substituted.
std::vector<Vec5> solve_schur(const BlockTridiagonalSystem& sys,
                              const Partition& partition);

/// Direct dense solve of the assembled 5n x 5n matrix (test oracle).
std::vector<Vec5> dense_oracle(const BlockTridiagonalSystem& sys);

} // namespace shellflow
