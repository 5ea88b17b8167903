#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellflow {

/// Spherical-shell sector [r1,r2] x [theta1,theta2] x [phi1,phi2].
/// Colatitude must stay away from the poles (metric is singular there).
struct ShellSector {
    double r1 = 0.0, r2 = 0.0;
    double theta1 = 0.0, theta2 = 0.0;
    double phi1 = 0.0, phi2 = 0.0;

    void validate() const;
};

enum class StaggeredLocation { center, r_face, theta_face, phi_face };

/// 3D scalar array with one ghost layer per side.  Index order (i,j,k)
/// maps to (r,theta,phi), phi fastest.  Interior indices run [0,n);
/// ghosts are at -1 and n.
class Field3 {
public:
    Field3() = default;
    Field3(int nx, int ny, int nz, double init = 0.0)
        : nx_(nx), ny_(ny), nz_(nz),
          sy_(nz + 2), sx_(static_cast<std::size_t>(ny + 2) * (nz + 2)),
          data_(static_cast<std::size_t>(nx + 2) * (ny + 2) * (nz + 2), init) {}

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }

    double& operator()(int i, int j, int k) {
        return data_[idx(i, j, k)];
    }
    double operator()(int i, int j, int k) const {
        return data_[idx(i, j, k)];
    }

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

    std::vector<double>& raw() { return data_; }
    const std::vector<double>& raw() const { return data_; }

    bool same_shape(const Field3& o) const {
        return nx_ == o.nx_ && ny_ == o.ny_ && nz_ == o.nz_;
    }

private:
    std::size_t idx(int i, int j, int k) const {
        return static_cast<std::size_t>(i + 1) * sx_ +
               static_cast<std::size_t>(j + 1) * sy_ +
               static_cast<std::size_t>(k + 1);
    }

    int nx_ = 0, ny_ = 0, nz_ = 0;
    std::size_t sy_ = 0, sx_ = 0;
    std::vector<double> data_;
};

/// MAC staggered grid on a shell sector: p,T at cell centers, u_r on
/// r-faces, u_theta on theta-faces, u_phi on phi-faces.
struct MacGrid {
    ShellSector sector;
    int nr = 0, ntheta = 0, nphi = 0;
    double dr = 0.0, dtheta = 0.0, dphi = 0.0;

    double r_face(int i) const { return sector.r1 + i * dr; }
    double r_center(int i) const { return sector.r1 + (i + 0.5) * dr; }
    double theta_face(int j) const { return sector.theta1 + j * dtheta; }
    double theta_center(int j) const { return sector.theta1 + (j + 0.5) * dtheta; }
    double phi_face(int k) const { return sector.phi1 + k * dphi; }
    double phi_center(int k) const { return sector.phi1 + (k + 0.5) * dphi; }

    /// Interior extents of a field at the given staggering.
    void extents(StaggeredLocation loc, int& nx, int& ny, int& nz) const;

    /// Coordinates of entry (i,j,k) of a field at the given staggering.
    void coords(StaggeredLocation loc, int i, int j, int k,
                double& r, double& th, double& ph) const;

    /// Representative cell diagonal at the sector midpoint; the "grid size"
    /// used on convergence-plot axes.
    double diameter() const;
};

MacGrid build_grid(const ShellSector& sector, int nr, int ntheta, int nphi);

/// The staggered unknown vector [p, u_r, u_theta, u_phi, T].
struct FieldSet {
    Field3 p, u_r, u_theta, u_phi, T;

    FieldSet() = default;
    explicit FieldSet(const MacGrid& g)
        : p(g.nr, g.ntheta, g.nphi),
          u_r(g.nr + 1, g.ntheta, g.nphi),
          u_theta(g.nr, g.ntheta + 1, g.nphi),
          u_phi(g.nr, g.ntheta, g.nphi + 1),
          T(g.nr, g.ntheta, g.nphi) {}

    Field3& component(int v);
    const Field3& component(int v) const;

    void fill(double v) {
        p.fill(v); u_r.fill(v); u_theta.fill(v); u_phi.fill(v); T.fill(v);
    }

    /// this += a * other, interior and ghosts alike.
    void axpy(double a, const FieldSet& other);
};

constexpr int kVarP = 0, kVarUr = 1, kVarUtheta = 2, kVarUphi = 3, kVarT = 4;
constexpr int kNumVars = 5;

StaggeredLocation var_location(int v);

/// Arithmetic averaging between staggered locations (2-point along one
/// axis, 4-point between two face families).  Ghost entries of the input
/// must be valid where the target extends to the domain boundary.
Field3 interpolate(const Field3& field, StaggeredLocation from,
                   StaggeredLocation to, const MacGrid& grid);

/// Volume-weighted discrete L2 norm: sqrt(sum f^2 r^2 sin(theta) dr dtheta dphi).
double l2_norm(const Field3& field, StaggeredLocation loc, const MacGrid& grid);

double max_norm(const Field3& field);

} // namespace shellflow
