#include "shellflow/grid.hpp"

#include <algorithm>
#include <cmath>

namespace shellflow {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void ShellSector::validate() const {
    if (r1 <= 0.0)
        throw std::invalid_argument("sector: r1 must be > 0");
    if (r2 <= r1)
        throw std::invalid_argument("sector: r2 must exceed r1");
    if (!(theta1 > 0.0 && theta2 < kPi && theta1 < theta2))
        throw std::invalid_argument("sector: colatitude must satisfy 0 < theta1 < theta2 < pi");
    if (!(phi1 < phi2))
        throw std::invalid_argument("sector: phi1 must be < phi2");
}

MacGrid build_grid(const ShellSector& sector, int nr, int ntheta, int nphi) {
    sector.validate();
    if (nr < 2 || ntheta < 2 || nphi < 2)
        throw std::invalid_argument("build_grid: all cell counts must be >= 2");
    MacGrid g;
    g.sector = sector;
    g.nr = nr; g.ntheta = ntheta; g.nphi = nphi;
    g.dr = (sector.r2 - sector.r1) / nr;
    g.dtheta = (sector.theta2 - sector.theta1) / ntheta;
    g.dphi = (sector.phi2 - sector.phi1) / nphi;
    return g;
}

void MacGrid::extents(StaggeredLocation loc, int& nx, int& ny, int& nz) const {
    nx = nr; ny = ntheta; nz = nphi;
    switch (loc) {
    case StaggeredLocation::center: break;
    case StaggeredLocation::r_face: nx = nr + 1; break;
    case StaggeredLocation::theta_face: ny = ntheta + 1; break;
    case StaggeredLocation::phi_face: nz = nphi + 1; break;
    }
}

void MacGrid::coords(StaggeredLocation loc, int i, int j, int k,
                     double& r, double& th, double& ph) const {
    r = (loc == StaggeredLocation::r_face) ? r_face(i) : r_center(i);
    th = (loc == StaggeredLocation::theta_face) ? theta_face(j) : theta_center(j);
    ph = (loc == StaggeredLocation::phi_face) ? phi_face(k) : phi_center(k);
}

double MacGrid::diameter() const {
    const double rm = 0.5 * (sector.r1 + sector.r2);
    const double sm = std::sin(0.5 * (sector.theta1 + sector.theta2));
    const double a = dr, b = rm * dtheta, c = rm * sm * dphi;
    return std::sqrt(a * a + b * b + c * c);
}

Field3& FieldSet::component(int v) {
    switch (v) {
    case kVarP: return p;
    case kVarUr: return u_r;
    case kVarUtheta: return u_theta;
    case kVarUphi: return u_phi;
    default: return T;
    }
}

const Field3& FieldSet::component(int v) const {
    return const_cast<FieldSet*>(this)->component(v);
}

void FieldSet::axpy(double a, const FieldSet& other) {
    for (int v = 0; v < kNumVars; ++v) {
        auto& dst = component(v).raw();
        const auto& src = other.component(v).raw();
        for (std::size_t n = 0; n < dst.size(); ++n) dst[n] += a * src[n];
    }
}

StaggeredLocation var_location(int v) {
    switch (v) {
    case kVarUr: return StaggeredLocation::r_face;
    case kVarUtheta: return StaggeredLocation::theta_face;
    case kVarUphi: return StaggeredLocation::phi_face;
    default: return StaggeredLocation::center;
    }
}

namespace {

int axis_of_face(StaggeredLocation loc) {
    switch (loc) {
    case StaggeredLocation::r_face: return 0;
    case StaggeredLocation::theta_face: return 1;
    case StaggeredLocation::phi_face: return 2;
    default: return -1;
    }
}

} // namespace

Field3 interpolate(const Field3& field, StaggeredLocation from,
                   StaggeredLocation to, const MacGrid& grid) {
    if (from == to)
        throw std::invalid_argument("interpolate: from == to");
    int nx, ny, nz;
    grid.extents(to, nx, ny, nz);
    Field3 out(nx, ny, nz);

    const int af = axis_of_face(from);
    const int at = axis_of_face(to);

    // Offsets such that out(i,j,k) = mean of field at (i+di,j+dj,k+dk) for
    // di,dj,dk in the listed set.  Moving center->face along axis a averages
    // indices {-1,0}; face->center averages {0,+1}.
    auto average_axis = [](int axis, bool to_face, int idx[3], int pick) {
        // pick in {0,1}
        idx[axis] += to_face ? (pick - 1) : pick;
    };

    const bool from_center = (af < 0);
    const bool to_center = (at < 0);

    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            for (int k = 0; k < nz; ++k) {
                double acc = 0.0;
                int count = 0;
                if (from_center && !to_center) {
                    for (int p0 = 0; p0 < 2; ++p0) {
                        int idx[3] = {i, j, k};
                        average_axis(at, true, idx, p0);
                        acc += field(idx[0], idx[1], idx[2]);
                        ++count;
                    }
                } else if (!from_center && to_center) {
                    for (int p0 = 0; p0 < 2; ++p0) {
                        int idx[3] = {i, j, k};
                        average_axis(af, false, idx, p0);
                        acc += field(idx[0], idx[1], idx[2]);
                        ++count;
                    }
                } else {
                    // face -> different face: step to centers along 'from',
                    // then to faces along 'to' (4-point).
                    for (int p0 = 0; p0 < 2; ++p0)
                        for (int p1 = 0; p1 < 2; ++p1) {
                            int idx[3] = {i, j, k};
                            average_axis(af, false, idx, p0);
                            average_axis(at, true, idx, p1);
                            acc += field(idx[0], idx[1], idx[2]);
                            ++count;
                        }
                }
                out(i, j, k) = acc / count;
            }
    return out;
}

double l2_norm(const Field3& field, StaggeredLocation loc, const MacGrid& grid) {
    int nx, ny, nz;
    grid.extents(loc, nx, ny, nz);
    const double dv0 = grid.dr * grid.dtheta * grid.dphi;
    double acc = 0.0;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            for (int k = 0; k < nz; ++k) {
                double r, th, ph;
                grid.coords(loc, i, j, k, r, th, ph);
                const double f = field(i, j, k);
                acc += f * f * r * r * std::sin(th) * dv0;
            }
        }
    return std::sqrt(acc);
}

double max_norm(const Field3& field) {
    double m = 0.0;
    const int nx = field.nx(), ny = field.ny(), nz = field.nz();
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            for (int k = 0; k < nz; ++k)
                m = std::max(m, std::abs(field(i, j, k)));
    return m;
}

} // namespace shellflow
