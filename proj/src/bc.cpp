#include "shellflow/bc.hpp"

#include <cmath>

namespace shellflow {

BoundaryConditions BoundaryConditions::rigid_walls() {
    BoundaryConditions b;
    for (int a = 0; a < 3; ++a) {
        b.var[kVarUr].kind[a] = BcKind::dirichlet;
        b.var[kVarUtheta].kind[a] = BcKind::dirichlet;
        b.var[kVarUphi].kind[a] = BcKind::dirichlet;
    }
    return b;
}

BoundaryConditions BoundaryConditions::dirichlet_velocity_neumann_scalars(
    BcValueFn ur, BcValueFn utheta, BcValueFn uphi) {
    auto b = rigid_walls();
    b.var[kVarUr].value = std::move(ur);
    b.var[kVarUtheta].value = std::move(utheta);
    b.var[kVarUphi].value = std::move(uphi);
    return b;
}

namespace {

// Index of the axis a face field is normal to, or -1 for cell centers.
int normal_axis(StaggeredLocation loc) {
    switch (loc) {
    case StaggeredLocation::r_face: return 0;
    case StaggeredLocation::theta_face: return 1;
    case StaggeredLocation::phi_face: return 2;
    default: return -1;
    }
}

struct AxisView {
    Field3* f;
    int axis;
    int nx, ny, nz;

    int n_along() const { return axis == 0 ? nx : axis == 1 ? ny : nz; }
    double& at(int along, int b, int c) {
        switch (axis) {
        case 0: return (*f)(along, b, c);
        case 1: return (*f)(b, along, c);
        default: return (*f)(b, c, along);
        }
    }
    void cross_extents(int& nb, int& nc) const {
        switch (axis) {
        case 0: nb = ny; nc = nz; break;
        case 1: nb = nx; nc = nz; break;
        default: nb = nx; nc = ny; break;
        }
    }
    void unpack(int along, int b, int c, int& i, int& j, int& k) const {
        switch (axis) {
        case 0: i = along; j = b; k = c; break;
        case 1: i = b; j = along; k = c; break;
        default: i = b; j = c; k = along; break;
        }
    }
};

// Coordinate of the boundary face crossed along `axis` on side `side`
// (0 = low, 1 = high), with the remaining coordinates at the field's own
// staggered positions.
void boundary_coords(const MacGrid& g, StaggeredLocation loc, int axis,
                     int side, int i, int j, int k,
                     double& r, double& th, double& ph) {
    g.coords(loc, i, j, k, r, th, ph);
    switch (axis) {
    case 0: r = side ? g.sector.r2 : g.sector.r1; break;
    case 1: th = side ? g.sector.theta2 : g.sector.theta1; break;
    default: ph = side ? g.sector.phi2 : g.sector.phi1; break;
    }
}

} // namespace

void fill_ghosts(FieldSet& U, const BoundaryConditions& bc,
                 const MacGrid& grid, double t) {
    for (int axis = 0; axis < 3; ++axis) {
        for (int v = 0; v < kNumVars; ++v) {
            Field3& f = U.component(v);
            const StaggeredLocation loc = var_location(v);
            const BcKind kind = bc.var[v].kind[axis];
            const bool is_normal = (normal_axis(loc) == axis);

            AxisView view{&f, axis, f.nx(), f.ny(), f.nz()};
            const int n = view.n_along();
            int nb, nc;
            view.cross_extents(nb, nc);

            // Cross-axis loops include ghost rows so edges stay consistent;
            // axes already processed have valid ghosts, later axes get
            // overwritten on their own pass.
            for (int b = -1; b <= nb; ++b)
                for (int c = -1; c <= nc; ++c) {
                    for (int side = 0; side < 2; ++side) {
                        const int ghost = side ? n : -1;
                        const int inner = side ? n - 1 : 0;
                        if (kind == BcKind::neumann) {
                            const BcValueFn& gfn = bc.var[v].grad[axis];
                            if (!gfn) {
                                view.at(ghost, b, c) = view.at(inner, b, c);
                                continue;
                            }
                            int gi, gj, gk;
                            view.unpack(inner, b, c, gi, gj, gk);
                            double gr, gth, gph;
                            boundary_coords(grid, loc, axis, side, gi, gj, gk,
                                            gr, gth, gph);
                            double h;
                            switch (axis) {
                            case 0: h = grid.dr; break;
                            case 1: h = gr * grid.dtheta; break;
                            default: h = gr * std::sin(gth) * grid.dphi;
                            }
                            view.at(ghost, b, c) =
                                view.at(inner, b, c) +
                                (side ? h : -h) * gfn(gr, gth, gph, t);
                            continue;
                        }
                        int i, j, k;
                        view.unpack(inner, b, c, i, j, k);
                        double r, th, ph;
                        boundary_coords(grid, loc, axis, side, i, j, k, r, th, ph);
                        const double g0 = bc.var[v].eval(r, th, ph, t);
                        if (is_normal) {
                            // Unknown sits on the boundary; pin it and
                            // reflect the ghost through it.
                            const int bnd = side ? n - 1 : 0;
                            const int in2 = side ? n - 2 : 1;
                            view.at(bnd, b, c) = g0;
                            view.at(ghost, b, c) = 2.0 * g0 - view.at(in2, b, c);
                        } else {
                            view.at(ghost, b, c) = 2.0 * g0 - view.at(inner, b, c);
                        }
                    }
                }
        }
    }
}

void impose_boundary_values(FieldSet& U, const BoundaryConditions& bc,
                            const MacGrid& grid, double t) {
    for (int v = 0; v < kNumVars; ++v) {
        const StaggeredLocation loc = var_location(v);
        const int axis = normal_axis(loc);
        if (axis < 0 || bc.var[v].kind[axis] != BcKind::dirichlet) continue;
        Field3& f = U.component(v);
        AxisView view{&f, axis, f.nx(), f.ny(), f.nz()};
        const int n = view.n_along();
        int nb, nc;
        view.cross_extents(nb, nc);
        for (int b = 0; b < nb; ++b)
            for (int c = 0; c < nc; ++c)
                for (int side = 0; side < 2; ++side) {
                    const int bnd = side ? n - 1 : 0;
                    int i, j, k;
                    view.unpack(bnd, b, c, i, j, k);
                    double r, th, ph;
                    grid.coords(loc, i, j, k, r, th, ph);
                    view.at(bnd, b, c) = bc.var[v].eval(r, th, ph, t);
                }
    }
}

} // namespace shellflow
