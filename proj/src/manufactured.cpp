#include "shellflow/manufactured.hpp"

#include <cmath>

namespace shellflow {

ShellSector manufactured_sector() {
    return {1.0, 2.0, M_PI / 4, 3 * M_PI / 4, M_PI / 4, 7 * M_PI / 4};
}

GasParams manufactured_gas(const ManufacturedParams& mp) {
    return GasParams::from_cv_gamma(mp.cv, mp.gamma, mp.mu, mp.prandtl, 0.0);
}

BoundaryConditions manufactured_bc(const ManufacturedParams& mp) {
    auto vel = [mp](int comp) {
        return [mp, comp](double r, double th, double ph, double t) {
            double s[5];
            manufactured_state(mp, r, th, ph, t, s);
            return s[comp];
        };
    };
    return BoundaryConditions::dirichlet_velocity_neumann_scalars(
        vel(kVarUr), vel(kVarUtheta), vel(kVarUphi));
}

FieldSet sample_manufactured_state(const ManufacturedParams& mp,
                                   const MacGrid& grid, double t) {
    FieldSet U(grid);
    for (int v = 0; v < kNumVars; ++v) {
        Field3& f = U.component(v);
        int nx, ny, nz;
        grid.extents(var_location(v), nx, ny, nz);
        for (int i = -1; i <= nx; ++i)
            for (int j = -1; j <= ny; ++j)
                for (int k = -1; k <= nz; ++k) {
                    double r, th, ph, s[5];
                    grid.coords(var_location(v), i, j, k, r, th, ph);
                    manufactured_state(mp, r, th, ph, t, s);
                    f(i, j, k) = s[v];
                }
    }
    return U;
}

FieldSet sample_manufactured_source(const ManufacturedParams& mp,
                                    const MacGrid& grid, double t) {
    FieldSet S(grid);
    for (int v = 0; v < kNumVars; ++v) {
        Field3& f = S.component(v);
        int nx, ny, nz;
        grid.extents(var_location(v), nx, ny, nz);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                for (int k = 0; k < nz; ++k) {
                    double r, th, ph, s[5];
                    grid.coords(var_location(v), i, j, k, r, th, ph);
                    manufactured_source(mp, r, th, ph, t, s);
                    f(i, j, k) = s[v];
                }
    }
    return S;
}

} // namespace shellflow
