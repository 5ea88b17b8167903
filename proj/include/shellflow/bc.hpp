#pragma once

#include "shellflow/grid.hpp"

#include <functional>

namespace shellflow {

enum class BcKind { dirichlet, neumann };

/// Boundary value as a function of position and time.  For Dirichlet faces
/// it is the prescribed value; for Neumann faces, `grad[axis]` (when set)
/// is the prescribed derivative along the axis with respect to physical
/// arc length, so fixed background profiles (e.g. hydrostatic gradients)
/// can be carried through the ghost layer.  Null gradients mean
/// homogeneous Neumann.
using BcValueFn = std::function<double(double r, double th, double ph, double t)>;

struct VarBc {
    BcKind kind[3] = {BcKind::neumann, BcKind::neumann, BcKind::neumann};
    BcValueFn value;   // Dirichlet value; null means zero
    BcValueFn grad[3]; // Neumann gradient per axis; null means zero

    double eval(double r, double th, double ph, double t) const {
        return value ? value(r, th, ph, t) : 0.0;
    }
};

/// One BC description per unknown [p, u_r, u_theta, u_phi, T].
struct BoundaryConditions {
    VarBc var[kNumVars];

    /// Rigid-wall thermal setup: all velocity components Dirichlet-zero on
    /// every boundary, p and T zero-Neumann.
    static BoundaryConditions rigid_walls();

    /// All five variables Dirichlet with prescribed values (manufactured
    /// runs); p and T still use zero-Neumann ghosts, which the caller's
    /// exact solution must satisfy.
    static BoundaryConditions dirichlet_velocity_neumann_scalars(
        BcValueFn ur, BcValueFn utheta, BcValueFn uphi);
};

/// Populate the single ghost layer of every component from boundary data:
/// Neumann mirrors the first interior value; Dirichlet reflects through the
/// boundary value (ghost = 2*g - interior for cell-offset data).  For a
/// velocity component normal to a Dirichlet face, the boundary entry itself
/// is set.  Axes are processed in order r, theta, phi so edge/corner ghosts
/// are consistent.
void fill_ghosts(FieldSet& U, const BoundaryConditions& bc,
                 const MacGrid& grid, double t);

/// Set only the Dirichlet face-normal velocity unknowns that lie on the
/// boundary (entries that are fixed, not solved for).
void impose_boundary_values(FieldSet& U, const BoundaryConditions& bc,
                            const MacGrid& grid, double t);

/// Sign s such that a solution increment obeys delta_ghost = s * delta_interior
/// under homogeneous boundary data: +1 for Neumann, -1 for Dirichlet.
inline double ghost_mirror_sign(BcKind k) {
    return k == BcKind::neumann ? 1.0 : -1.0;
}

} // namespace shellflow
