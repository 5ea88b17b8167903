#pragma once

#include "shellflow/bc.hpp"
#include "shellflow/blocktri.hpp"
#include "shellflow/grid.hpp"
#include "shellflow/thermo.hpp"

#include <array>
#include <cstdint>

namespace shellflow {

/// Velocity gradient tensor at cell centers in physical spherical
/// components.  First index = derivative direction, second = component:
///   g[0][0] = dv_r/dr
///   g[1][0] = (1/r) dv_r/dth - v_th/r          (etc.)
/// The trace equals the divergence.
struct GradTensor {
    Field3 g[3][3];
};

GradTensor velocity_gradient(const FieldSet& U, const MacGrid& grid);

/// Picard-frozen coefficient data: the half-time state, its density and
/// gradient tensor, and the combined divergence/viscous-heating
/// coefficients used by the pressure and temperature rows.
struct CoefficientState {
    FieldSet half;        // ghosts valid
    Field3 rho;           // centers, ghosts included
    GradTensor grad;      // of half, centers
    Field3 gamma_div;     // gamma (p+pi_inf) + (2 mu (gamma-1)/3) tr G
    Field3 gamma_div_phi; // same with (G_rr + G_tt - 2 G_pp)
    Field3 cc;            // (gamma-1) T / (p+pi_inf)
    Field3 c_div;         // (gamma-1) T + (2 mu/3) cc tr G
    Field3 c_div_phi;
};

/// Both inputs must have their ghost layers filled.
CoefficientState build_coefficient_state(const FieldSet& Uk, const FieldSet& Un,
                                         const MacGrid& grid, const GasParams& gas);

/// Entry status of variable v at grid index (i,j,k):
/// 0 = no such entry, 1 = unknown, 2 = boundary value pinned by Dirichlet data.
std::uint8_t entry_state(int v, int i, int j, int k,
                         const BoundaryConditions& bc, const MacGrid& grid);

/// One pencil's directional operator D_dir as block-tridiagonal
/// coefficients over slots 0..n-1 (n = n_dir + 1, covering both cell
/// centers and the extra face layer).  lower[0] holds the coupling to the
/// ghost entries at index -1.  Rows exist only where state == 1.
struct PencilBlocks {
    int n = 0;
    std::vector<Mat5> lower, diag, upper;
    std::vector<std::array<std::uint8_t, kBlock>> state;
};

/// Cross indices: dir=0 (r): a=j, b=k; dir=1 (theta): a=i, b=k;
/// dir=2 (phi): a=i, b=j.
PencilBlocks directional_blocks(int dir, int a, int b,
                                const CoefficientState& cs,
                                const BoundaryConditions& bc,
                                const MacGrid& grid, const GasParams& gas);

/// Map (direction, cross indices, slot) to grid indices.
inline void pencil_index(int dir, int a, int b, int s, int& i, int& j, int& k) {
    switch (dir) {
    case 0: i = s; j = a; k = b; break;
    case 1: i = a; j = s; k = b; break;
    default: i = a; j = b; k = s; break;
    }
}

/// Extents of the cross-index loops (inclusive of face layers).
inline void pencil_cross_extents(int dir, const MacGrid& g, int& na, int& nb) {
    switch (dir) {
    case 0: na = g.ntheta + 1; nb = g.nphi + 1; break;
    case 1: na = g.nr + 1; nb = g.nphi + 1; break;
    default: na = g.nr + 1; nb = g.ntheta + 1; break;
    }
}

/// D_dir applied to a state whose ghosts are filled; rows at fixed or
/// absent entries are zero.
FieldSet apply_explicit_D_dir(int dir, const FieldSet& state,
                              const CoefficientState& cs,
                              const BoundaryConditions& bc,
                              const MacGrid& grid, const GasParams& gas,
                              int n_threads = 1);

/// (D_r + D_theta + D_phi) state.
FieldSet apply_explicit_D(const FieldSet& state, const CoefficientState& cs,
                          const BoundaryConditions& bc, const MacGrid& grid,
                          const GasParams& gas, int n_threads = 1);

/// D_M state: mixed-derivative viscous terms, cross-direction grad-div
/// pieces, Coriolis, and metric coupling terms.
FieldSet apply_explicit_DM(const FieldSet& state, const CoefficientState& cs,
                           const MacGrid& grid, const GasParams& gas,
                           const Environment& env, int n_threads = 1);

/// I + (tau/2) * blocks with ghost couplings folded through the
/// homogeneous mirror policy (Neumann: +, Dirichlet: -) and identity rows
/// at fixed/absent entries.  rhs is left zero.
BlockTridiagonalSystem assemble_pencil(const PencilBlocks& blocks, double tau,
                                       const BoundaryConditions& bc, int dir);

} // namespace shellflow
