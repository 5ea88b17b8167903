#pragma once

#include "shellflow/operators.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellflow {

/// Controls for one implicit step: Crank-Nicolson in time, Picard
/// linearization with the splitting-error-reducing right side, and three
/// directional sweeps per iteration.
struct PicardConfig {
    double tau = 0.0;
    int k_iters = 2;
    /// Optional early exit: stop iterating once the l2 norm of the Picard
    /// increment drops below this value.  Zero disables the exit.
    double increment_tolerance = 0.0;
    int n_threads = 1;

    void validate() const {
        if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
        if (k_iters < 1) throw std::invalid_argument("k_iters must be >= 1");
        if (n_threads < 1) throw std::invalid_argument("n_threads must be >= 1");
    }
};

/// Thrown when the iteration produces NaN/Inf or the increment norm grows
/// over three consecutive iterations.
struct SolverDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Optional forcing: fills a field set with source values sampled at the
/// given time (at each variable's unknown locations).
using SourceFn = std::function<FieldSet(double)>;

/// Right side of the Picard iteration:
///   -(U_k - U_n) - (tau/2) (D U_k + D U_n + D_M U_k + D_M U_n)
///   - tau G + tau S(t + tau/2),
/// where G carries gravity on the radial momentum rows.  Both states must
/// have their ghost layers filled; entries at pinned or absent unknowns
/// are zero.
FieldSet build_rhs(const FieldSet& U_n, const FieldSet& U_k,
                   const CoefficientState& coeff, double tau,
                   const BoundaryConditions& bc, const MacGrid& grid,
                   const GasParams& gas, const Environment& env,
                   const FieldSet* source, int n_threads = 1);

/// One directional solve: (I + (tau/2) D_dir) out = in, pencil by pencil,
/// acting on increment fields (homogeneous boundary data).
FieldSet sweep(int dir, const FieldSet& in, const CoefficientState& coeff,
               double tau, const BoundaryConditions& bc, const MacGrid& grid,
               const GasParams& gas, int n_threads = 1);

/// Advances one step from time t to t + tau and returns the new state.
/// Boundary values are imposed at t + tau; coefficients are refrozen at
/// (U_k + U_n)/2 before each iteration.  When increment_norm is non-null
/// it receives the l2 norm of the last Picard increment.
FieldSet picard_step(const FieldSet& U_n, double t, const PicardConfig& cfg,
                     const MacGrid& grid, const GasParams& gas,
                     const Environment& env, const BoundaryConditions& bc,
                     const SourceFn& source = nullptr,
                     double* increment_norm = nullptr);

/// Per-step record emitted by advance().
struct StepDiagnostics {
    int step = 0;
    double time = 0.0;
    double max_dp = 0.0;     // max |p - p0| / p0
    double courant = 0.0;
    double increment_norm = 0.0;
};

/// Maximum over cells and directions of tau (|u| + c) / arc length, with
/// c = sqrt(gamma (p + pi_inf) / rho).
double courant_number(const FieldSet& U, const MacGrid& grid,
                      const GasParams& gas, double tau);

/// Repeats picard_step n_steps times starting at t0.  p0 is the reference
/// pressure for the relative-fluctuation diagnostic.
FieldSet advance(const FieldSet& U0, double t0, int n_steps,
                 const PicardConfig& cfg, const MacGrid& grid,
                 const GasParams& gas, const Environment& env,
                 const BoundaryConditions& bc, const SourceFn& source,
                 double p0, std::vector<StepDiagnostics>* trace = nullptr);

} // namespace shellflow
