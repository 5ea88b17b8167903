#pragma once

#include "shellflow/manufactured.hpp"
#include "shellflow/timestepper.hpp"

#include <limits>
#include <string>
#include <vector>

namespace shellflow {

/// Pointwise exact solution; out6 = {p, u_r, u_theta, u_phi, T, rho}.
void eval_manufactured(const ManufacturedParams& mp, double r, double th,
                       double ph, double t, double out6[6]);

/// Per-grid error summary of a convergence study.
struct ErrorReport {
    int n = 0;        // cells per direction
    double d = 0.0;   // cell diameter at the sector midpoint
    double tau = 0.0;
    double l2[kNumVars] = {};
    double max[kNumVars] = {};
    /// Observed order vs. the previous ladder entry; NaN for the first.
    double order[kNumVars] = {std::numeric_limits<double>::quiet_NaN()};
};

/// Runs the solver on a ladder of cubic grids from exact initial data to
/// t_end and reports per-variable errors at each variable's own staggered
/// location, plus pairwise observed orders.
std::vector<ErrorReport> convergence_study(const ManufacturedParams& mp,
                                           const std::vector<int>& grids,
                                           double tau, double t_end,
                                           int k_iters, int n_threads);

/// Inverse-Richardson temporal convergence rate
/// log2(|u_tau - u_half| / |u_half - u_quarter|); -inf when the numerator
/// vanishes, NaN when only the denominator does.
double tcr(double diff_coarse, double diff_fine);

/// Per-variable l2 differences of two states at their own locations.
double l2_difference(const FieldSet& a, const FieldSet& b, int var,
                     const MacGrid& grid);

/// l2 norms of the centrally-discretized conservative equations (mass,
/// momentum r/theta/phi, total energy with E = rho c_v T + pi_inf +
/// rho|u|^2/2 + rho g r) evaluated on three consecutive states.  All three
/// states must have ghost layers filled.  Norms are taken over centers at
/// least one cell away from every boundary.  For forced problems
/// (manufactured solutions) `source` supplies the analytic conservative
/// source density at a cell center, evaluated at the middle state's time;
/// it is subtracted before the norms are taken so the residual measures
/// pure discretization error.
struct ConservativeResidual {
    double norm[5] = {}; // mass, mom_r, mom_theta, mom_phi, energy
};
using ConservedSourceFn =
    std::function<void(double r, double theta, double phi, double out[5])>;
ConservativeResidual conservative_residual(
    const FieldSet& prev, const FieldSet& curr, const FieldSet& next,
    double tau, const MacGrid& grid, const GasParams& gas,
    const Environment& env, const ConservedSourceFn& source = nullptr);

/// max |p - p0| / p0 over cell centers.
double pressure_fluctuation(const FieldSet& U, double p0);

/// Plot-ready delimiter-separated table with columns
/// (d, tau, variable, l2_error, order).
void write_convergence_table(const std::string& path,
                             const std::vector<ErrorReport>& reports);

} // namespace shellflow
