#pragma once

#include "shellflow/bc.hpp"
#include "shellflow/thermo.hpp"
#include "shellflow/timestepper.hpp"

#include <vector>

namespace shellflow {

/// Warm-bubble initial perturbation of the potential temperature.
enum class BubbleProfile {
    cos2,     // amplitude * cos^2(pi L / 2) inside L <= 1
    half_cos, // amplitude * (1 + cos(pi L)) / 2 inside L <= 1
};

struct BubbleSpec {
    double radius = 0.0;        // m
    double center_height = 0.0; // m above the inner shell radius
    double center_y = 0.0;      // lateral arc offset along theta, m
    double center_z = 0.0;      // lateral arc offset along phi, m
    double amplitude = 0.0;     // K
    BubbleProfile profile = BubbleProfile::cos2;

    void validate() const;
};

struct CaseSpec {
    ShellSector sector;
    GasParams gas;
    Environment env;
    BubbleSpec bubble;
    double t_end = 0.0; // nominal benchmark duration, s

    void validate() const;
};

/// Perturbation value for local offsets (dx, dy, dz) in metres from the
/// bubble centre; zero outside the normalized distance L > 1.
double bubble_perturbation(const BubbleSpec& b, double dx, double dy,
                           double dz);

/// Rising warm bubble in a 20 km x 20 km x 10 km shell sector (dry air,
/// 2 K bubble of radius 2 km centred 2 km above the surface).
CaseSpec build_thermal1();

/// Small warm bubble in a 1 km cube sector (0.5 K bubble of radius 250 m
/// centred 260 m above the surface).
CaseSpec build_thermal2();

/// No-penetration walls: all velocity components Dirichlet-zero; pressure
/// and temperature zero-Neumann in the perturbation sense, i.e. their
/// radial ghost gradients carry the hydrostatic base-state profile.
BoundaryConditions case_boundary_conditions(const CaseSpec& c);

/// Constant-potential-temperature hydrostatic state balanced against the
/// solver's discrete radial pressure-gradient stencil: the pressure column
/// satisfies (p_i - p_{i-1})/dr = -g (rho_i + rho_{i-1})/2 exactly (Newton
/// march from p(r1) = p00), so the state is a discrete fixed point of the
/// momentum update.  Velocities zero.
FieldSet discrete_hydrostatic_state(const CaseSpec& c, const MacGrid& grid);

/// Hydrostatic state plus the bubble: potential temperature perturbed at
/// fixed pressure, temperature recovered through the Exner function.
FieldSet initial_state(const CaseSpec& c, const MacGrid& grid);

/// theta(p, T) - theta0 at cell centres (interior only).
Field3 theta_perturbation(const FieldSet& U, const CaseSpec& c,
                          const MacGrid& grid);

/// Mass-weighted mean height above r1 of the positive part of the
/// potential-temperature perturbation; NaN if the perturbation vanishes.
double bubble_center_height(const FieldSet& U, const CaseSpec& c,
                            const MacGrid& grid);

/// Potential-temperature-perturbation slice through the sector's phi
/// mid-plane: values(i * ntheta + j) over (r, theta) cell centres.  For an
/// even phi count the two planes adjacent to the mid-plane are averaged.
struct CaseSlice {
    int step = 0;
    double time = 0.0;
    int nr = 0, ntheta = 0;
    std::vector<double> values;
};

CaseSlice midplane_slice(const FieldSet& U, const CaseSpec& c,
                         const MacGrid& grid, int step, double time);

struct CaseRunResult {
    MacGrid grid;
    FieldSet state;
    std::vector<CaseSlice> slices;
    std::vector<StepDiagnostics> trace;
};

/// Initialize and advance the case on an n^3 grid for n_steps steps of
/// cfg.tau, capturing the mid-plane slice at t = 0, every snapshot_every
/// steps, and after the final step.
CaseRunResult run_case(const CaseSpec& c, const PicardConfig& cfg, int n,
                       int n_steps, int snapshot_every);

} // namespace shellflow
