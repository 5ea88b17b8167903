#pragma once

#include "shellflow/bc.hpp"
#include "shellflow/grid.hpp"
#include "shellflow/thermo.hpp"

namespace shellflow {

/// Parameters of the smooth manufactured flow used for verification.
/// The reference sound speed c0 and Mach number set the velocity scale
/// u0 = mach * c0.  Rotation and gravity are zero for this flow, and the
/// stiffening pressure is zero.
struct ManufacturedParams {
    double p0 = 6250.0;
    double gamma = 1.6;
    double u0 = 1.0;
    double c0 = 100.0;
    double cv = 1.0;
    double mu = 1.0;
    double prandtl = 1.0;

    static ManufacturedParams with_mach(double mach) {
        ManufacturedParams mp;
        mp.u0 = mach * mp.c0;
        return mp;
    }
};

/// Exact state: out = {p, u_r, u_theta, u_phi, T}.
void manufactured_state(const ManufacturedParams& mp, double r, double th,
                        double ph, double t, double out[5]);

/// Forcing terms of the primitive-variable system such that the exact
/// state solves it: out = {S_p, S_ur, S_utheta, S_uphi, S_T}.
void manufactured_source(const ManufacturedParams& mp, double r, double th,
                         double ph, double t, double out[5]);

/// Analytic divergence of the conservative fluxes (mass, momentum r/th/ph,
/// total energy) of the exact state -- the oracle for the conservative
/// residual stencils.
void manufactured_conservative_divergence(const ManufacturedParams& mp,
                                          double r, double th, double ph,
                                          double t, double out[5]);

/// Domain on which the manufactured flow is exercised.
ShellSector manufactured_sector();

/// Gas matching the manufactured parameters.
GasParams manufactured_gas(const ManufacturedParams& mp);

/// Time-dependent Dirichlet velocity data from the exact state; p and T
/// get homogeneous Neumann conditions (which the exact state satisfies).
BoundaryConditions manufactured_bc(const ManufacturedParams& mp);

/// Exact state sampled at every entry (ghost layers included) of each
/// variable's native location.
FieldSet sample_manufactured_state(const ManufacturedParams& mp,
                                   const MacGrid& grid, double t);

/// Primitive-system forcing sampled at the interior unknown locations.
FieldSet sample_manufactured_source(const ManufacturedParams& mp,
                                    const MacGrid& grid, double t);

} // namespace shellflow
