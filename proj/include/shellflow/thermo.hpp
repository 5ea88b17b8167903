#pragma once

#include "shellflow/grid.hpp"

#include <stdexcept>

namespace shellflow {

/// Stiffened-gas and transport constants.  pi_inf = 0 recovers ideal gas.
struct GasParams {
    double gamma = 1.4;     // cp/cv
    double cp = 0.0;        // J/(K kg)
    double cv = 0.0;        // J/(K kg)
    double mu = 0.0;        // dynamic viscosity, kg/(m s)
    double prandtl = 1.0;
    double pi_inf = 0.0;    // Pa

    double r_gas() const { return cp - cv; }
    double kappa() const { return mu * cp / prandtl; }

    static GasParams from_cv_gamma(double cv, double gamma, double mu,
                                   double prandtl, double pi_inf = 0.0) {
        GasParams g;
        g.cv = cv; g.gamma = gamma; g.cp = cv * gamma;
        g.mu = mu; g.prandtl = prandtl; g.pi_inf = pi_inf;
        g.validate();
        return g;
    }

    void validate() const;
};

/// Rotation, gravity and the atmospheric reference state.
struct Environment {
    double omega = 0.0;       // planetary angular velocity magnitude, 1/s (polar axis)
    double gravity = 0.0;     // radial gravity + centrifugal magnitude, m/s^2
    double p00 = 1.0e5;       // reference surface pressure, Pa
    double theta0 = 300.0;    // reference potential temperature, K
};

struct NonPhysicalState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// rho = (p + pi_inf) / (cv (gamma-1) T)
double density(const GasParams& gas, double p, double T);

/// pi = (p/p00)^{R/cp}
double exner(const GasParams& gas, const Environment& env, double p);

double potential_temperature(const GasParams& gas, const Environment& env,
                             double p, double T);
double temperature_from_theta(const GasParams& gas, const Environment& env,
                              double p, double theta);

/// Hydrostatic, constant-theta base state from the analytic linear Exner
/// profile pi0(h) = 1 - g h/(cp theta0), h = r - r1.  Velocities zero.
/// Populates ghost layers by analytic evaluation as well.
FieldSet hydrostatic_base_state(const GasParams& gas, const Environment& env,
                                const MacGrid& grid);

} // namespace shellflow
