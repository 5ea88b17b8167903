#include "shellflow/thermo.hpp"

#include <cmath>

namespace shellflow {

void GasParams::validate() const {
    if (!(gamma > 1.0)) throw std::invalid_argument("gas: gamma must be > 1");
    if (!(cp > cv && cv > 0.0)) throw std::invalid_argument("gas: need cp > cv > 0");
    if (mu < 0.0) throw std::invalid_argument("gas: mu must be >= 0");
    if (!(prandtl > 0.0)) throw std::invalid_argument("gas: Pr must be > 0");
    if (pi_inf < 0.0) throw std::invalid_argument("gas: pi_inf must be >= 0");
    if (std::abs(gamma - cp / cv) > 1e-12 * gamma)
        throw std::invalid_argument("gas: gamma and cp/cv disagree");
}

double density(const GasParams& gas, double p, double T) {
    if (!(T > 0.0) || !(p + gas.pi_inf > 0.0))
        throw NonPhysicalState("density: require T > 0 and p + pi_inf > 0");
    return (p + gas.pi_inf) / (gas.cv * (gas.gamma - 1.0) * T);
}

double exner(const GasParams& gas, const Environment& env, double p) {
    return std::pow(p / env.p00, gas.r_gas() / gas.cp);
}

double potential_temperature(const GasParams& gas, const Environment& env,
                             double p, double T) {
    return T / exner(gas, env, p);
}

double temperature_from_theta(const GasParams& gas, const Environment& env,
                              double p, double theta) {
    return theta * exner(gas, env, p);
}

FieldSet hydrostatic_base_state(const GasParams& gas, const Environment& env,
                                const MacGrid& grid) {
    FieldSet U(grid);
    const double r1 = grid.sector.r1;
    const double coef = env.gravity / (gas.cp * env.theta0);
    const double expo = gas.cp / gas.r_gas();

    auto pi0 = [&](double r) { return 1.0 - coef * (r - r1); };

    // Fill centers including the ghost layer (analytic profile is valid there).
    for (int i = -1; i <= grid.nr; ++i) {
        const double pi = pi0(grid.r_center(i));
        if (pi <= 0.0)
            throw NonPhysicalState("hydrostatic_base_state: Exner profile non-positive; "
                                   "column too tall for the linear law");
        const double p = env.p00 * std::pow(pi, expo);
        const double T = env.theta0 * pi;
        for (int j = -1; j <= grid.ntheta; ++j)
            for (int k = -1; k <= grid.nphi; ++k) {
                U.p(i, j, k) = p;
                U.T(i, j, k) = T;
            }
    }
    return U;
}

} // namespace shellflow
