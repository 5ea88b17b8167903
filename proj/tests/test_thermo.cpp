#include "doctest.h"

#include "shellflow/thermo.hpp"

#include <cmath>

using namespace shellflow;

namespace {
constexpr double kPi = 3.14159265358979323846;

GasParams dry_air() {
    GasParams g;
    g.gamma = 1000.0 / 713.0;
    g.cp = 1000.0;
    g.cv = 713.0;
    g.mu = 1.846e-5;
    g.prandtl = 0.71;
    g.pi_inf = 0.0;
    g.validate();
    return g;
}
} // namespace

TEST_CASE("derived gas constants") {
    auto g = dry_air();
    CHECK(g.r_gas() == doctest::Approx(287.0).epsilon(1e-14));
    CHECK(g.kappa() == doctest::Approx(1.846e-5 * 1000.0 / 0.71).epsilon(1e-14));
}

TEST_CASE("from_cv_gamma builds a consistent set") {
    auto g = GasParams::from_cv_gamma(1.0, 1.6, 1.0, 1.0);
    CHECK(g.cp == doctest::Approx(1.6));
    CHECK(g.r_gas() == doctest::Approx(0.6));
    CHECK_NOTHROW(g.validate());
}

TEST_CASE("validate rejects inconsistent or non-positive parameters") {
    auto g = dry_air();
    g.gamma = 1.5; // no longer cp/cv
    CHECK_THROWS(g.validate());
    g = dry_air();
    g.cv = -1.0;
    CHECK_THROWS(g.validate());
    g = dry_air();
    g.prandtl = 0.0;
    CHECK_THROWS(g.validate());
}

TEST_CASE("ideal-gas density of dry air at surface conditions") {
    auto g = dry_air();
    // rho = p/(R T) = 1e5/(287*300) = 1.16144...
    CHECK(density(g, 1.0e5, 300.0) == doctest::Approx(1.0e5 / (287.0 * 300.0)).epsilon(1e-14));
    CHECK(density(g, 1.0e5, 300.0) == doctest::Approx(1.1614).epsilon(1e-4));
    CHECK_THROWS_AS(density(g, 1.0e5, 0.0), NonPhysicalState);
    CHECK_THROWS_AS(density(g, -2.0e5, 300.0), NonPhysicalState);
}

TEST_CASE("stiffened-gas density uses the pressure offset") {
    auto g = GasParams::from_cv_gamma(1.0, 1.6, 0.0, 1.0, /*pi_inf=*/100.0);
    CHECK(density(g, 50.0, 10.0) == doctest::Approx(150.0 / (0.6 * 10.0)).epsilon(1e-14));
    // Slightly negative p is fine as long as p + pi_inf > 0.
    CHECK_NOTHROW(density(g, -50.0, 10.0));
}

TEST_CASE("Exner function and potential temperature") {
    auto g = dry_air();
    Environment env;
    CHECK(exner(g, env, 1.0e5) == doctest::Approx(1.0).epsilon(1e-15));
    // (1/2)^{287/1000} = 0.81967...
    CHECK(exner(g, env, 5.0e4) == doctest::Approx(std::pow(0.5, 0.287)).epsilon(1e-14));
    CHECK(exner(g, env, 5.0e4) == doctest::Approx(0.819605).epsilon(1e-5));
    CHECK(potential_temperature(g, env, 1.0e5, 300.0) == doctest::Approx(300.0).epsilon(1e-14));
    // Round trip theta <-> T at arbitrary p.
    const double p = 7.3e4, T = 281.5;
    const double th = potential_temperature(g, env, p, T);
    CHECK(temperature_from_theta(g, env, p, th) == doctest::Approx(T).epsilon(1e-13));
}

TEST_CASE("hydrostatic base state matches the analytic profile") {
    auto g = dry_air();
    Environment env;
    env.gravity = 9.80665;
    ShellSector s{6.371e6, 6.381e6,
                  kPi / 2 - 10.0 / 6371, kPi / 2 + 10.0 / 6371,
                  kPi - 10.0 / 6371, kPi + 10.0 / 6371};
    auto grid = build_grid(s, 16, 4, 4);
    auto U = hydrostatic_base_state(g, env, grid);

    CHECK(max_norm(U.u_r) == 0.0);
    CHECK(max_norm(U.u_theta) == 0.0);
    CHECK(max_norm(U.u_phi) == 0.0);

    // Spot-check the Exner profile including a ghost entry.
    for (int i : {-1, 0, 7, 15, 16}) {
        const double h = grid.r_center(i) - s.r1;
        const double pi0 = 1.0 - env.gravity * h / (g.cp * env.theta0);
        const double p = env.p00 * std::pow(pi0, g.cp / g.r_gas());
        const double T = env.theta0 * pi0;
        CHECK(U.p(i, 2, 2) == doctest::Approx(p).epsilon(1e-13));
        CHECK(U.T(i, 2, 2) == doctest::Approx(T).epsilon(1e-13));
    }
    // Profile is radial only.
    CHECK(U.p(5, 0, 0) == U.p(5, 3, 3));

    // 10 km of dry air: pi0 = 1 - 9.80665e4/3e5 = 0.67311...
    const double pi_top = 1.0 - env.gravity * 1.0e4 / (g.cp * env.theta0);
    CHECK(pi_top == doctest::Approx(0.673112).epsilon(1e-5));
    // theta is constant by construction.
    for (int i = 0; i < 16; ++i)
        CHECK(potential_temperature(g, env, U.p(i, 1, 1), U.T(i, 1, 1)) ==
              doctest::Approx(env.theta0).epsilon(1e-12));
}

TEST_CASE("hydrostatic base state rejects a column that reaches zero pressure") {
    auto g = dry_air();
    Environment env;
    env.gravity = 9.80665;
    // cp*theta0/g ~ 30.6 km; a 50 km column crosses pi0 = 0.
    ShellSector s{6.371e6, 6.421e6, kPi / 2 - 0.01, kPi / 2 + 0.01, 0.0, 0.02};
    auto grid = build_grid(s, 8, 2, 2);
    CHECK_THROWS_AS(hydrostatic_base_state(g, env, grid), NonPhysicalState);
}
