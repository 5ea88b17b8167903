#include "shellflow/cases.hpp"

#include <doctest.h>

#include <cmath>

using namespace shellflow;

TEST_CASE("bubble profile values") {
    BubbleSpec b;
    b.radius = 100.0;
    b.amplitude = 2.0;
    b.profile = BubbleProfile::cos2;
    CHECK(bubble_perturbation(b, 0, 0, 0) == doctest::Approx(2.0));
    CHECK(bubble_perturbation(b, 100, 0, 0) == doctest::Approx(0.0));
    CHECK(bubble_perturbation(b, 0, 120, 0) == 0.0);
    CHECK(bubble_perturbation(b, 50, 0, 0) ==
          doctest::Approx(2.0 * std::pow(std::cos(M_PI / 4), 2)));

    b.profile = BubbleProfile::half_cos;
    b.amplitude = 0.5;
    CHECK(bubble_perturbation(b, 0, 0, 0) == doctest::Approx(0.5));
    CHECK(bubble_perturbation(b, 0, 0, 100) == doctest::Approx(0.0));
    CHECK(bubble_perturbation(b, 0, 60, 80) == doctest::Approx(0.0));
    CHECK(bubble_perturbation(b, 50, 0, 0) == doctest::Approx(0.25));
}

TEST_CASE("benchmark case parameters") {
    const CaseSpec c1 = build_thermal1();
    CHECK(c1.gas.gamma == doctest::Approx(1000.0 / 713.0));
    CHECK(c1.gas.r_gas() == doctest::Approx(287.0));
    CHECK(c1.sector.r2 - c1.sector.r1 == doctest::Approx(10.0e3));
    CHECK(c1.sector.r1 == doctest::Approx(6.371e6));
    CHECK(c1.bubble.radius == doctest::Approx(2.0e3));
    CHECK(c1.bubble.amplitude == doctest::Approx(2.0));

    const CaseSpec c2 = build_thermal2();
    CHECK(c2.sector.r2 - c2.sector.r1 == doctest::Approx(1000.0));
    CHECK(c2.bubble.radius == doctest::Approx(250.0));
    CHECK(c2.bubble.center_height == doctest::Approx(260.0));
    CHECK(c2.bubble.amplitude == doctest::Approx(0.5));
    CHECK(c2.env.gravity == doctest::Approx(9.80665));
}

TEST_CASE("discrete hydrostatic column balances the momentum stencil") {
    const CaseSpec c = build_thermal2();
    const MacGrid grid = build_grid(c.sector, 16, 16, 16);
    const FieldSet U = discrete_hydrostatic_state(c, grid);

    // (p_i - p_{i-1})/dr = -g (rho_i + rho_{i-1})/2 at every interior face.
    for (int i = 0; i <= grid.nr; ++i) {
        const double pm = U.p(i - 1, 5, 7), pp = U.p(i, 5, 7);
        const double rm = density(c.gas, pm, U.T(i - 1, 5, 7));
        const double rp = density(c.gas, pp, U.T(i, 5, 7));
        const double res =
            (pp - pm) / grid.dr + c.env.gravity * 0.5 * (rp + rm);
        CHECK(std::abs(res) <= 1e-10 * c.env.gravity * rp);
    }

    // Surface anchor and constant potential temperature.
    const double pi0 = 1.0 - c.env.gravity * (grid.r_center(0) - c.sector.r1) /
                                 (c.gas.cp * c.env.theta0);
    const double p_analytic =
        c.env.p00 * std::pow(pi0, c.gas.cp / c.gas.r_gas());
    CHECK(U.p(0, 0, 0) == doctest::Approx(p_analytic).epsilon(1e-6));
    for (int i = 0; i < grid.nr; ++i) {
        const double th = potential_temperature(c.gas, c.env, U.p(i, 3, 3),
                                                U.T(i, 3, 3));
        CHECK(th == doctest::Approx(c.env.theta0).epsilon(1e-12));
    }
}

TEST_CASE("initial bubble: amplitude, positivity, mid-plane symmetry") {
    const CaseSpec c = build_thermal2();
    const MacGrid grid = build_grid(c.sector, 20, 20, 20);
    const FieldSet U = initial_state(c, grid);
    const Field3 dth = theta_perturbation(U, c, grid);

    double vmax = 0.0, vmin = 0.0;
    for (int i = 0; i < grid.nr; ++i)
        for (int j = 0; j < grid.ntheta; ++j)
            for (int k = 0; k < grid.nphi; ++k) {
                vmax = std::max(vmax, dth(i, j, k));
                vmin = std::min(vmin, dth(i, j, k));
            }
    CHECK(vmax <= c.bubble.amplitude + 1e-12);
    CHECK(vmax >= 0.9 * c.bubble.amplitude); // centre cell nearly on-centre
    CHECK(vmin >= -1e-12);

    // Bubble centred in theta and phi: slice symmetric under j reflection,
    // field symmetric under k reflection.
    const CaseSlice s = midplane_slice(U, c, grid, 0, 0.0);
    for (int i = 0; i < grid.nr; ++i)
        for (int j = 0; j < grid.ntheta; ++j) {
            const double a = s.values[i * grid.ntheta + j];
            const double b = s.values[i * grid.ntheta + (grid.ntheta - 1 - j)];
            CHECK(std::abs(a - b) <= 1e-9);
        }

    const double h0 = bubble_center_height(U, c, grid);
    CHECK(h0 == doctest::Approx(c.bubble.center_height).epsilon(0.05));
}

TEST_CASE("unperturbed atmosphere stays at rest") {
    CaseSpec c = build_thermal2();
    c.bubble.amplitude = 0.0;
    const MacGrid grid = build_grid(c.sector, 16, 16, 16);
    const BoundaryConditions bc = case_boundary_conditions(c);
    const FieldSet U0 = discrete_hydrostatic_state(c, grid);

    PicardConfig cfg;
    cfg.tau = 0.25;
    cfg.k_iters = 2;
    const FieldSet U =
        advance(U0, 0.0, 20, cfg, grid, c.gas, c.env, bc, nullptr, c.env.p00);

    const double cs = std::sqrt(c.gas.gamma * c.gas.r_gas() * 300.0);
    CHECK(max_norm(U.u_r) <= 1e-8 * cs);
    CHECK(max_norm(U.u_theta) <= 1e-8 * cs);
    CHECK(max_norm(U.u_phi) <= 1e-8 * cs);

    double dpmax = 0.0;
    for (int i = 0; i < grid.nr; ++i)
        for (int j = 0; j < grid.ntheta; ++j)
            for (int k = 0; k < grid.nphi; ++k)
                dpmax = std::max(dpmax,
                                 std::abs(U.p(i, j, k) - U0.p(i, j, k)));
    CHECK(dpmax / c.env.p00 <= 1e-8);
}

TEST_CASE("warm bubble rises and stays symmetric") {
    const CaseSpec c = build_thermal2();
    PicardConfig cfg;
    cfg.tau = 0.25;
    cfg.k_iters = 2;
    const CaseRunResult r = run_case(c, cfg, 20, 40, 20);
    REQUIRE(r.slices.size() == 3);

    const double h0 = bubble_center_height(initial_state(c, r.grid), c, r.grid);
    const double h1 = bubble_center_height(r.state, c, r.grid);
    CHECK(h1 > h0);

    // Perturbation bounds hold softly along the run.
    Field3 dth = theta_perturbation(r.state, c, r.grid);
    double vmax = 0.0, vmin = 0.0;
    for (int i = 0; i < r.grid.nr; ++i)
        for (int j = 0; j < r.grid.ntheta; ++j)
            for (int k = 0; k < r.grid.nphi; ++k) {
                vmax = std::max(vmax, dth(i, j, k));
                vmin = std::min(vmin, dth(i, j, k));
            }
    CHECK(vmax <= 1.1 * c.bubble.amplitude);
    CHECK(vmin >= -0.1 * c.bubble.amplitude);

    // The set-up is mirror symmetric in both lateral directions.
    const CaseSlice& s = r.slices.back();
    for (int i = 0; i < s.nr; ++i)
        for (int j = 0; j < s.ntheta; ++j) {
            const double a = s.values[i * s.ntheta + j];
            const double b = s.values[i * s.ntheta + (s.ntheta - 1 - j)];
            CHECK(std::abs(a - b) <= 1e-6);
        }
}
