#include "shellflow/verification.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <doctest.h>

using namespace shellflow;

TEST_CASE("exact solution scalings") {
    // One constant bounds the relative pressure spread for every Mach
    // number, and the velocity divergence scales linearly with it.
    double C = 0.0;
    for (double M0 : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        const ManufacturedParams mp = ManufacturedParams::with_mach(M0);
        double mn = 1e300, mx = -1e300;
        for (double r = 1.0; r <= 2.0; r += 0.1)
            for (double th = 0.8; th <= 2.3; th += 0.1)
                for (double ph = 0.8; ph <= 5.4; ph += 0.25) {
                    double s[6];
                    eval_manufactured(mp, r, th, ph, 0.37, s);
                    mn = std::min(mn, s[0]);
                    mx = std::max(mx, s[0]);
                    CHECK(s[5] == 1.0);
                }
        C = std::max(C, (mx - mn) / mp.p0 / (M0 * M0));
    }
    CHECK(C <= 5.0);
}

TEST_CASE("tcr formula") {
    CHECK(tcr(4e-3, 1e-3) == doctest::Approx(2.0));
    CHECK(std::isinf(tcr(0.0, 1e-3)));
    CHECK(tcr(0.0, 1e-3) < 0);
    CHECK(std::isnan(tcr(1e-3, 0.0)));
    // exactly-first-order error sequence
    CHECK(tcr(2e-4 - 1e-4, 1e-4 - 5e-5) == doctest::Approx(1.0));
}

TEST_CASE("pressure fluctuation") {
    const MacGrid g = build_grid(manufactured_sector(), 4, 4, 4);
    FieldSet U(g);
    U.p.fill(6250.0);
    CHECK(pressure_fluctuation(U, 6250.0) == 0.0);
    U.p(2, 2, 2) = 6250.0 * 1.01;
    CHECK(pressure_fluctuation(U, 6250.0) == doctest::Approx(0.01));
}

TEST_CASE("conservative residual: rest state and analytic convergence") {
    const ManufacturedParams mp = ManufacturedParams::with_mach(0.01);
    const GasParams gas = manufactured_gas(mp);
    Environment env;
    env.gravity = 0.0;
    env.omega = 0.0;

    {
        const MacGrid g = build_grid(manufactured_sector(), 6, 6, 6);
        FieldSet U(g);
        U.p.fill(6250.0);
        U.T.fill(6250.0 / (mp.cv * (mp.gamma - 1.0)));
        fill_ghosts(U, BoundaryConditions::rigid_walls(), g, 0.0);
        const ConservativeResidual r =
            conservative_residual(U, U, U, 0.1, g, gas, env);
        for (int q = 0; q < 5; ++q) CHECK(std::abs(r.norm[q]) <= 1e-9);
    }

    // On analytically sampled fields the residual, after subtracting the
    // analytic conservative source, is pure truncation error, O(d^2 +
    // tau^2); refine both together.
    const ConservedSourceFn src = [&](double r, double th, double ph,
                                      double out[5]) {
        manufactured_conservative_divergence(mp, r, th, ph, 0.3, out);
    };
    double norms[2][5];
    // The coarse end of the ladder is avoided here: the shortest
    // wavelengths of the manufactured field need ~8 cells per period
    // before every equation is in its asymptotic range.
    const int grids[2] = {48, 96};
    for (int gi = 0; gi < 2; ++gi) {
        const int n = grids[gi];
        const MacGrid g = build_grid(manufactured_sector(), n, n, n);
        const double tau = 1e-3 * 16.0 / n;
        const FieldSet Um = sample_manufactured_state(mp, g, 0.3 - tau);
        const FieldSet Uc = sample_manufactured_state(mp, g, 0.3);
        const FieldSet Up = sample_manufactured_state(mp, g, 0.3 + tau);
        const ConservativeResidual r =
            conservative_residual(Um, Uc, Up, tau, g, gas, env, src);
        for (int q = 0; q < 5; ++q) norms[gi][q] = r.norm[q];
    }
    for (int q = 0; q < 5; ++q) {
        const double order = std::log2(norms[0][q] / norms[1][q]);
        INFO("equation ", q, " coarse ", norms[0][q], " fine ", norms[1][q]);
        CHECK(order >= 1.6);
        CHECK(order <= 2.4);
    }
}

TEST_CASE("convergence study reaches second order and writes its table") {
    const ManufacturedParams mp = ManufacturedParams::with_mach(0.01);
    // Grids are chosen so the shortest wavelength of the manufactured
    // pressure field spans more than two cells on the coarse grid; at n = 12
    // that mode sits exactly at the phi Nyquist limit and samples to zero,
    // which makes the coarse-grid error unrepresentative.
    const std::vector<ErrorReport> reps =
        convergence_study(mp, {24, 48}, 1e-5, 1e-4, 2, 4);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].d > reps[1].d);
    for (int v : {kVarP, kVarUphi}) {
        INFO("variable ", v, " errors ", reps[0].l2[v], " ", reps[1].l2[v]);
        CHECK(reps[1].order[v] >= 1.5);
        CHECK(reps[1].order[v] <= 2.6);
    }

    const std::string path = "convergence_test_table.txt";
    write_convergence_table(path, reps);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "d\ttau\tvariable\tl2_error\torder");
    int rows = 0;
    for (std::string line; std::getline(f, line);) ++rows;
    CHECK(rows == 2 * kNumVars);
    std::remove(path.c_str());
}
