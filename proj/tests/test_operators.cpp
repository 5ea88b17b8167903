#include "shellflow/operators.hpp"

#include "shellflow/bc.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

using namespace shellflow;

namespace {

MacGrid small_grid(int nr = 5, int nt = 6, int np = 7) {
    ShellSector sec{1.0, 2.0, M_PI / 4, 3 * M_PI / 4, M_PI / 4, 7 * M_PI / 4};
    return build_grid(sec, nr, nt, np);
}

GasParams test_gas(double mu = 0.8, double pi_inf = 0.0) {
    GasParams gas;
    gas.gamma = 1.4;
    gas.cp = 3.5;
    gas.cv = 2.5;
    gas.mu = mu;
    gas.prandtl = 0.9;
    gas.pi_inf = pi_inf;
    return gas;
}

// Random interior values; boundary-pinned entries zeroed and ghosts filled
// with the homogeneous mirror rule so that explicit application and the
// assembled increment systems must agree exactly.
FieldSet random_state(const MacGrid& g, const BoundaryConditions& bc,
                      unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> up(900.0, 1100.0);
    std::uniform_real_distribution<double> uT(250.0, 350.0);
    std::uniform_real_distribution<double> uv(-1.0, 1.0);
    FieldSet U(g);
    for (int v = 0; v < kNumVars; ++v) {
        Field3& f = U.component(v);
        int nx, ny, nz;
        g.extents(var_location(v), nx, ny, nz);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                for (int k = 0; k < nz; ++k)
                    f(i, j, k) = (v == kVarP) ? up(rng)
                               : (v == kVarT) ? uT(rng)
                                              : uv(rng);
    }
    impose_boundary_values(U, bc, g, 0.0);
    fill_ghosts(U, bc, g, 0.0);
    return U;
}

BoundaryConditions mms_style_bc() {
    auto zero = [](double, double, double, double) { return 0.0; };
    return BoundaryConditions::dirichlet_velocity_neumann_scalars(zero, zero, zero);
}

} // namespace

TEST_CASE("assembled pencils match explicit application") {
    const MacGrid g = small_grid();
    const GasParams gas = test_gas();
    const double tau = 0.37;

    for (int bcase = 0; bcase < 2; ++bcase) {
        const BoundaryConditions bc =
            bcase == 0 ? BoundaryConditions::rigid_walls() : mms_style_bc();
        const FieldSet Uk = random_state(g, bc, 11 + bcase);
        const FieldSet Un = random_state(g, bc, 47 + bcase);
        const CoefficientState cs = build_coefficient_state(Uk, Un, g, gas);

        for (int dir = 0; dir < 3; ++dir) {
            const FieldSet DU = apply_explicit_D_dir(dir, Uk, cs, bc, g, gas);
            int na, nb;
            pencil_cross_extents(dir, g, na, nb);
            double worst = 0.0;
            for (int a = 0; a < na; ++a)
                for (int b = 0; b < nb; ++b) {
                    PencilBlocks B = directional_blocks(dir, a, b, cs, bc, g, gas);
                    BlockTridiagonalSystem sys = assemble_pencil(B, tau, bc, dir);
                    std::vector<Vec5> x(B.n);
                    for (int s = 0; s < B.n; ++s) {
                        int i, j, k;
                        pencil_index(dir, a, b, s, i, j, k);
                        for (int v = 0; v < kBlock; ++v)
                            x[s][v] = B.state[s][v] == 1
                                          ? Uk.component(v)(i, j, k)
                                          : 0.0;
                    }
                    const std::vector<Vec5> y = sys.apply(x);
                    for (int s = 0; s < B.n; ++s) {
                        int i, j, k;
                        pencil_index(dir, a, b, s, i, j, k);
                        for (int v = 0; v < kBlock; ++v) {
                            const double want =
                                B.state[s][v] == 1
                                    ? x[s][v] +
                                          0.5 * tau * DU.component(v)(i, j, k)
                                    : 0.0;
                            const double err = std::abs(y[s][v] - want) /
                                               (1.0 + std::abs(want));
                            worst = std::max(worst, err);
                        }
                    }
                }
            CHECK(worst <= 1e-12);
        }
    }
}

TEST_CASE("uniform rest state is annihilated") {
    const MacGrid g = small_grid();
    const GasParams gas = test_gas();
    const BoundaryConditions bc = BoundaryConditions::rigid_walls();
    FieldSet U(g);
    U.p.fill(1000.0);
    U.T.fill(300.0);
    fill_ghosts(U, bc, g, 0.0);
    const CoefficientState cs = build_coefficient_state(U, U, g, gas);

    const FieldSet DU = apply_explicit_D(U, cs, bc, g, gas);
    Environment env;
    env.omega = 0.3;
    env.gravity = 0.0;
    const FieldSet DMU = apply_explicit_DM(U, cs, g, gas, env);
    // Diffusive stencils cancel terms of size kappa*p/dr^2 ~ 1e4, so the
    // residual is pure roundoff at that scale.
    for (int v = 0; v < kNumVars; ++v) {
        CHECK(max_norm(DU.component(v)) <= 1e-8);
        CHECK(max_norm(DMU.component(v)) <= 1e-12);
    }
}

TEST_CASE("pressure gradient row recovers (1/rho) dp/dr") {
    const MacGrid g = small_grid(8, 5, 5);
    const GasParams gas = test_gas();
    const BoundaryConditions bc = mms_style_bc();
    const double alpha = 40.0, rho0 = 2.0;
    FieldSet U(g);
    for (int i = -1; i <= g.nr; ++i) {
        const double r = g.r_center(i);
        const double p = 1000.0 + alpha * r;
        for (int j = -1; j <= g.ntheta; ++j)
            for (int k = -1; k <= g.nphi; ++k) {
                U.p(i, j, k) = p;
                U.T(i, j, k) = (p + gas.pi_inf) /
                               (gas.cv * (gas.gamma - 1.0) * rho0);
            }
    }
    const CoefficientState cs = build_coefficient_state(U, U, g, gas);
    const FieldSet DU = apply_explicit_D(U, cs, bc, g, gas);
    for (int i = 1; i < g.nr; ++i)
        for (int j = 0; j < g.ntheta; ++j)
            for (int k = 0; k < g.nphi; ++k)
                CHECK(DU.u_r(i, j, k) ==
                      doctest::Approx(alpha / rho0).epsilon(1e-12));
}

TEST_CASE("velocity gradient of u_r = r is the identity tensor") {
    const MacGrid g = small_grid();
    FieldSet U(g);
    for (int i = -1; i <= g.nr + 1; ++i)
        for (int j = -1; j <= g.ntheta; ++j)
            for (int k = -1; k <= g.nphi; ++k)
                U.u_r(i, j, k) = g.r_face(i);
    const GradTensor G = velocity_gradient(U, g);
    for (int i = 1; i < g.nr - 1; ++i)
        for (int j = 1; j < g.ntheta - 1; ++j)
            for (int k = 1; k < g.nphi - 1; ++k)
                for (int a = 0; a < 3; ++a)
                    for (int c = 0; c < 3; ++c) {
                        const double want = a == c ? 1.0 : 0.0;
                        CHECK(G.g[a][c](i, j, k) ==
                              doctest::Approx(want).epsilon(1e-12));
                    }
}

TEST_CASE("Coriolis and metric terms for a uniform zonal flow") {
    const MacGrid g = small_grid();
    GasParams gas = test_gas(0.0);
    const double c0 = 0.7, omega = 0.3;
    FieldSet U(g);
    U.p.fill(1000.0);
    U.T.fill(300.0);
    U.u_phi.fill(c0);
    const CoefficientState cs = build_coefficient_state(U, U, g, gas);
    Environment env;
    env.omega = omega;
    env.gravity = 0.0;
    const FieldSet DM = apply_explicit_DM(U, cs, g, gas, env);

    for (int i = 1; i < g.nr; ++i) {
        const double rf = g.r_face(i);
        for (int j = 0; j < g.ntheta; ++j) {
            const double sc = std::sin(g.theta_center(j));
            const double want = -c0 * c0 / rf - 2 * omega * sc * c0;
            for (int k = 0; k < g.nphi; ++k)
                CHECK(DM.u_r(i, j, k) == doctest::Approx(want).epsilon(1e-12));
        }
    }
    for (int i = 0; i < g.nr; ++i) {
        const double rc = g.r_center(i);
        for (int j = 1; j < g.ntheta; ++j) {
            const double thf = g.theta_face(j);
            const double want = -c0 * c0 * std::cos(thf) / (rc * std::sin(thf)) -
                                2 * omega * std::cos(thf) * c0;
            for (int k = 0; k < g.nphi; ++k)
                CHECK(DM.u_theta(i, j, k) ==
                      doctest::Approx(want).epsilon(1e-12));
        }
    }
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.ntheta; ++j)
            for (int k = 1; k < g.nphi; ++k)
                CHECK(std::abs(DM.u_phi(i, j, k)) <= 1e-13);
}

TEST_CASE("explicit application is thread-count independent") {
    const MacGrid g = small_grid(6, 6, 6);
    const GasParams gas = test_gas();
    const BoundaryConditions bc = BoundaryConditions::rigid_walls();
    const FieldSet Uk = random_state(g, bc, 5);
    const FieldSet Un = random_state(g, bc, 6);
    const CoefficientState cs = build_coefficient_state(Uk, Un, g, gas);
    Environment env;
    env.omega = 0.1;

    const FieldSet D1 = apply_explicit_D(Uk, cs, bc, g, gas, 1);
    const FieldSet D4 = apply_explicit_D(Uk, cs, bc, g, gas, 4);
    const FieldSet M1 = apply_explicit_DM(Uk, cs, g, gas, env, 1);
    const FieldSet M4 = apply_explicit_DM(Uk, cs, g, gas, env, 4);
    FieldSet diff = D1;
    diff.axpy(-1.0, D4);
    FieldSet diffm = M1;
    diffm.axpy(-1.0, M4);
    for (int v = 0; v < kNumVars; ++v) {
        CHECK(max_norm(diff.component(v)) == 0.0);
        CHECK(max_norm(diffm.component(v)) == 0.0);
    }
}
