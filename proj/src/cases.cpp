#include "shellflow/cases.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace shellflow {

void BubbleSpec::validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("bubble radius must be > 0");
    if (!(amplitude >= 0.0))
        throw std::invalid_argument("bubble amplitude must be >= 0");
}

void CaseSpec::validate() const {
    sector.validate();
    gas.validate();
    bubble.validate();
    if (!(t_end > 0.0)) throw std::invalid_argument("case t_end must be > 0");
}

double bubble_perturbation(const BubbleSpec& b, double dx, double dy,
                           double dz) {
    const double L = std::sqrt(dx * dx + dy * dy + dz * dz) / b.radius;
    if (L > 1.0) return 0.0;
    switch (b.profile) {
    case BubbleProfile::cos2: {
        const double c = std::cos(0.5 * M_PI * L);
        return b.amplitude * c * c;
    }
    default:
        return b.amplitude * 0.5 * (1.0 + std::cos(M_PI * L));
    }
}

namespace {

constexpr double kEarthRadius = 6.371e6; // m

GasParams dry_air() {
    // cp = 1000, cv = 713, R = 287 J/(kg K); Pr = 0.71.
    return GasParams::from_cv_gamma(713.0, 1000.0 / 713.0, 1.846e-5, 0.71);
}

Environment standard_atmosphere() {
    Environment env;
    env.omega = 0.0;
    env.gravity = 9.80665;
    env.p00 = 1.0e5;
    env.theta0 = 300.0;
    return env;
}

ShellSector centered_sector(double height, double half_width) {
    ShellSector s;
    s.r1 = kEarthRadius;
    s.r2 = kEarthRadius + height;
    const double half_angle = half_width / kEarthRadius;
    s.theta1 = 0.5 * M_PI - half_angle;
    s.theta2 = 0.5 * M_PI + half_angle;
    s.phi1 = M_PI - half_angle;
    s.phi2 = M_PI + half_angle;
    return s;
}

} // namespace

CaseSpec build_thermal1() {
    CaseSpec c;
    c.sector = centered_sector(10.0e3, 10.0e3); // 10 km tall, 20 km wide
    c.gas = dry_air();
    c.env = standard_atmosphere();
    c.bubble.radius = 2.0e3;
    c.bubble.center_height = 2.0e3;
    c.bubble.amplitude = 2.0;
    c.bubble.profile = BubbleProfile::cos2;
    c.t_end = 1000.0;
    c.validate();
    return c;
}

CaseSpec build_thermal2() {
    CaseSpec c;
    c.sector = centered_sector(1000.0, 500.0); // 1 km cube
    c.gas = dry_air();
    c.env = standard_atmosphere();
    c.bubble.radius = 250.0;
    c.bubble.center_height = 260.0;
    c.bubble.amplitude = 0.5;
    c.bubble.profile = BubbleProfile::half_cos;
    c.t_end = 400.0;
    c.validate();
    return c;
}

BoundaryConditions case_boundary_conditions(const CaseSpec& c) {
    BoundaryConditions b = BoundaryConditions::rigid_walls();
    const GasParams gas = c.gas;
    const Environment env = c.env;
    // Radial ghost gradients carry the hydrostatic base profile so that the
    // zero-Neumann condition acts on the perturbation, not the total field.
    // T0(r) = theta0 * pi0(h) is linear in r; p0(r) follows the analytic
    // Exner profile.
    b.var[kVarT].grad[0] = [gas, env](double, double, double, double) {
        return -env.gravity / gas.cp;
    };
    const double r1 = c.sector.r1;
    b.var[kVarP].grad[0] = [gas, env, r1](double r, double, double, double) {
        const double pi0 =
            1.0 - env.gravity * (r - r1) / (gas.cp * env.theta0);
        const double p = env.p00 * std::pow(pi0, gas.cp / gas.r_gas());
        const double rho = density(gas, p, env.theta0 * pi0);
        return -rho * env.gravity;
    };
    return b;
}

FieldSet discrete_hydrostatic_state(const CaseSpec& c, const MacGrid& grid) {
    const GasParams& gas = c.gas;
    const Environment& env = c.env;
    const double g = env.gravity;

    const auto T_of_p = [&](double p) {
        return temperature_from_theta(gas, env, p, env.theta0);
    };
    const auto rho_of_p = [&](double p) {
        return density(gas, p, T_of_p(p));
    };
    // Solve x - p_prev + h g (rho(x) + rho_prev)/2 = 0 for the next column
    // pressure; rho(p) = p^{cv/cp} p00^{R/cp} / (R theta0) so
    // drho/dp = (cv/cp) rho / p.
    const auto march = [&](double p_prev, double h) {
        const double rho_prev = rho_of_p(p_prev);
        double x = p_prev - h * g * rho_prev;
        for (int it = 0; it < 50; ++it) {
            const double rho = rho_of_p(x);
            const double f = x - p_prev + 0.5 * h * g * (rho + rho_prev);
            const double fp = 1.0 + 0.5 * h * g * (gas.cv / gas.cp) * rho / x;
            const double dx = f / fp;
            x -= dx;
            if (std::abs(dx) <= 1e-14 * env.p00) break;
        }
        return x;
    };

    // One radial column: centers -1 .. nr (including ghosts).
    std::vector<double> pcol(static_cast<std::size_t>(grid.nr) + 2);
    const auto pc = [&](int i) -> double& {
        return pcol[static_cast<std::size_t>(i + 1)];
    };
    pc(0) = march(env.p00, 0.5 * grid.dr); // half step from the surface
    for (int i = 1; i <= grid.nr; ++i) pc(i) = march(pc(i - 1), grid.dr);
    pc(-1) = march(pc(0), -grid.dr);

    FieldSet U(grid);
    U.fill(0.0);
    for (int i = -1; i <= grid.nr; ++i) {
        const double p = pc(i);
        const double T = T_of_p(p);
        for (int j = -1; j <= grid.ntheta; ++j)
            for (int k = -1; k <= grid.nphi; ++k) {
                U.p(i, j, k) = p;
                U.T(i, j, k) = T;
            }
    }
    return U;
}

FieldSet initial_state(const CaseSpec& c, const MacGrid& grid) {
    FieldSet U = discrete_hydrostatic_state(c, grid);
    const double r1 = c.sector.r1;
    const double th_mid = 0.5 * (c.sector.theta1 + c.sector.theta2);
    const double ph_mid = 0.5 * (c.sector.phi1 + c.sector.phi2);
    const double lateral = r1 * std::sin(th_mid);
    for (int i = 0; i < grid.nr; ++i)
        for (int j = 0; j < grid.ntheta; ++j)
            for (int k = 0; k < grid.nphi; ++k) {
                const double dx = grid.r_center(i) - r1 - c.bubble.center_height;
                const double dy =
                    r1 * (grid.theta_center(j) - th_mid) - c.bubble.center_y;
                const double dz =
                    lateral * (grid.phi_center(k) - ph_mid) - c.bubble.center_z;
                const double dth = bubble_perturbation(c.bubble, dx, dy, dz);
                if (dth == 0.0) continue;
                U.T(i, j, k) = temperature_from_theta(
                    c.gas, c.env, U.p(i, j, k), c.env.theta0 + dth);
            }
    return U;
}

Field3 theta_perturbation(const FieldSet& U, const CaseSpec& c,
                          const MacGrid& grid) {
    Field3 out(grid.nr, grid.ntheta, grid.nphi);
    for (int i = 0; i < grid.nr; ++i)
        for (int j = 0; j < grid.ntheta; ++j)
            for (int k = 0; k < grid.nphi; ++k)
                out(i, j, k) = potential_temperature(c.gas, c.env,
                                                     U.p(i, j, k),
                                                     U.T(i, j, k)) -
                               c.env.theta0;
    return out;
}

double bubble_center_height(const FieldSet& U, const CaseSpec& c,
                            const MacGrid& grid) {
    const Field3 dth = theta_perturbation(U, c, grid);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < grid.nr; ++i) {
        const double r = grid.r_center(i);
        const double h = r - c.sector.r1;
        for (int j = 0; j < grid.ntheta; ++j) {
            const double w0 = r * r * std::sin(grid.theta_center(j));
            for (int k = 0; k < grid.nphi; ++k) {
                const double v = dth(i, j, k);
                if (v <= 0.0) continue;
                num += w0 * v * h;
                den += w0 * v;
            }
        }
    }
    if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return num / den;
}

CaseSlice midplane_slice(const FieldSet& U, const CaseSpec& c,
                         const MacGrid& grid, int step, double time) {
    const Field3 dth = theta_perturbation(U, c, grid);
    CaseSlice s;
    s.step = step;
    s.time = time;
    s.nr = grid.nr;
    s.ntheta = grid.ntheta;
    s.values.resize(static_cast<std::size_t>(grid.nr) * grid.ntheta);
    const int kc = grid.nphi / 2;
    const bool even = grid.nphi % 2 == 0;
    for (int i = 0; i < grid.nr; ++i)
        for (int j = 0; j < grid.ntheta; ++j) {
            const double v = even
                                 ? 0.5 * (dth(i, j, kc - 1) + dth(i, j, kc))
                                 : dth(i, j, kc);
            s.values[static_cast<std::size_t>(i) * grid.ntheta + j] = v;
        }
    return s;
}

CaseRunResult run_case(const CaseSpec& c, const PicardConfig& cfg, int n,
                       int n_steps, int snapshot_every) {
    c.validate();
    cfg.validate();
    if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
    if (snapshot_every < 1)
        throw std::invalid_argument("snapshot_every must be >= 1");

    CaseRunResult out;
    out.grid = build_grid(c.sector, n, n, n);
    const BoundaryConditions bc = case_boundary_conditions(c);
    out.state = initial_state(c, out.grid);
    out.slices.push_back(midplane_slice(out.state, c, out.grid, 0, 0.0));

    int done = 0;
    while (done < n_steps) {
        const int chunk = std::min(snapshot_every, n_steps - done);
        out.state = advance(out.state, done * cfg.tau, chunk, cfg, out.grid,
                            c.gas, c.env, bc, nullptr, c.env.p00, &out.trace);
        done += chunk;
        out.slices.push_back(
            midplane_slice(out.state, c, out.grid, done, done * cfg.tau));
    }
    return out;
}

} // namespace shellflow
