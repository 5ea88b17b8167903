#include "shellflow/timestepper.hpp"

#include "shellflow/parallel.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace shellflow {

FieldSet build_rhs(const FieldSet& U_n, const FieldSet& U_k,
                   const CoefficientState& coeff, double tau,
                   const BoundaryConditions& bc, const MacGrid& grid,
                   const GasParams& gas, const Environment& env,
                   const FieldSet* source, int n_threads) {
    const FieldSet DUk = apply_explicit_D(U_k, coeff, bc, grid, gas, n_threads);
    const FieldSet DUn = apply_explicit_D(U_n, coeff, bc, grid, gas, n_threads);
    const FieldSet DMk = apply_explicit_DM(U_k, coeff, grid, gas, env, n_threads);
    const FieldSet DMn = apply_explicit_DM(U_n, coeff, grid, gas, env, n_threads);

    FieldSet R(grid);
    for (int v = 0; v < kNumVars; ++v) {
        Field3& out = R.component(v);
        int nx, ny, nz;
        grid.extents(var_location(v), nx, ny, nz);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                for (int k = 0; k < nz; ++k) {
                    if (entry_state(v, i, j, k, bc, grid) != 1) continue;
                    double r = -(U_k.component(v)(i, j, k) -
                                 U_n.component(v)(i, j, k)) -
                               0.5 * tau *
                                   (DUk.component(v)(i, j, k) +
                                    DUn.component(v)(i, j, k) +
                                    DMk.component(v)(i, j, k) +
                                    DMn.component(v)(i, j, k));
                    if (v == kVarUr) r -= tau * env.gravity;
                    if (source) r += tau * source->component(v)(i, j, k);
                    out(i, j, k) = r;
                }
    }
    return R;
}

FieldSet sweep(int dir, const FieldSet& in, const CoefficientState& coeff,
               double tau, const BoundaryConditions& bc, const MacGrid& grid,
               const GasParams& gas, int n_threads) {
    FieldSet out(grid);
    int na, nb;
    pencil_cross_extents(dir, grid, na, nb);
    parallel_for(na * nb, n_threads, [&](int ab) {
        const int a = ab / nb, b = ab % nb;
        PencilBlocks B = directional_blocks(dir, a, b, coeff, bc, grid, gas);
        BlockTridiagonalSystem sys = assemble_pencil(B, tau, bc, dir);
        for (int s = 0; s < B.n; ++s) {
            int i, j, k;
            pencil_index(dir, a, b, s, i, j, k);
            for (int v = 0; v < kBlock; ++v)
                sys.rhs[s][v] = B.state[s][v] == 1
                                    ? in.component(v)(i, j, k)
                                    : 0.0;
        }
        const std::vector<Vec5> x = solve_thomas(sys);
        for (int s = 0; s < B.n; ++s) {
            int i, j, k;
            pencil_index(dir, a, b, s, i, j, k);
            for (int v = 0; v < kBlock; ++v)
                if (B.state[s][v] == 1) out.component(v)(i, j, k) = x[s][v];
        }
    });
    return out;
}

namespace {

double increment_l2(const FieldSet& X, const MacGrid& grid) {
    double sq = 0.0;
    for (int v = 0; v < kNumVars; ++v) {
        const double n = l2_norm(X.component(v), var_location(v), grid);
        sq += n * n;
    }
    return std::sqrt(sq);
}

void check_finite(const FieldSet& U, int iter) {
    for (int v = 0; v < kNumVars; ++v)
        for (double x : U.component(v).raw())
            if (!std::isfinite(x))
                throw SolverDivergence(
                    "non-finite value in variable " + std::to_string(v) +
                    " at Picard iteration " + std::to_string(iter));
}

} // namespace

FieldSet picard_step(const FieldSet& U_n, double t, const PicardConfig& cfg,
                     const MacGrid& grid, const GasParams& gas,
                     const Environment& env, const BoundaryConditions& bc,
                     const SourceFn& source, double* increment_norm) {
    cfg.validate();
    const double tau = cfg.tau;

    FieldSet Un = U_n;
    fill_ghosts(Un, bc, grid, t);
    FieldSet Uk = Un;
    impose_boundary_values(Uk, bc, grid, t + tau);
    fill_ghosts(Uk, bc, grid, t + tau);

    FieldSet S(grid);
    const FieldSet* Sp = nullptr;
    if (source) {
        S = source(t + tau / 2);
        Sp = &S;
    }

    double prev = std::numeric_limits<double>::infinity();
    double last = 0.0;
    int growing = 0;
    for (int k = 0; k < cfg.k_iters; ++k) {
        const CoefficientState cs = build_coefficient_state(Uk, Un, grid, gas);
        const FieldSet R = build_rhs(Un, Uk, cs, tau, bc, grid, gas, env, Sp,
                                     cfg.n_threads);
        FieldSet X = sweep(0, R, cs, tau, bc, grid, gas, cfg.n_threads);
        X = sweep(1, X, cs, tau, bc, grid, gas, cfg.n_threads);
        X = sweep(2, X, cs, tau, bc, grid, gas, cfg.n_threads);
        Uk.axpy(1.0, X);
        fill_ghosts(Uk, bc, grid, t + tau);
        check_finite(Uk, k);

        last = increment_l2(X, grid);
        growing = last > prev ? growing + 1 : 0;
        if (growing >= 3)
            throw SolverDivergence(
                "Picard increment norm grew over 3 consecutive iterations "
                "(last " + std::to_string(last) + ")");
        prev = last;
        if (cfg.increment_tolerance > 0.0 && last < cfg.increment_tolerance)
            break;
    }
    if (increment_norm) *increment_norm = last;
    return Uk;
}

double courant_number(const FieldSet& U, const MacGrid& grid,
                      const GasParams& gas, double tau) {
    double worst = 0.0;
    for (int i = 0; i < grid.nr; ++i) {
        const double rc = grid.r_center(i);
        for (int j = 0; j < grid.ntheta; ++j) {
            const double sc = std::sin(grid.theta_center(j));
            const double d[3] = {grid.dr, rc * grid.dtheta,
                                 rc * sc * grid.dphi};
            for (int k = 0; k < grid.nphi; ++k) {
                const double rho = density(gas, U.p(i, j, k), U.T(i, j, k));
                const double c = std::sqrt(
                    gas.gamma * (U.p(i, j, k) + gas.pi_inf) / rho);
                const double vel[3] = {
                    0.5 * std::abs(U.u_r(i, j, k) + U.u_r(i + 1, j, k)),
                    0.5 * std::abs(U.u_theta(i, j, k) + U.u_theta(i, j + 1, k)),
                    0.5 * std::abs(U.u_phi(i, j, k) + U.u_phi(i, j, k + 1))};
                for (int a = 0; a < 3; ++a)
                    worst = std::max(worst, tau * (vel[a] + c) / d[a]);
            }
        }
    }
    return worst;
}

FieldSet advance(const FieldSet& U0, double t0, int n_steps,
                 const PicardConfig& cfg, const MacGrid& grid,
                 const GasParams& gas, const Environment& env,
                 const BoundaryConditions& bc, const SourceFn& source,
                 double p0, std::vector<StepDiagnostics>* trace) {
    FieldSet U = U0;
    for (int s = 0; s < n_steps; ++s) {
        double inc = 0.0;
        const double t = t0 + s * cfg.tau;
        U = picard_step(U, t, cfg, grid, gas, env, bc, source, &inc);
        if (trace) {
            StepDiagnostics d;
            d.step = s + 1;
            d.time = t + cfg.tau;
            double mx = 0.0;
            for (int i = 0; i < grid.nr; ++i)
                for (int j = 0; j < grid.ntheta; ++j)
                    for (int k = 0; k < grid.nphi; ++k)
                        mx = std::max(mx,
                                      std::abs(U.p(i, j, k) - p0) / p0);
            d.max_dp = mx;
            d.courant = courant_number(U, grid, gas, cfg.tau);
            d.increment_norm = inc;
            trace->push_back(d);
        }
    }
    return U;
}

} // namespace shellflow
