// Command-line driver: runs the built-in verification and warm-bubble
// benchmark modes described in io.hpp and writes tables, slices and
// snapshots under the output directory.
//
// Exit codes: 0 success, 2 config error, 3 numerical failure,
// 4 verification-threshold failure.

#include "shellflow/cases.hpp"
#include "shellflow/io.hpp"
#include "shellflow/verification.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>

using namespace shellflow;

namespace {

constexpr int kExitConfig = 2, kExitNumerical = 3, kExitAcceptance = 4;

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return (std::filesystem::path(cfg.out_dir) / name).string();
}

void emit(const RunConfig& cfg, const Table& t, const std::string& file) {
    std::cout << format_table(t);
    write_table(t, out_path(cfg, file));
}

int run_mms_convergence(const RunConfig& cfg) {
    const double tau = cfg.tau > 0.0 ? cfg.tau : 1e-5;
    const double t_end = cfg.t_end > 0.0 ? cfg.t_end : 1e-3;
    const ManufacturedParams mp = ManufacturedParams::with_mach(cfg.mach);
    const std::vector<ErrorReport> reports = convergence_study(
        mp, cfg.grids, tau, t_end, cfg.k_iters, cfg.threads);

    Table t;
    t.title = "spatial convergence, mach=" + std::to_string(cfg.mach);
    t.columns = {"n", "d", "l2_p", "order_p", "l2_uphi", "order_uphi"};
    bool ok = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const ErrorReport& r = reports[i];
        t.rows.push_back({static_cast<double>(r.n), r.d, r.l2[kVarP],
                          r.order[kVarP], r.l2[kVarUphi], r.order[kVarUphi]});
        if (i > 0)
            for (int v : {kVarP, kVarUphi})
                if (!(r.order[v] >= 1.7 && r.order[v] <= 2.3)) ok = false;
    }
    emit(cfg, t, "mms_convergence.txt");
    write_convergence_table(out_path(cfg, "mms_convergence_full.txt"), reports);
    if (!ok) {
        std::cerr << "convergence order outside [1.7, 2.3]\n";
        return kExitAcceptance;
    }
    return 0;
}

int run_mms_tcr(const RunConfig& cfg) {
    const double t_end = cfg.t_end > 0.0 ? cfg.t_end : 2.4e-2;
    const ManufacturedParams mp = ManufacturedParams::with_mach(cfg.mach);
    const GasParams gas = manufactured_gas(mp);
    const BoundaryConditions bc = manufactured_bc(mp);
    Environment env; // no rotation or gravity for the manufactured flow
    const MacGrid grid =
        build_grid(manufactured_sector(), cfg.n, cfg.n, cfg.n);
    const SourceFn src = [&](double t) {
        return sample_manufactured_source(mp, grid, t);
    };
    const FieldSet U0 = sample_manufactured_state(mp, grid, 0.0);

    const auto solve = [&](double tau) {
        PicardConfig pc;
        pc.tau = tau;
        pc.k_iters = cfg.k_iters;
        pc.n_threads = cfg.threads;
        const int steps = static_cast<int>(std::llround(t_end / tau));
        return advance(U0, 0.0, steps, pc, grid, gas, env, bc, src, mp.p0);
    };

    Table t;
    t.title = "temporal convergence rates, n=" + std::to_string(cfg.n);
    t.columns = {"tau", "rate_p", "rate_u_r", "rate_u_theta", "rate_u_phi",
                 "rate_T"};
    bool ok = true;
    for (double tau : cfg.tau_ladder) {
        const FieldSet a = solve(tau), b = solve(tau / 2), c = solve(tau / 4);
        std::vector<double> row = {tau};
        for (int v = 0; v < kNumVars; ++v) {
            const double rate = tcr(l2_difference(a, b, v, grid),
                                    l2_difference(b, c, v, grid));
            row.push_back(rate);
            const double lo = (v == kVarP || v == kVarT) ? 1.5 : 1.8;
            if (!(rate >= lo && rate <= 3.4)) ok = false;
        }
        t.rows.push_back(row);
    }
    emit(cfg, t, "mms_tcr.txt");
    if (!ok) {
        std::cerr << "temporal convergence rate outside the accepted range\n";
        return kExitAcceptance;
    }
    return 0;
}

int run_mach_sweep(const RunConfig& cfg) {
    const double tau = cfg.tau > 0.0 ? cfg.tau : 1e-3;
    const MacGrid grid =
        build_grid(manufactured_sector(), cfg.n, cfg.n, cfg.n);

    Table t;
    t.title = "pressure fluctuation vs Mach number, 100 steps";
    t.columns = {"n", "M0", "max_dp"};
    std::vector<double> dp;
    for (double m0 : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        const ManufacturedParams mp = ManufacturedParams::with_mach(m0);
        const GasParams gas = manufactured_gas(mp);
        const BoundaryConditions bc = manufactured_bc(mp);
        Environment env;
        const SourceFn src = [&](double tt) {
            return sample_manufactured_source(mp, grid, tt);
        };
        PicardConfig pc;
        pc.tau = tau;
        pc.k_iters = cfg.k_iters;
        pc.n_threads = cfg.threads;
        std::vector<StepDiagnostics> trace;
        advance(sample_manufactured_state(mp, grid, 0.0), 0.0, 100, pc, grid,
                gas, env, bc, src, mp.p0, &trace);
        double max_dp = 0.0;
        for (const StepDiagnostics& s : trace)
            max_dp = std::max(max_dp, s.max_dp);
        dp.push_back(max_dp);
        t.rows.push_back({static_cast<double>(cfg.n), m0, max_dp});
    }
    emit(cfg, t, "mms_mach_sweep.txt");

    bool ok = true;
    for (int i = 0; i + 1 < 3; ++i) { // decades 1e-2 -> 1e-4
        const double ratio = dp[i] / dp[i + 1];
        if (!(ratio >= 50.0 && ratio <= 200.0)) ok = false;
    }
    if (std::abs(grid.diameter() - 0.12) < 0.02 &&
        !(dp[0] >= 1.3e-4 && dp[0] <= 1.2e-3))
        ok = false;
    if (!ok) {
        std::cerr << "pressure fluctuation does not scale as M0^2\n";
        return kExitAcceptance;
    }
    return 0;
}

int run_thermal(const RunConfig& cfg, const CaseSpec& spec) {
    PicardConfig pc;
    pc.tau = cfg.tau > 0.0 ? cfg.tau : 0.25;
    pc.k_iters = cfg.k_iters;
    pc.n_threads = cfg.threads;
    const double t_end = cfg.t_end > 0.0 ? cfg.t_end : 100.0;
    const int steps = std::max(1, static_cast<int>(std::llround(t_end / pc.tau)));
    const int cadence = cfg.snapshot_every > 0 ? cfg.snapshot_every : steps;

    const CaseRunResult r = run_case(spec, pc, cfg.n, steps, cadence);

    for (const CaseSlice& s : r.slices) {
        SliceData sd;
        sd.variable = "theta_perturbation";
        sd.time = s.time;
        sd.n1 = s.nr;
        sd.n2 = s.ntheta;
        for (int i = 0; i < s.nr; ++i) sd.coord1.push_back(r.grid.r_center(i));
        for (int j = 0; j < s.ntheta; ++j)
            sd.coord2.push_back(r.grid.theta_center(j));
        sd.values = s.values;
        char name[64];
        std::snprintf(name, sizeof name, "slice_%06d.txt", s.step);
        write_slice(sd, out_path(cfg, name));
    }
    write_structured_snapshot(r.state, r.grid,
                              out_path(cfg, "snapshot_final.txt"));

    Table t;
    t.title = std::string("bubble run diagnostics, n=") + std::to_string(cfg.n);
    t.columns = {"step", "time", "max_dp", "courant"};
    for (const StepDiagnostics& s : r.trace)
        t.rows.push_back(
            {static_cast<double>(s.step), s.time, s.max_dp, s.courant});
    emit(cfg, t, "diagnostics.txt");
    std::cout << "bubble centre height: "
              << bubble_center_height(r.state, spec, r.grid) << " m\n";
    return 0;
}

int run_custom(const RunConfig& cfg) {
    const double tau = cfg.tau > 0.0 ? cfg.tau : 1e-3;
    const double t_end = cfg.t_end > 0.0 ? cfg.t_end : 1e-2;
    const ManufacturedParams mp = ManufacturedParams::with_mach(cfg.mach);
    const std::vector<ErrorReport> reports = convergence_study(
        mp, {cfg.n}, tau, t_end, cfg.k_iters, cfg.threads);

    Table t;
    t.title = "single-run errors vs exact flow";
    t.columns = {"variable", "l2_error"};
    // First column is the variable index; names are listed in the title
    // order p, u_r, u_theta, u_phi, T.
    for (int v = 0; v < kNumVars; ++v)
        t.rows.push_back({static_cast<double>(v), reports[0].l2[v]});
    emit(cfg, t, "custom_errors.txt");

    const MacGrid grid =
        build_grid(manufactured_sector(), cfg.n, cfg.n, cfg.n);
    write_structured_snapshot(sample_manufactured_state(mp, grid, t_end),
                              grid, out_path(cfg, "snapshot_exact.txt"));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shellflow: compressible flow in a spherical-shell sector"};
    std::string config_path, mode_flag, out_flag;
    int threads_flag = 0;
    app.add_option("--config", config_path, "path to a key=value config file")
        ->required();
    app.add_option("--mode", mode_flag, "override the config file's mode");
    app.add_option("--threads", threads_flag, "pencil-solver thread count");
    app.add_option("--out", out_flag, "output directory");
    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    try {
        cfg = parse_config_file(config_path);
        if (!mode_flag.empty()) cfg.mode = mode_from_name(mode_flag);
        if (threads_flag > 0) cfg.threads = threads_flag;
        if (!out_flag.empty()) cfg.out_dir = out_flag;
        cfg.validate();
        std::filesystem::create_directories(cfg.out_dir);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        switch (cfg.mode) {
        case RunMode::mms_convergence: return run_mms_convergence(cfg);
        case RunMode::mms_tcr: return run_mms_tcr(cfg);
        case RunMode::mms_mach_sweep: return run_mach_sweep(cfg);
        case RunMode::thermal1: return run_thermal(cfg, build_thermal1());
        case RunMode::thermal2: return run_thermal(cfg, build_thermal2());
        case RunMode::custom: return run_custom(cfg);
        }
    } catch (const SolverDivergence& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const NonPhysicalState& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
