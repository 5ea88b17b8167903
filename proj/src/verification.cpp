#include "shellflow/verification.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace shellflow {

void eval_manufactured(const ManufacturedParams& mp, double r, double th,
                       double ph, double t, double out6[6]) {
    manufactured_state(mp, r, th, ph, t, out6);
    out6[5] = 1.0;
}

double l2_difference(const FieldSet& a, const FieldSet& b, int var,
                     const MacGrid& grid) {
    Field3 d = a.component(var);
    const auto& src = b.component(var).raw();
    auto& dst = d.raw();
    for (std::size_t n = 0; n < dst.size(); ++n) dst[n] -= src[n];
    return l2_norm(d, var_location(var), grid);
}

std::vector<ErrorReport> convergence_study(const ManufacturedParams& mp,
                                           const std::vector<int>& grids,
                                           double tau, double t_end,
                                           int k_iters, int n_threads) {
    const GasParams gas = manufactured_gas(mp);
    const BoundaryConditions bc = manufactured_bc(mp);
    Environment env;
    env.omega = 0.0;
    env.gravity = 0.0;

    const int n_steps = static_cast<int>(std::llround(t_end / tau));
    if (n_steps < 1 || std::abs(n_steps * tau - t_end) > 1e-12 * t_end)
        throw std::invalid_argument("t_end must be a positive multiple of tau");

    std::vector<ErrorReport> reports;
    for (std::size_t gi = 0; gi < grids.size(); ++gi) {
        const int n = grids[gi];
        const MacGrid g = build_grid(manufactured_sector(), n, n, n);
        const SourceFn src = [&mp, &g](double t) {
            return sample_manufactured_source(mp, g, t);
        };
        PicardConfig cfg;
        cfg.tau = tau;
        cfg.k_iters = k_iters;
        cfg.n_threads = n_threads;

        FieldSet U = sample_manufactured_state(mp, g, 0.0);
        U = advance(U, 0.0, n_steps, cfg, g, gas, env, bc, src, mp.p0);
        const FieldSet X = sample_manufactured_state(mp, g, t_end);

        ErrorReport rep;
        rep.n = n;
        rep.d = g.diameter();
        rep.tau = tau;
        for (int v = 0; v < kNumVars; ++v) {
            rep.l2[v] = l2_difference(U, X, v, g);
            Field3 d = U.component(v);
            const auto& xr = X.component(v).raw();
            auto& dr = d.raw();
            for (std::size_t m = 0; m < dr.size(); ++m) dr[m] -= xr[m];
            rep.max[v] = max_norm(d);
            rep.order[v] = std::numeric_limits<double>::quiet_NaN();
            if (gi > 0) {
                const ErrorReport& prevr = reports.back();
                rep.order[v] = std::log(prevr.l2[v] / rep.l2[v]) /
                               std::log(prevr.d / rep.d);
            }
        }
        reports.push_back(rep);
    }
    return reports;
}

double tcr(double diff_coarse, double diff_fine) {
    if (diff_coarse == 0.0)
        return -std::numeric_limits<double>::infinity();
    if (diff_fine == 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    return std::log2(diff_coarse / diff_fine);
}

namespace {

struct CenterState {
    Field3 rho, ur, ut, up, Q[5]; // conserved: rho, rho u, E
};

CenterState center_conserved(const FieldSet& U, const MacGrid& g,
                             const GasParams& gas, const Environment& env) {
    CenterState c;
    c.rho = Field3(g.nr, g.ntheta, g.nphi);
    c.ur = Field3(g.nr, g.ntheta, g.nphi);
    c.ut = Field3(g.nr, g.ntheta, g.nphi);
    c.up = Field3(g.nr, g.ntheta, g.nphi);
    for (auto& q : c.Q) q = Field3(g.nr, g.ntheta, g.nphi);
    for (int i = 0; i < g.nr; ++i) {
        const double r = g.r_center(i);
        for (int j = 0; j < g.ntheta; ++j)
            for (int k = 0; k < g.nphi; ++k) {
                const double rho = density(gas, U.p(i, j, k), U.T(i, j, k));
                const double ur = 0.5 * (U.u_r(i, j, k) + U.u_r(i + 1, j, k));
                const double ut =
                    0.5 * (U.u_theta(i, j, k) + U.u_theta(i, j + 1, k));
                const double up =
                    0.5 * (U.u_phi(i, j, k) + U.u_phi(i, j, k + 1));
                c.rho(i, j, k) = rho;
                c.ur(i, j, k) = ur;
                c.ut(i, j, k) = ut;
                c.up(i, j, k) = up;
                c.Q[0](i, j, k) = rho;
                c.Q[1](i, j, k) = rho * ur;
                c.Q[2](i, j, k) = rho * ut;
                c.Q[3](i, j, k) = rho * up;
                c.Q[4](i, j, k) =
                    rho * gas.cv * U.T(i, j, k) + gas.pi_inf +
                    0.5 * rho * (ur * ur + ut * ut + up * up) +
                    rho * env.gravity * r;
            }
    }
    return c;
}

} // namespace

ConservativeResidual conservative_residual(
    const FieldSet& prev, const FieldSet& curr, const FieldSet& next,
    double tau, const MacGrid& g, const GasParams& gas,
    const Environment& env, const ConservedSourceFn& source) {
    const CenterState cm = center_conserved(prev, g, gas, env);
    const CenterState cc = center_conserved(curr, g, gas, env);
    const CenterState cp = center_conserved(next, g, gas, env);

    const double dr = g.dr, dth = g.dtheta, dph = g.dphi;
    const double kap = gas.kappa();
    const FieldSet& U = curr;

    // Center-averaged velocity components; valid wherever the two
    // neighbouring face values exist (including one ghost layer).
    const auto urc = [&](int i, int j, int k) {
        return 0.5 * (U.u_r(i, j, k) + U.u_r(i + 1, j, k));
    };
    const auto utc = [&](int i, int j, int k) {
        return 0.5 * (U.u_theta(i, j, k) + U.u_theta(i, j + 1, k));
    };
    const auto upc = [&](int i, int j, int k) {
        return 0.5 * (U.u_phi(i, j, k) + U.u_phi(i, j, k + 1));
    };
    const auto sig_of = [&](const double Gt[3][3], double sig[3][3]) {
        const double trG = Gt[0][0] + Gt[1][1] + Gt[2][2];
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                sig[a][b] = gas.mu * (Gt[a][b] + Gt[b][a] -
                                      (a == b ? 2.0 / 3 * trG : 0.0));
    };

    // Fluxes of the current state at the faces of each cell (standard MAC
    // conservative form: compact differences and two-point averages keep
    // the truncation constants small).  Fr[q](i,j,k): flux of conserved
    // quantity q through the radial face at r_face(i); likewise Ft at
    // theta_face(j) and Fp at phi_face(k).  Momentum components are stored
    // as q = 1..3.
    Field3 Fr[5], Ft[5], Fp[5];
    for (int q = 0; q < 5; ++q) {
        Fr[q] = Field3(g.nr, g.ntheta, g.nphi);
        Ft[q] = Field3(g.nr, g.ntheta, g.nphi);
        Fp[q] = Field3(g.nr, g.ntheta, g.nphi);
    }

    // Radial faces i = 1..nr-1 (cells i-1 | i).
    for (int i = 1; i < g.nr; ++i) {
        const double rf = g.r_face(i);
        for (int j = 1; j < g.ntheta - 1; ++j) {
            const double th = g.theta_center(j);
            const double s = std::sin(th), ct = std::cos(th) / s;
            for (int k = 1; k < g.nphi - 1; ++k) {
                const double un = U.u_r(i, j, k);
                const double ut = 0.5 * (utc(i - 1, j, k) + utc(i, j, k));
                const double up = 0.5 * (upc(i - 1, j, k) + upc(i, j, k));
                const double rho =
                    0.5 * (cc.rho(i - 1, j, k) + cc.rho(i, j, k));
                const double pf = 0.5 * (U.p(i - 1, j, k) + U.p(i, j, k));
                const double Ef =
                    0.5 * (cc.Q[4](i - 1, j, k) + cc.Q[4](i, j, k));
                double Gt[3][3];
                Gt[0][0] = (U.u_r(i + 1, j, k) - U.u_r(i - 1, j, k)) / (2 * dr);
                Gt[0][1] = (utc(i, j, k) - utc(i - 1, j, k)) / dr;
                Gt[0][2] = (upc(i, j, k) - upc(i - 1, j, k)) / dr;
                Gt[1][0] = (U.u_r(i, j + 1, k) - U.u_r(i, j - 1, k)) /
                               (2 * dth * rf) -
                           ut / rf;
                Gt[1][1] = (U.u_theta(i - 1, j + 1, k) - U.u_theta(i - 1, j, k) +
                            U.u_theta(i, j + 1, k) - U.u_theta(i, j, k)) /
                               (2 * dth * rf) +
                           un / rf;
                Gt[1][2] = (upc(i - 1, j + 1, k) + upc(i, j + 1, k) -
                            upc(i - 1, j - 1, k) - upc(i, j - 1, k)) /
                           (4 * dth * rf);
                Gt[2][0] = (U.u_r(i, j, k + 1) - U.u_r(i, j, k - 1)) /
                               (2 * dph * rf * s) -
                           up / rf;
                Gt[2][1] = (utc(i - 1, j, k + 1) + utc(i, j, k + 1) -
                            utc(i - 1, j, k - 1) - utc(i, j, k - 1)) /
                               (4 * dph * rf * s) -
                           ct * up / rf;
                Gt[2][2] = (U.u_phi(i - 1, j, k + 1) - U.u_phi(i - 1, j, k) +
                            U.u_phi(i, j, k + 1) - U.u_phi(i, j, k)) /
                               (2 * dph * rf * s) +
                           un / rf + ct * ut / rf;
                double sig[3][3];
                sig_of(Gt, sig);
                const double uf[3] = {un, ut, up};
                const double qr =
                    -kap * (U.T(i, j, k) - U.T(i - 1, j, k)) / dr;
                Fr[0](i, j, k) = rho * un;
                for (int b = 0; b < 3; ++b)
                    Fr[1 + b](i, j, k) =
                        rho * un * uf[b] + (b == 0 ? pf : 0.0) - sig[0][b];
                Fr[4](i, j, k) = (Ef + pf) * un -
                                 (sig[0][0] * un + sig[0][1] * ut +
                                  sig[0][2] * up) +
                                 qr;
            }
        }
    }

    // Theta faces j = 1..ntheta-1 (cells j-1 | j).
    for (int i = 1; i < g.nr - 1; ++i) {
        const double r = g.r_center(i);
        for (int j = 1; j < g.ntheta; ++j) {
            const double thf = g.theta_face(j);
            const double sf = std::sin(thf), ctf = std::cos(thf) / sf;
            for (int k = 1; k < g.nphi - 1; ++k) {
                const double un = U.u_theta(i, j, k);
                const double ur = 0.5 * (urc(i, j - 1, k) + urc(i, j, k));
                const double up = 0.5 * (upc(i, j - 1, k) + upc(i, j, k));
                const double rho =
                    0.5 * (cc.rho(i, j - 1, k) + cc.rho(i, j, k));
                const double pf = 0.5 * (U.p(i, j - 1, k) + U.p(i, j, k));
                const double Ef =
                    0.5 * (cc.Q[4](i, j - 1, k) + cc.Q[4](i, j, k));
                double Gt[3][3];
                Gt[0][0] = (U.u_r(i + 1, j - 1, k) - U.u_r(i, j - 1, k) +
                            U.u_r(i + 1, j, k) - U.u_r(i, j, k)) /
                           (2 * dr);
                Gt[0][1] =
                    (U.u_theta(i + 1, j, k) - U.u_theta(i - 1, j, k)) /
                    (2 * dr);
                Gt[0][2] = (upc(i + 1, j - 1, k) + upc(i + 1, j, k) -
                            upc(i - 1, j - 1, k) - upc(i - 1, j, k)) /
                           (4 * dr);
                Gt[1][0] = (urc(i, j, k) - urc(i, j - 1, k)) / (dth * r) -
                           un / r;
                Gt[1][1] = (U.u_theta(i, j + 1, k) - U.u_theta(i, j - 1, k)) /
                               (2 * dth * r) +
                           ur / r;
                Gt[1][2] = (upc(i, j, k) - upc(i, j - 1, k)) / (dth * r);
                Gt[2][0] = (urc(i, j - 1, k + 1) + urc(i, j, k + 1) -
                            urc(i, j - 1, k - 1) - urc(i, j, k - 1)) /
                               (4 * dph * r * sf) -
                           up / r;
                Gt[2][1] = (U.u_theta(i, j, k + 1) - U.u_theta(i, j, k - 1)) /
                               (2 * dph * r * sf) -
                           ctf * up / r;
                Gt[2][2] = (U.u_phi(i, j - 1, k + 1) - U.u_phi(i, j - 1, k) +
                            U.u_phi(i, j, k + 1) - U.u_phi(i, j, k)) /
                               (2 * dph * r * sf) +
                           ur / r + ctf * un / r;
                double sig[3][3];
                sig_of(Gt, sig);
                const double uf[3] = {ur, un, up};
                const double qt =
                    -kap * (U.T(i, j, k) - U.T(i, j - 1, k)) / (dth * r);
                Ft[0](i, j, k) = rho * un;
                for (int b = 0; b < 3; ++b)
                    Ft[1 + b](i, j, k) =
                        rho * un * uf[b] + (b == 1 ? pf : 0.0) - sig[1][b];
                Ft[4](i, j, k) = (Ef + pf) * un -
                                 (sig[1][0] * ur + sig[1][1] * un +
                                  sig[1][2] * up) +
                                 qt;
            }
        }
    }

    // Phi faces k = 1..nphi-1 (cells k-1 | k).
    for (int i = 1; i < g.nr - 1; ++i) {
        const double r = g.r_center(i);
        for (int j = 1; j < g.ntheta - 1; ++j) {
            const double th = g.theta_center(j);
            const double s = std::sin(th), ct = std::cos(th) / s;
            for (int k = 1; k < g.nphi; ++k) {
                const double un = U.u_phi(i, j, k);
                const double ur = 0.5 * (urc(i, j, k - 1) + urc(i, j, k));
                const double ut = 0.5 * (utc(i, j, k - 1) + utc(i, j, k));
                const double rho =
                    0.5 * (cc.rho(i, j, k - 1) + cc.rho(i, j, k));
                const double pf = 0.5 * (U.p(i, j, k - 1) + U.p(i, j, k));
                const double Ef =
                    0.5 * (cc.Q[4](i, j, k - 1) + cc.Q[4](i, j, k));
                double Gt[3][3];
                Gt[0][0] = (U.u_r(i + 1, j, k - 1) - U.u_r(i, j, k - 1) +
                            U.u_r(i + 1, j, k) - U.u_r(i, j, k)) /
                           (2 * dr);
                Gt[0][1] = (utc(i + 1, j, k - 1) + utc(i + 1, j, k) -
                            utc(i - 1, j, k - 1) - utc(i - 1, j, k)) /
                           (4 * dr);
                Gt[0][2] =
                    (U.u_phi(i + 1, j, k) - U.u_phi(i - 1, j, k)) / (2 * dr);
                Gt[1][0] = (urc(i, j + 1, k - 1) + urc(i, j + 1, k) -
                            urc(i, j - 1, k - 1) - urc(i, j - 1, k)) /
                               (4 * dth * r) -
                           ut / r;
                Gt[1][1] = (U.u_theta(i, j + 1, k - 1) - U.u_theta(i, j, k - 1) +
                            U.u_theta(i, j + 1, k) - U.u_theta(i, j, k)) /
                               (2 * dth * r) +
                           ur / r;
                Gt[1][2] = (U.u_phi(i, j + 1, k) - U.u_phi(i, j - 1, k)) /
                           (2 * dth * r);
                Gt[2][0] = (urc(i, j, k) - urc(i, j, k - 1)) / (dph * r * s) -
                           un / r;
                Gt[2][1] = (utc(i, j, k) - utc(i, j, k - 1)) / (dph * r * s) -
                           ct * un / r;
                Gt[2][2] = (U.u_phi(i, j, k + 1) - U.u_phi(i, j, k - 1)) /
                               (2 * dph * r * s) +
                           ur / r + ct * ut / r;
                double sig[3][3];
                sig_of(Gt, sig);
                const double uf[3] = {ur, ut, un};
                const double qp =
                    -kap * (U.T(i, j, k) - U.T(i, j, k - 1)) / (dph * r * s);
                Fp[0](i, j, k) = rho * un;
                for (int b = 0; b < 3; ++b)
                    Fp[1 + b](i, j, k) =
                        rho * un * uf[b] + (b == 2 ? pf : 0.0) - sig[2][b];
                Fp[4](i, j, k) = (Ef + pf) * un -
                                 (sig[2][0] * ur + sig[2][1] * ut +
                                  sig[2][2] * un) +
                                 qp;
            }
        }
    }

    // Metric source terms need the stress tensor at cell centers.
    const GradTensor G = velocity_gradient(curr, g);

    // Compact flux divergence plus metric terms, one ring in from every
    // boundary; time derivative central over the three states.
    Field3 res[5];
    for (auto& f : res) f = Field3(g.nr, g.ntheta, g.nphi);
    for (int i = 1; i < g.nr - 1; ++i) {
        const double r = g.r_center(i);
        const double rfp = g.r_face(i + 1), rfm = g.r_face(i);
        for (int j = 1; j < g.ntheta - 1; ++j) {
            const double s = std::sin(g.theta_center(j));
            const double sfp = std::sin(g.theta_face(j + 1));
            const double sfm = std::sin(g.theta_face(j));
            // Discrete cot(theta), matched to the sin-weighted theta flux
            // divergence so that an isotropic stress (rest state) cancels
            // to machine precision.
            const double ct = (sfp - sfm) / (dth * s);
            for (int k = 1; k < g.nphi - 1; ++k) {
                for (int q = 0; q < 5; ++q) {
                    const double div =
                        (rfp * rfp * Fr[q](i + 1, j, k) -
                         rfm * rfm * Fr[q](i, j, k)) /
                            (dr * r * r) +
                        (sfp * Ft[q](i, j + 1, k) -
                         sfm * Ft[q](i, j, k)) /
                            (dth * r * s) +
                        (Fp[q](i, j, k + 1) - Fp[q](i, j, k)) /
                            (dph * r * s);
                    res[q](i, j, k) =
                        (cp.Q[q](i, j, k) - cm.Q[q](i, j, k)) / (2 * tau) +
                        div;
                }
                // momentum metric terms and gravity, from center values
                const double rho = cc.rho(i, j, k);
                const double uc[3] = {cc.ur(i, j, k), cc.ut(i, j, k),
                                      cc.up(i, j, k)};
                const double p = curr.p(i, j, k);
                double Gt[3][3];
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b) Gt[a][b] = G.g[a][b](i, j, k);
                double sig[3][3];
                sig_of(Gt, sig);
                const double Ttt = rho * uc[1] * uc[1] + p - sig[1][1];
                const double Tpp = rho * uc[2] * uc[2] + p - sig[2][2];
                const double Trt = rho * uc[0] * uc[1] - sig[0][1];
                const double Trp = rho * uc[0] * uc[2] - sig[0][2];
                const double Ttp = rho * uc[1] * uc[2] - sig[1][2];
                res[1](i, j, k) += -(Ttt + Tpp) / r + rho * env.gravity;
                res[2](i, j, k) += Trt / r - ct * Tpp / r;
                res[3](i, j, k) += Trp / r + ct * Ttp / r;
                if (source) {
                    double src[5];
                    source(r, g.theta_center(j), g.phi_center(k), src);
                    for (int q = 0; q < 5; ++q) res[q](i, j, k) -= src[q];
                }
            }
        }
    }

    ConservativeResidual out;
    for (int q = 0; q < 5; ++q) {
        double sq = 0.0;
        for (int i = 1; i < g.nr - 1; ++i) {
            const double r = g.r_center(i);
            for (int j = 1; j < g.ntheta - 1; ++j) {
                const double w0 =
                    r * r * std::sin(g.theta_center(j)) * g.dr * g.dtheta *
                    g.dphi;
                for (int k = 1; k < g.nphi - 1; ++k)
                    sq += w0 * res[q](i, j, k) * res[q](i, j, k);
            }
        }
        out.norm[q] = std::sqrt(sq);
    }
    return out;
}

double pressure_fluctuation(const FieldSet& U, double p0) {
    double mx = 0.0;
    const Field3& p = U.p;
    for (int i = 0; i < p.nx(); ++i)
        for (int j = 0; j < p.ny(); ++j)
            for (int k = 0; k < p.nz(); ++k)
                mx = std::max(mx, std::abs(p(i, j, k) - p0) / p0);
    return mx;
}

void write_convergence_table(const std::string& path,
                             const std::vector<ErrorReport>& reports) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    static const char* names[kNumVars] = {"p", "u_r", "u_theta", "u_phi",
                                          "T"};
    f << "d\ttau\tvariable\tl2_error\torder\n";
    f.precision(17);
    for (const ErrorReport& r : reports)
        for (int v = 0; v < kNumVars; ++v) {
            f << r.d << '\t' << r.tau << '\t' << names[v] << '\t' << r.l2[v]
              << '\t';
            if (std::isnan(r.order[v]))
                f << "n/a";
            else
                f << r.order[v];
            f << '\n';
        }
    if (!f) throw std::runtime_error("write failure: " + path);
}

} // namespace shellflow
