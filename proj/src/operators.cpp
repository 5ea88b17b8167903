#include "shellflow/operators.hpp"

#include "shellflow/parallel.hpp"

#include <cmath>

namespace shellflow {

namespace {

// 2-point averages of face fields to the cell center.
inline double ravg(const Field3& f, int i, int j, int k) {
    return 0.5 * (f(i, j, k) + f(i + 1, j, k));
}
inline double tavg(const Field3& f, int i, int j, int k) {
    return 0.5 * (f(i, j, k) + f(i, j + 1, k));
}
inline double pavg(const Field3& f, int i, int j, int k) {
    return 0.5 * (f(i, j, k) + f(i, j, k + 1));
}

} // namespace

GradTensor velocity_gradient(const FieldSet& U, const MacGrid& g) {
    GradTensor G;
    for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c) G.g[a][c] = Field3(g.nr, g.ntheta, g.nphi);

    const double dr = g.dr, dth = g.dtheta, dph = g.dphi;
    for (int i = 0; i < g.nr; ++i) {
        const double r = g.r_center(i);
        for (int j = 0; j < g.ntheta; ++j) {
            const double th = g.theta_center(j);
            const double s = std::sin(th), ct = std::cos(th) / s;
            for (int k = 0; k < g.nphi; ++k) {
                const double urc = ravg(U.u_r, i, j, k);
                const double utc = tavg(U.u_theta, i, j, k);
                const double upc = pavg(U.u_phi, i, j, k);

                G.g[0][0](i, j, k) = (U.u_r(i + 1, j, k) - U.u_r(i, j, k)) / dr;
                G.g[0][1](i, j, k) =
                    (tavg(U.u_theta, i + 1, j, k) - tavg(U.u_theta, i - 1, j, k)) / (2 * dr);
                G.g[0][2](i, j, k) =
                    (pavg(U.u_phi, i + 1, j, k) - pavg(U.u_phi, i - 1, j, k)) / (2 * dr);

                G.g[1][0](i, j, k) =
                    (ravg(U.u_r, i, j + 1, k) - ravg(U.u_r, i, j - 1, k)) / (2 * dth * r) -
                    utc / r;
                G.g[1][1](i, j, k) =
                    (U.u_theta(i, j + 1, k) - U.u_theta(i, j, k)) / (dth * r) + urc / r;
                G.g[1][2](i, j, k) =
                    (pavg(U.u_phi, i, j + 1, k) - pavg(U.u_phi, i, j - 1, k)) / (2 * dth * r);

                G.g[2][0](i, j, k) =
                    (ravg(U.u_r, i, j, k + 1) - ravg(U.u_r, i, j, k - 1)) / (2 * dph * r * s) -
                    upc / r;
                G.g[2][1](i, j, k) =
                    (tavg(U.u_theta, i, j, k + 1) - tavg(U.u_theta, i, j, k - 1)) /
                        (2 * dph * r * s) -
                    ct * upc / r;
                G.g[2][2](i, j, k) =
                    (U.u_phi(i, j, k + 1) - U.u_phi(i, j, k)) / (dph * r * s) + urc / r +
                    ct * utc / r;
            }
        }
    }
    return G;
}

CoefficientState build_coefficient_state(const FieldSet& Uk, const FieldSet& Un,
                                         const MacGrid& g, const GasParams& gas) {
    CoefficientState cs;
    cs.half = Uk;
    for (int v = 0; v < kNumVars; ++v) {
        auto& dst = cs.half.component(v).raw();
        const auto& src = Un.component(v).raw();
        for (std::size_t n = 0; n < dst.size(); ++n) dst[n] = 0.5 * (dst[n] + src[n]);
    }

    cs.rho = Field3(g.nr, g.ntheta, g.nphi);
    for (int i = -1; i <= g.nr; ++i)
        for (int j = -1; j <= g.ntheta; ++j)
            for (int k = -1; k <= g.nphi; ++k)
                cs.rho(i, j, k) = density(gas, cs.half.p(i, j, k), cs.half.T(i, j, k));

    cs.grad = velocity_gradient(cs.half, g);

    cs.gamma_div = Field3(g.nr, g.ntheta, g.nphi);
    cs.gamma_div_phi = Field3(g.nr, g.ntheta, g.nphi);
    cs.cc = Field3(g.nr, g.ntheta, g.nphi);
    cs.c_div = Field3(g.nr, g.ntheta, g.nphi);
    cs.c_div_phi = Field3(g.nr, g.ntheta, g.nphi);
    const double gm1 = gas.gamma - 1.0;
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.ntheta; ++j)
            for (int k = 0; k < g.nphi; ++k) {
                const double p = cs.half.p(i, j, k), T = cs.half.T(i, j, k);
                const double grr = cs.grad.g[0][0](i, j, k);
                const double gtt = cs.grad.g[1][1](i, j, k);
                const double gpp = cs.grad.g[2][2](i, j, k);
                cs.gamma_div(i, j, k) =
                    gas.gamma * (p + gas.pi_inf) +
                    (2.0 * gas.mu * gm1 / 3.0) * (grr + gtt + gpp);
                cs.gamma_div_phi(i, j, k) =
                    gas.gamma * (p + gas.pi_inf) +
                    (2.0 * gas.mu * gm1 / 3.0) * (grr + gtt - 2.0 * gpp);
                const double c = gm1 * T / (p + gas.pi_inf);
                cs.cc(i, j, k) = c;
                cs.c_div(i, j, k) =
                    gm1 * T + (2.0 * gas.mu / 3.0) * c * (grr + gtt + gpp);
                cs.c_div_phi(i, j, k) =
                    gm1 * T + (2.0 * gas.mu / 3.0) * c * (grr + gtt - 2.0 * gpp);
            }
    return cs;
}

std::uint8_t entry_state(int v, int i, int j, int k,
                         const BoundaryConditions& bc, const MacGrid& g) {
    int nx, ny, nz;
    g.extents(var_location(v), nx, ny, nz);
    if (i < 0 || i >= nx || j < 0 || j >= ny || k < 0 || k >= nz) return 0;
    switch (v) {
    case kVarUr:
        if ((i == 0 || i == nx - 1) && bc.var[v].kind[0] == BcKind::dirichlet) return 2;
        break;
    case kVarUtheta:
        if ((j == 0 || j == ny - 1) && bc.var[v].kind[1] == BcKind::dirichlet) return 2;
        break;
    case kVarUphi:
        if ((k == 0 || k == nz - 1) && bc.var[v].kind[2] == BcKind::dirichlet) return 2;
        break;
    default:
        break;
    }
    return 1;
}

namespace {

void blocks_r(int j, int k, const CoefficientState& cs,
              const BoundaryConditions& bc, const MacGrid& g,
              const GasParams& gas, PencilBlocks& B) {
    const double dr = g.dr, dth = g.dtheta, dph = g.dphi;
    const double mu = gas.mu, gm1 = gas.gamma - 1.0, kap = gas.kappa();
    const FieldSet& H = cs.half;

    for (int s = 0; s < B.n; ++s) {
        auto& st = B.state[s];
        for (int v = 0; v < kNumVars; ++v) st[v] = entry_state(v, s, j, k, bc, g);
        Mat5& L = B.lower[s];
        Mat5& D = B.diag[s];
        Mat5& Uo = B.upper[s];

        const double rc = g.r_center(s);
        const double rf0 = g.r_face(s), rf1 = g.r_face(s + 1);

        if (st[kVarP] == 1 || st[kVarT] == 1) {
            const double urc = ravg(H.u_r, s, j, k);
            const double grr = cs.grad.g[0][0](s, j, k);
            const double gtt = cs.grad.g[1][1](s, j, k);
            const double gpp = cs.grad.g[2][2](s, j, k);

            // p row: A1^r, A2^r, A3^r
            Uo(kVarP, kVarP) += urc / (2 * dr);
            L(kVarP, kVarP) -= urc / (2 * dr);
            {
                const double Gam = cs.gamma_div(s, j, k), mg = mu * gm1;
                D(kVarP, kVarUr) += -Gam * rf0 * rf0 / (rc * rc * dr) +
                                    2 * mg * grr / dr - mg * (gtt + gpp) / rc;
                Uo(kVarP, kVarUr) += Gam * rf1 * rf1 / (rc * rc * dr) -
                                     2 * mg * grr / dr - mg * (gtt + gpp) / rc;
                const double c3 = -gm1 * kap / (rc * rc * dr * dr);
                Uo(kVarP, kVarT) += c3 * rf1 * rf1;
                D(kVarP, kVarT) -= c3 * (rf1 * rf1 + rf0 * rf0);
                L(kVarP, kVarT) += c3 * rf0 * rf0;
            }
            // T row: C2^r, C3^r
            {
                Uo(kVarT, kVarT) += urc / (2 * dr);
                L(kVarT, kVarT) -= urc / (2 * dr);
                const double ccv = cs.cc(s, j, k);
                const double c3 = -ccv * kap / (rc * rc * dr * dr);
                Uo(kVarT, kVarT) += c3 * rf1 * rf1;
                D(kVarT, kVarT) -= c3 * (rf1 * rf1 + rf0 * rf0);
                L(kVarT, kVarT) += c3 * rf0 * rf0;
                const double Gc = cs.c_div(s, j, k), mc = mu * ccv;
                D(kVarT, kVarUr) += -Gc * rf0 * rf0 / (rc * rc * dr) +
                                    2 * mc * grr / dr - mc * (gtt + gpp) / rc;
                Uo(kVarT, kVarUr) += Gc * rf1 * rf1 / (rc * rc * dr) -
                                     2 * mc * grr / dr - mc * (gtt + gpp) / rc;
            }
        }

        if (st[kVarUr] == 1) {
            // B1^r + B2^{r,r}
            const double rf = g.r_face(s);
            const double rc0 = g.r_center(s - 1), rc1 = g.r_center(s);
            const double rhof = 0.5 * (cs.rho(s - 1, j, k) + cs.rho(s, j, k));
            D(kVarUr, kVarP) += 1.0 / (rhof * dr);
            L(kVarUr, kVarP) -= 1.0 / (rhof * dr);
            const double uadv = H.u_r(s, j, k);
            Uo(kVarUr, kVarUr) += uadv / (2 * dr);
            L(kVarUr, kVarUr) -= uadv / (2 * dr);
            const double cv = -mu / (rhof * rf * rf * dr * dr);
            Uo(kVarUr, kVarUr) += cv * rc1 * rc1;
            D(kVarUr, kVarUr) -= cv * (rc1 * rc1 + rc0 * rc0);
            L(kVarUr, kVarUr) += cv * rc0 * rc0;
            const double cgd = -mu / (3 * rhof * dr * dr);
            Uo(kVarUr, kVarUr) += cgd * rf1 * rf1 / (rc1 * rc1);
            D(kVarUr, kVarUr) -=
                cgd * rf0 * rf0 * (1.0 / (rc1 * rc1) + 1.0 / (rc0 * rc0));
            L(kVarUr, kVarUr) += cgd * g.r_face(s - 1) * g.r_face(s - 1) / (rc0 * rc0);
        }

        if (st[kVarUtheta] == 1) {
            // B2^{r,theta}
            const double rhot = 0.5 * (cs.rho(s, j - 1, k) + cs.rho(s, j, k));
            const double uadv = 0.25 * (H.u_r(s, j - 1, k) + H.u_r(s + 1, j - 1, k) +
                                        H.u_r(s, j, k) + H.u_r(s + 1, j, k));
            Uo(kVarUtheta, kVarUtheta) += uadv / (2 * dr);
            L(kVarUtheta, kVarUtheta) -= uadv / (2 * dr);
            const double cv = -mu / (rhot * rc * rc * dr * dr);
            Uo(kVarUtheta, kVarUtheta) += cv * rf1 * rf1;
            D(kVarUtheta, kVarUtheta) -= cv * (rf1 * rf1 + rf0 * rf0);
            L(kVarUtheta, kVarUtheta) += cv * rf0 * rf0;
        }

        if (st[kVarUphi] == 1) {
            // B2^{r,phi}
            const double rhop = 0.5 * (cs.rho(s, j, k - 1) + cs.rho(s, j, k));
            const double uadv = 0.25 * (H.u_r(s, j, k - 1) + H.u_r(s + 1, j, k - 1) +
                                        H.u_r(s, j, k) + H.u_r(s + 1, j, k));
            Uo(kVarUphi, kVarUphi) += uadv / (2 * dr);
            L(kVarUphi, kVarUphi) -= uadv / (2 * dr);
            const double cv = -mu / (rhop * rc * rc * dr * dr);
            Uo(kVarUphi, kVarUphi) += cv * rf1 * rf1;
            D(kVarUphi, kVarUphi) -= cv * (rf1 * rf1 + rf0 * rf0);
            L(kVarUphi, kVarUphi) += cv * rf0 * rf0;
        }
        (void)dth;
        (void)dph;
    }
}

void blocks_theta(int i, int k, const CoefficientState& cs,
                  const BoundaryConditions& bc, const MacGrid& g,
                  const GasParams& gas, PencilBlocks& B) {
    const double dth = g.dtheta;
    const double mu = gas.mu, gm1 = gas.gamma - 1.0, kap = gas.kappa();
    const FieldSet& H = cs.half;

    for (int s = 0; s < B.n; ++s) {
        auto& st = B.state[s];
        for (int v = 0; v < kNumVars; ++v) st[v] = entry_state(v, i, s, k, bc, g);
        Mat5& L = B.lower[s];
        Mat5& D = B.diag[s];
        Mat5& Uo = B.upper[s];

        const double rc = g.r_center(i);
        const double sc = std::sin(g.theta_center(s));
        const double sf0 = std::sin(g.theta_face(s)), sf1 = std::sin(g.theta_face(s + 1));

        if (st[kVarP] == 1 || st[kVarT] == 1) {
            const double ct = std::cos(g.theta_center(s)) / sc;
            const double utc = tavg(H.u_theta, i, s, k);
            const double gtt = cs.grad.g[1][1](i, s, k);
            const double gpp = cs.grad.g[2][2](i, s, k);
            const double grt = cs.grad.g[0][1](i, s, k);
            const double gtr = cs.grad.g[1][0](i, s, k);

            Uo(kVarP, kVarP) += utc / (2 * rc * dth);
            L(kVarP, kVarP) -= utc / (2 * rc * dth);
            {
                const double Gam = cs.gamma_div(i, s, k), mg = mu * gm1;
                const double metr = -mg * (2 * gpp * ct - grt - gtr) / (2 * rc);
                D(kVarP, kVarUtheta) += -Gam * sf0 / (rc * sc * dth) +
                                        2 * mg * gtt / (rc * dth) + metr;
                Uo(kVarP, kVarUtheta) += Gam * sf1 / (rc * sc * dth) -
                                         2 * mg * gtt / (rc * dth) + metr;
                const double c3 = -gm1 * kap / (rc * rc * sc * dth * dth);
                Uo(kVarP, kVarT) += c3 * sf1;
                D(kVarP, kVarT) -= c3 * (sf1 + sf0);
                L(kVarP, kVarT) += c3 * sf0;
            }
            {
                Uo(kVarT, kVarT) += utc / (2 * rc * dth);
                L(kVarT, kVarT) -= utc / (2 * rc * dth);
                const double ccv = cs.cc(i, s, k);
                const double c3 = -ccv * kap / (rc * rc * sc * dth * dth);
                Uo(kVarT, kVarT) += c3 * sf1;
                D(kVarT, kVarT) -= c3 * (sf1 + sf0);
                L(kVarT, kVarT) += c3 * sf0;
                const double Gc = cs.c_div(i, s, k), mc = mu * ccv;
                const double metr = -mc * (2 * gpp * ct - grt - gtr) / (2 * rc);
                D(kVarT, kVarUtheta) += -Gc * sf0 / (rc * sc * dth) +
                                        2 * mc * gtt / (rc * dth) + metr;
                Uo(kVarT, kVarUtheta) += Gc * sf1 / (rc * sc * dth) -
                                         2 * mc * gtt / (rc * dth) + metr;
            }
        }

        if (st[kVarUtheta] == 1) {
            // B1^theta + B2^{theta,theta}
            const double sf = std::sin(g.theta_face(s));
            const double sc0 = std::sin(g.theta_center(s - 1)), sc1 = sc;
            const double rhot = 0.5 * (cs.rho(i, s - 1, k) + cs.rho(i, s, k));
            D(kVarUtheta, kVarP) += 1.0 / (rhot * rc * dth);
            L(kVarUtheta, kVarP) -= 1.0 / (rhot * rc * dth);
            const double uadv = H.u_theta(i, s, k);
            Uo(kVarUtheta, kVarUtheta) += uadv / (2 * rc * dth);
            L(kVarUtheta, kVarUtheta) -= uadv / (2 * rc * dth);
            const double cv = -mu / (rhot * rc * rc * sf * dth * dth);
            Uo(kVarUtheta, kVarUtheta) += cv * sc1;
            D(kVarUtheta, kVarUtheta) -= cv * (sc1 + sc0);
            L(kVarUtheta, kVarUtheta) += cv * sc0;
            const double cgd = -mu / (3 * rhot * rc * rc * dth * dth);
            Uo(kVarUtheta, kVarUtheta) += cgd * sf1 / sc1;
            D(kVarUtheta, kVarUtheta) -= cgd * sf0 * (1.0 / sc1 + 1.0 / sc0);
            L(kVarUtheta, kVarUtheta) += cgd * std::sin(g.theta_face(s - 1)) / sc0;
        }

        if (st[kVarUr] == 1) {
            // B2^{theta,r}
            const double rf = g.r_face(i);
            const double rhof = 0.5 * (cs.rho(i - 1, s, k) + cs.rho(i, s, k));
            const double uadv = 0.25 * (H.u_theta(i - 1, s, k) + H.u_theta(i, s, k) +
                                        H.u_theta(i - 1, s + 1, k) + H.u_theta(i, s + 1, k));
            Uo(kVarUr, kVarUr) += uadv / (2 * rf * dth);
            L(kVarUr, kVarUr) -= uadv / (2 * rf * dth);
            const double cv = -mu / (rhof * rf * rf * sc * dth * dth);
            Uo(kVarUr, kVarUr) += cv * sf1;
            D(kVarUr, kVarUr) -= cv * (sf1 + sf0);
            L(kVarUr, kVarUr) += cv * sf0;
        }

        if (st[kVarUphi] == 1) {
            // B2^{theta,phi}
            const double rhop = 0.5 * (cs.rho(i, s, k - 1) + cs.rho(i, s, k));
            const double uadv = 0.25 * (H.u_theta(i, s, k - 1) + H.u_theta(i, s + 1, k - 1) +
                                        H.u_theta(i, s, k) + H.u_theta(i, s + 1, k));
            Uo(kVarUphi, kVarUphi) += uadv / (2 * rc * dth);
            L(kVarUphi, kVarUphi) -= uadv / (2 * rc * dth);
            const double cv = -mu / (rhop * rc * rc * sc * dth * dth);
            Uo(kVarUphi, kVarUphi) += cv * sf1;
            D(kVarUphi, kVarUphi) -= cv * (sf1 + sf0);
            L(kVarUphi, kVarUphi) += cv * sf0;
        }
    }
}

void blocks_phi(int i, int j, const CoefficientState& cs,
                const BoundaryConditions& bc, const MacGrid& g,
                const GasParams& gas, PencilBlocks& B) {
    const double dph = g.dphi;
    const double mu = gas.mu, gm1 = gas.gamma - 1.0, kap = gas.kappa();
    const FieldSet& H = cs.half;

    for (int s = 0; s < B.n; ++s) {
        auto& st = B.state[s];
        for (int v = 0; v < kNumVars; ++v) st[v] = entry_state(v, i, j, s, bc, g);
        Mat5& L = B.lower[s];
        Mat5& D = B.diag[s];
        Mat5& Uo = B.upper[s];

        const double rc = g.r_center(i);
        const double thc = g.theta_center(j);
        const double sc = std::sin(thc);

        if (st[kVarP] == 1 || st[kVarT] == 1) {
            const double ct = std::cos(thc) / sc;
            const double upc = pavg(H.u_phi, i, j, s);
            const double grp = cs.grad.g[0][2](i, j, s);
            const double gpr = cs.grad.g[2][0](i, j, s);
            const double gtp = cs.grad.g[1][2](i, j, s);
            const double gpt = cs.grad.g[2][1](i, j, s);

            Uo(kVarP, kVarP) += upc / (2 * rc * sc * dph);
            L(kVarP, kVarP) -= upc / (2 * rc * sc * dph);
            {
                const double Gam = cs.gamma_div_phi(i, j, s), mg = mu * gm1;
                const double metr = mg * ((gtp + gpt) * ct + grp + gpr) / (2 * rc);
                D(kVarP, kVarUphi) += -Gam / (rc * sc * dph) + metr;
                Uo(kVarP, kVarUphi) += Gam / (rc * sc * dph) + metr;
                const double c3 = -gm1 * kap / (rc * rc * sc * sc * dph * dph);
                Uo(kVarP, kVarT) += c3;
                D(kVarP, kVarT) -= 2 * c3;
                L(kVarP, kVarT) += c3;
            }
            {
                Uo(kVarT, kVarT) += upc / (2 * rc * sc * dph);
                L(kVarT, kVarT) -= upc / (2 * rc * sc * dph);
                const double ccv = cs.cc(i, j, s);
                const double c3 = -ccv * kap / (rc * rc * sc * sc * dph * dph);
                Uo(kVarT, kVarT) += c3;
                D(kVarT, kVarT) -= 2 * c3;
                L(kVarT, kVarT) += c3;
                const double Gc = cs.c_div_phi(i, j, s), mc = mu * ccv;
                const double metr = mc * ((gtp + gpt) * ct + grp + gpr) / (2 * rc);
                D(kVarT, kVarUphi) += -Gc / (rc * sc * dph) + metr;
                Uo(kVarT, kVarUphi) += Gc / (rc * sc * dph) + metr;
            }
        }

        if (st[kVarUphi] == 1) {
            // B1^phi + B2^{phi,phi}; viscous and grad-div pieces merge.
            const double rhop = 0.5 * (cs.rho(i, j, s - 1) + cs.rho(i, j, s));
            D(kVarUphi, kVarP) += 1.0 / (rhop * rc * sc * dph);
            L(kVarUphi, kVarP) -= 1.0 / (rhop * rc * sc * dph);
            const double uadv = H.u_phi(i, j, s);
            Uo(kVarUphi, kVarUphi) += uadv / (2 * rc * sc * dph);
            L(kVarUphi, kVarUphi) -= uadv / (2 * rc * sc * dph);
            const double cv = -4.0 * mu / (3 * rhop * rc * rc * sc * sc * dph * dph);
            Uo(kVarUphi, kVarUphi) += cv;
            D(kVarUphi, kVarUphi) -= 2 * cv;
            L(kVarUphi, kVarUphi) += cv;
        }

        if (st[kVarUr] == 1) {
            // B2^{phi,r}
            const double rf = g.r_face(i);
            const double rhof = 0.5 * (cs.rho(i - 1, j, s) + cs.rho(i, j, s));
            const double uadv = 0.25 * (H.u_phi(i - 1, j, s) + H.u_phi(i, j, s) +
                                        H.u_phi(i - 1, j, s + 1) + H.u_phi(i, j, s + 1));
            Uo(kVarUr, kVarUr) += uadv / (2 * rf * sc * dph);
            L(kVarUr, kVarUr) -= uadv / (2 * rf * sc * dph);
            const double cv = -mu / (rhof * rf * rf * sc * sc * dph * dph);
            Uo(kVarUr, kVarUr) += cv;
            D(kVarUr, kVarUr) -= 2 * cv;
            L(kVarUr, kVarUr) += cv;
        }

        if (st[kVarUtheta] == 1) {
            // B2^{phi,theta}
            const double sf = std::sin(g.theta_face(j));
            const double rhot = 0.5 * (cs.rho(i, j - 1, s) + cs.rho(i, j, s));
            const double uadv = 0.25 * (H.u_phi(i, j - 1, s) + H.u_phi(i, j, s) +
                                        H.u_phi(i, j - 1, s + 1) + H.u_phi(i, j, s + 1));
            Uo(kVarUtheta, kVarUtheta) += uadv / (2 * rc * sf * dph);
            L(kVarUtheta, kVarUtheta) -= uadv / (2 * rc * sf * dph);
            const double cv = -mu / (rhot * rc * rc * sf * sf * dph * dph);
            Uo(kVarUtheta, kVarUtheta) += cv;
            D(kVarUtheta, kVarUtheta) -= 2 * cv;
            L(kVarUtheta, kVarUtheta) += cv;
        }
    }
}

} // namespace

PencilBlocks directional_blocks(int dir, int a, int b,
                                const CoefficientState& cs,
                                const BoundaryConditions& bc,
                                const MacGrid& g, const GasParams& gas) {
    PencilBlocks B;
    B.n = (dir == 0 ? g.nr : dir == 1 ? g.ntheta : g.nphi) + 1;
    B.lower.resize(B.n);
    B.diag.resize(B.n);
    B.upper.resize(B.n);
    B.state.resize(B.n);
    switch (dir) {
    case 0: blocks_r(a, b, cs, bc, g, gas, B); break;
    case 1: blocks_theta(a, b, cs, bc, g, gas, B); break;
    default: blocks_phi(a, b, cs, bc, g, gas, B); break;
    }
    return B;
}

namespace {

// Read variable w of `state` at pencil slot t (may land on a ghost entry).
double read_entry(const FieldSet& state, int w, int dir, int a, int b, int t,
                  const MacGrid& g) {
    int i, j, k;
    pencil_index(dir, a, b, t, i, j, k);
    const Field3& f = state.component(w);
    int nx, ny, nz;
    g.extents(var_location(w), nx, ny, nz);
    if (i < -1 || i > nx || j < -1 || j > ny || k < -1 || k > nz) return 0.0;
    return f(i, j, k);
}

} // namespace

FieldSet apply_explicit_D_dir(int dir, const FieldSet& state,
                              const CoefficientState& cs,
                              const BoundaryConditions& bc, const MacGrid& g,
                              const GasParams& gas, int n_threads) {
    FieldSet out(g);
    int na, nb;
    pencil_cross_extents(dir, g, na, nb);
    parallel_for(na * nb, n_threads, [&](int ab) {
        const int a = ab / nb, b = ab % nb;
        PencilBlocks B = directional_blocks(dir, a, b, cs, bc, g, gas);
        for (int s = 0; s < B.n; ++s) {
            Vec5 y;
            bool any = false;
            for (int v = 0; v < kBlock; ++v)
                if (B.state[s][v] == 1) any = true;
            if (!any) continue;
            for (int off = -1; off <= 1; ++off) {
                const Mat5& M = off < 0 ? B.lower[s] : off == 0 ? B.diag[s] : B.upper[s];
                for (int v = 0; v < kBlock; ++v) {
                    if (B.state[s][v] != 1) continue;
                    for (int w = 0; w < kBlock; ++w) {
                        const double c = M(v, w);
                        if (c != 0.0) y[v] += c * read_entry(state, w, dir, a, b, s + off, g);
                    }
                }
            }
            int i, j, k;
            pencil_index(dir, a, b, s, i, j, k);
            for (int v = 0; v < kBlock; ++v)
                if (B.state[s][v] == 1) out.component(v)(i, j, k) = y[v];
        }
    });
    return out;
}

FieldSet apply_explicit_D(const FieldSet& state, const CoefficientState& cs,
                          const BoundaryConditions& bc, const MacGrid& g,
                          const GasParams& gas, int n_threads) {
    FieldSet out = apply_explicit_D_dir(0, state, cs, bc, g, gas, n_threads);
    for (int dir = 1; dir < 3; ++dir) {
        FieldSet part = apply_explicit_D_dir(dir, state, cs, bc, g, gas, n_threads);
        out.axpy(1.0, part);
    }
    return out;
}

BlockTridiagonalSystem assemble_pencil(const PencilBlocks& B, double tau,
                                       const BoundaryConditions& bc, int dir) {
    BlockTridiagonalSystem sys(B.n);
    const double h = 0.5 * tau;
    for (int s = 0; s < B.n; ++s) {
        Mat5& L = sys.lower[s];
        Mat5& D = sys.diag[s];
        Mat5& Uo = sys.upper[s];
        for (int v = 0; v < kBlock; ++v) {
            if (B.state[s][v] != 1) {
                D(v, v) = 1.0;
                continue;
            }
            D(v, v) += 1.0;
            for (int w = 0; w < kBlock; ++w) {
                const double cd = B.diag[s](v, w);
                if (cd != 0.0 && B.state[s][w] == 1) D(v, w) += h * cd;

                const double cl = B.lower[s](v, w);
                if (cl != 0.0) {
                    if (s == 0) {
                        // ghost at index -1 mirrors onto slot 0
                        D(v, w) += h * ghost_mirror_sign(bc.var[w].kind[dir]) * cl;
                    } else if (B.state[s - 1][w] == 1) {
                        L(v, w) += h * cl;
                    } else if (B.state[s - 1][w] == 0) {
                        D(v, w) += h * ghost_mirror_sign(bc.var[w].kind[dir]) * cl;
                    } // state 2: pinned, increment 0 -> drop
                }

                const double cu = B.upper[s](v, w);
                if (cu != 0.0 && s + 1 < B.n) {
                    if (B.state[s + 1][w] == 1) {
                        Uo(v, w) += h * cu;
                    } else if (B.state[s + 1][w] == 0) {
                        // center-located ghost just past the last cell
                        D(v, w) += h * ghost_mirror_sign(bc.var[w].kind[dir]) * cu;
                    }
                }
            }
        }
    }
    return sys;
}

FieldSet apply_explicit_DM(const FieldSet& state, const CoefficientState& cs,
                           const MacGrid& g, const GasParams& gas,
                           const Environment& env, int n_threads) {
    FieldSet out(g);
    const FieldSet& H = cs.half;
    const double dr = g.dr, dth = g.dtheta, dph = g.dphi;
    const double mu = gas.mu, gm1 = gas.gamma - 1.0;
    const double om = env.omega;
    const int nr = g.nr, nt = g.ntheta, np = g.nphi;

    // Center-located divergence pieces of the operand:
    //   S1 = d(sin th v_th)/dth, S2 = dv_ph/dph, Q = d(r^2 v_r)/dr.
    Field3 S1(nr, nt, np), S2(nr, nt, np), Q(nr, nt, np);
    parallel_for(nr, n_threads, [&](int i) {
        const double rf0 = g.r_face(i), rf1 = g.r_face(i + 1);
        for (int j = 0; j < nt; ++j) {
            const double sf0 = std::sin(g.theta_face(j));
            const double sf1 = std::sin(g.theta_face(j + 1));
            for (int k = 0; k < np; ++k) {
                S1(i, j, k) = (sf1 * state.u_theta(i, j + 1, k) -
                               sf0 * state.u_theta(i, j, k)) / dth;
                S2(i, j, k) = (state.u_phi(i, j, k + 1) - state.u_phi(i, j, k)) / dph;
                Q(i, j, k) = (rf1 * rf1 * state.u_r(i + 1, j, k) -
                              rf0 * rf0 * state.u_r(i, j, k)) / dr;
            }
        }
    });

    // p and T rows (A2^M, C2^M) at cell centers.
    parallel_for(nr, n_threads, [&](int i) {
        const double rc = g.r_center(i);
        for (int j = 0; j < nt; ++j) {
            const double sc = std::sin(g.theta_center(j));
            for (int k = 0; k < np; ++k) {
                const double grt = cs.grad.g[0][1](i, j, k), gtr = cs.grad.g[1][0](i, j, k);
                const double grp = cs.grad.g[0][2](i, j, k), gpr = cs.grad.g[2][0](i, j, k);
                const double gtp = cs.grad.g[1][2](i, j, k), gpt = cs.grad.g[2][1](i, j, k);

                const double dvt_dr =
                    (tavg(state.u_theta, i + 1, j, k) - tavg(state.u_theta, i - 1, j, k)) /
                    (2 * dr);
                const double dvp_dr =
                    (pavg(state.u_phi, i + 1, j, k) - pavg(state.u_phi, i - 1, j, k)) /
                    (2 * dr);
                const double dvr_dth =
                    (ravg(state.u_r, i, j + 1, k) - ravg(state.u_r, i, j - 1, k)) / (2 * dth);
                const double dvp_dth =
                    (pavg(state.u_phi, i, j + 1, k) - pavg(state.u_phi, i, j - 1, k)) /
                    (2 * dth);
                const double dvr_dph =
                    (ravg(state.u_r, i, j, k + 1) - ravg(state.u_r, i, j, k - 1)) / (2 * dph);
                const double dvt_dph =
                    (tavg(state.u_theta, i, j, k + 1) - tavg(state.u_theta, i, j, k - 1)) /
                    (2 * dph);

                const double mixed =
                    (grt + gtr) * (dvt_dr + dvr_dth / rc) +
                    (grp + gpr) * (dvp_dr + dvr_dph / (rc * sc)) +
                    (gtp + gpt) * (dvp_dth / rc + dvt_dph / (rc * sc));
                out.p(i, j, k) = -mu * gm1 * mixed;
                out.T(i, j, k) = -mu * cs.cc(i, j, k) * mixed;
            }
        }
    });

    // u_r rows (B2^{M,r}) at interior r-faces.
    parallel_for(nr - 1, n_threads, [&](int ii) {
        const int i = ii + 1;
        const double rf = g.r_face(i);
        const double rcm = g.r_center(i - 1), rcp = g.r_center(i);
        for (int j = 0; j < nt; ++j) {
            const double sc = std::sin(g.theta_center(j));
            for (int k = 0; k < np; ++k) {
                const double rhof = 0.5 * (cs.rho(i - 1, j, k) + cs.rho(i, j, k));
                const double utb = 0.25 * (H.u_theta(i - 1, j, k) + H.u_theta(i - 1, j + 1, k) +
                                           H.u_theta(i, j, k) + H.u_theta(i, j + 1, k));
                const double upb = 0.25 * (H.u_phi(i - 1, j, k) + H.u_phi(i - 1, j, k + 1) +
                                           H.u_phi(i, j, k) + H.u_phi(i, j, k + 1));
                const double vtb = 0.25 * (state.u_theta(i - 1, j, k) + state.u_theta(i - 1, j + 1, k) +
                                           state.u_theta(i, j, k) + state.u_theta(i, j + 1, k));
                const double vpb = 0.25 * (state.u_phi(i - 1, j, k) + state.u_phi(i - 1, j, k + 1) +
                                           state.u_phi(i, j, k) + state.u_phi(i, j, k + 1));
                const double vr = state.u_r(i, j, k);

                const double div_m = S1(i - 1, j, k) + S2(i - 1, j, k);
                const double div_p = S1(i, j, k) + S2(i, j, k);
                double val = -(utb * vtb + upb * vpb) / rf - 2 * om * sc * vpb;
                val += 2 * mu * vr / (rhof * rf * rf);
                val += (2 * mu / (rhof * rf * rf * sc)) * 0.5 * (div_m + div_p);
                const double hp = div_p / (rcp * sc), hm = div_m / (rcm * sc);
                val += -(mu / (3 * rhof * dr)) * (hp - hm);
                out.u_r(i, j, k) = val;
            }
        }
    });

    // u_theta rows (B2^{M,theta}) at interior theta-faces.
    parallel_for(nr, n_threads, [&](int i) {
        const double rc = g.r_center(i);
        for (int j = 1; j < nt; ++j) {
            const double thf = g.theta_face(j);
            const double sf = std::sin(thf), cf = std::cos(thf);
            const double scm = std::sin(g.theta_center(j - 1));
            const double scp = std::sin(g.theta_center(j));
            for (int k = 0; k < np; ++k) {
                const double rhot = 0.5 * (cs.rho(i, j - 1, k) + cs.rho(i, j, k));
                const double utf = H.u_theta(i, j, k);
                const double upf = 0.25 * (H.u_phi(i, j - 1, k) + H.u_phi(i, j - 1, k + 1) +
                                           H.u_phi(i, j, k) + H.u_phi(i, j, k + 1));
                const double vrf = 0.25 * (state.u_r(i, j - 1, k) + state.u_r(i + 1, j - 1, k) +
                                           state.u_r(i, j, k) + state.u_r(i + 1, j, k));
                const double vpf = 0.25 * (state.u_phi(i, j - 1, k) + state.u_phi(i, j - 1, k + 1) +
                                           state.u_phi(i, j, k) + state.u_phi(i, j, k + 1));
                const double vt = state.u_theta(i, j, k);

                double val = utf * vrf / rc - upf * vpf * cf / (rc * sf) -
                             2 * om * cf * vpf;
                val += mu * vt / (rhot * rc * rc * sf * sf);
                val += -(mu / (3 * rhot * rc * rc * rc * dth)) *
                       (Q(i, j, k) - Q(i, j - 1, k));
                val += -(mu / (3 * rhot * rc * rc * dth)) *
                       (S2(i, j, k) / scp - S2(i, j - 1, k) / scm);
                val += -(2 * mu / (rhot * rc * rc * dth)) *
                       (ravg(state.u_r, i, j, k) - ravg(state.u_r, i, j - 1, k));
                val += (2 * mu * cf / (rhot * rc * rc * sf * sf)) *
                       0.5 * (S2(i, j - 1, k) + S2(i, j, k));
                out.u_theta(i, j, k) = val;
            }
        }
    });

    // u_phi rows (B2^{M,phi}) at interior phi-faces.
    parallel_for(nr, n_threads, [&](int i) {
        const double rc = g.r_center(i);
        for (int j = 0; j < nt; ++j) {
            const double thc = g.theta_center(j);
            const double sc = std::sin(thc), cc_ = std::cos(thc);
            for (int k = 1; k < np; ++k) {
                const double rhop = 0.5 * (cs.rho(i, j, k - 1) + cs.rho(i, j, k));
                const double upf = H.u_phi(i, j, k);
                const double vtf = 0.25 * (state.u_theta(i, j, k - 1) + state.u_theta(i, j + 1, k - 1) +
                                           state.u_theta(i, j, k) + state.u_theta(i, j + 1, k));
                const double vrf = 0.25 * (state.u_r(i, j, k - 1) + state.u_r(i + 1, j, k - 1) +
                                           state.u_r(i, j, k) + state.u_r(i + 1, j, k));
                const double vp = state.u_phi(i, j, k);

                double val = upf * vtf * cc_ / (rc * sc) + upf * vrf / rc +
                             2 * om * (cc_ * vtf + sc * vrf);
                val += mu * vp / (rhop * rc * rc * sc * sc);
                val += -(mu / (3 * rhop * rc * rc * rc * sc * dph)) *
                       (Q(i, j, k) - Q(i, j, k - 1));
                val += -(mu / (3 * rhop * rc * rc * sc * sc * dph)) *
                       (S1(i, j, k) - S1(i, j, k - 1));
                val += -(2 * mu / (rhop * rc * rc * sc * dph)) *
                       (ravg(state.u_r, i, j, k) - ravg(state.u_r, i, j, k - 1));
                val += -(2 * mu * cc_ / (rhop * rc * rc * sc * sc * dph)) *
                       (tavg(state.u_theta, i, j, k) - tavg(state.u_theta, i, j, k - 1));
                out.u_phi(i, j, k) = val;
            }
        }
    });

    return out;
}

} // namespace shellflow
