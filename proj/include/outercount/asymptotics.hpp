#pragma once

// Multiprecision singularity analysis for the counting series: the truncated
// singular system H(x,y) = dH/dy = 0 solved by 2-dimensional Newton on
// bivariate jets, singular expansions by undetermined coefficients on
// order-4 jets, the derived asymptotic constants, the limit-law statistics,
// and the Gaussian edge laws (closed form for dissections, a 3-variable
// Newton system with finite differences in y for outerplanar graphs).

#include "bipartite.hpp"
#include "composition.hpp"
#include "jets.hpp"

#include <functional>
#include <memory>

namespace outercount {

struct EvalWithTail {
    MPFloat value;
    MPFloat tail; // geometric heuristic, not a rigorous bound
};

// Truncated-series evaluation at 0 <= x < 1 with the tail estimate
// f_N x^N * r x / (1 - r x) where r = f_N / f_{N-1}.
inline EvalWithTail eval_series(const PowerSeries& f, const MPFloat& x) {
    const long prec = x.prec();
    MPFloat one = MPFloat::of(1L, prec);
    if (x.sign() < 0 || x >= one) throw domain_error("eval_series requires 0 <= x < 1");
    MPFloat v(prec);
    for (int k = f.order(); k >= 0; --k) v = v * x + MPFloat::of(f[k], prec);
    MPFloat tail(prec);
    const int n = f.order();
    if (n >= 1 && !f[n].is_zero() && !f[n - 1].is_zero()) {
        MPFloat r = MPFloat::of(f[n], prec) / MPFloat::of(f[n - 1], prec);
        MPFloat rx = r * x;
        if (rx < one && rx.sign() > 0) {
            tail = abs(MPFloat::of(f[n], prec) * pow_int(x, n)) * rx / (one - rx);
        } else {
            tail = MPFloat::of(1L, prec); // no decay visible: flag as useless
        }
    }
    return {v, tail};
}

inline MPFloat eval_ps(const PowerSeries& f, const MPFloat& x) {
    MPFloat v(x.prec());
    for (int k = f.order(); k >= 0; --k) v = v * x + MPFloat::of(f[k], x.prec());
    return v;
}

namespace asym_detail {

inline std::vector<MPFloat> to_mp_coeffs(const PowerSeries& f, long prec) {
    std::vector<MPFloat> out;
    out.reserve(f.order() + 1);
    for (int k = 0; k <= f.order(); ++k) out.push_back(MPFloat::of(f[k], prec));
    return out;
}

// coefficients of Chat^[m](x, y0^k) in x, as multiprecision numbers
inline std::vector<MPFloat> collapse_y(const EdgeSeries& chat_xy, int m, const MPFloat& ypow,
                                       long prec) {
    std::vector<MPFloat> out(m + 1, MPFloat(prec));
    for (int n = 0; n <= m && n <= chat_xy.order(); ++n) {
        const YPoly& p = chat_xy[n];
        MPFloat acc(prec);
        MPFloat yp = MPFloat::of(1L, prec);
        for (int j = 0; j <= p.degree(); ++j) {
            if (!p.coeff(j).is_zero()) acc += MPFloat::of(p.coeff(j), prec) * yp;
            yp *= ypow;
        }
        out[n] = acc;
    }
    return out;
}

// H(x, z) = x exp( V(z, C2(x))/z + sum_{k=2}^m V(Ck, C2k)/(k Ck) ) - z on
// bivariate jets; the vertex ratio supplier abstracts the three systems
// (plain, bipartite, edge-marked at fixed y).
struct HSystem {
    // ratio(k, a, b) = Z(V; a, b; .)/a for the k-th substitution slot
    std::function<XYJet(int, const XYJet&, const XYJet&)> ratio;
    // series(k, xjet) = Chat-substitute for slot k evaluated on the x jet
    std::function<XYJet(int, const XYJet&)> series_at;
    // stay on the principal branch of the root kernels: z below their
    // branch point (delta-type constant of the system)
    std::function<bool(const MPFloat&, const MPFloat&)> admissible;
    int m = 25;

    XYJet eval(const MPFloat& x0, const MPFloat& z0, int jet_order) const {
        const long prec = x0.prec();
        XYJet x = XYJet::variable_u(jet_order, prec, x0);
        XYJet z = XYJet::variable_w(jet_order, prec, z0);
        XYJet xk = x;
        XYJet sum = alg_const(x, Rational(0));
        for (int k = 1; k <= m; ++k) {
            XYJet a = (k == 1) ? z : series_at(k, xk);
            XYJet b = series_at(2 * k, xk * xk);
            sum += alg_scale(ratio(k, a, b), Rational(1, k));
            if (k < m) xk *= x;
        }
        return x * alg_exp(sum) - z;
    }
};

struct NewtonResult {
    MPFloat x, z, residual;
    int iterations = 0;
};

// Damped 2-dimensional Newton on F = (H, dH/dz). Steps are clamped and
// backtracked when they leave the domain of the kernels (the root functions
// have branch points; an overshoot past one poisons the Jacobian).
inline NewtonResult newton2(const HSystem& sys, MPFloat x0, MPFloat z0, int digits) {
    const long prec = x0.prec();
    MPFloat step_tol = MPFloat::parse("1e-" + std::to_string(digits + 5), prec);
    MPFloat one = MPFloat::of(1L, prec);
    MPFloat clamp = MPFloat::of(0.02, prec);
    NewtonResult res;
    for (int it = 0; it < 300; ++it) {
        XYJet J = sys.eval(x0, z0, 2);
        MPFloat H = J.coeff(0, 0), Hx = J.coeff(1, 0), Hz = J.coeff(0, 1);
        MPFloat Hxz = J.coeff(1, 1), Hzz = J.coeff(0, 2) + J.coeff(0, 2);
        MPFloat det = Hx * Hzz - Hz * Hxz;
        if (det.is_zero()) throw solver_error("newton: singular jacobian");
        MPFloat dx = (-H * Hzz + Hz * Hz) / det;
        MPFloat dz = (-Hz * Hx + Hxz * H) / det;
        // clamp oversized steps, then backtrack on kernel-domain violations
        MPFloat scale = one;
        MPFloat amax = abs(dx) > abs(dz) ? abs(dx) : abs(dz);
        if (amax > clamp) scale = clamp / amax;
        bool moved = false;
        for (int half = 0; half < 60; ++half) {
            MPFloat nx = x0 + dx * scale, nz = z0 + dz * scale;
            if (nx.is_finite() && nz.is_finite() && nx.sign() > 0 && nz.sign() > 0 &&
                nx < one && nz < one && (!sys.admissible || sys.admissible(nx, nz))) {
                try {
                    (void)sys.eval(nx, nz, 0);
                    x0 = nx;
                    z0 = nz;
                    moved = true;
                    break;
                } catch (const domain_error&) {
                } catch (const division_error&) {
                }
            }
            scale = scale / MPFloat::of(2L, prec);
        }
        if (!moved) throw solver_error("newton: cannot find admissible step");
        res.iterations = it + 1;
        if (scale == one && abs(dx) + abs(dz) < step_tol) {
            XYJet F = sys.eval(x0, z0, 2);
            res.x = x0;
            res.z = z0;
            res.residual = abs(F.coeff(0, 0)) + abs(F.coeff(0, 1));
            return res;
        }
    }
    throw solver_error("newton: no convergence within 300 iterations");
}

inline HSystem plain_system(const PowerSeries& chat, int m, long prec) {
    auto coeffs = std::make_shared<std::vector<MPFloat>>(to_mp_coeffs(chat.at_order(std::min(m, chat.order())), prec));
    HSystem sys;
    sys.m = m;
    sys.series_at = [coeffs](int, const XYJet& xk) {
        XYJet r = alg_const(xk, Rational(0));
        for (int j = static_cast<int>(coeffs->size()) - 1; j >= 0; --j) {
            r = r * xk;
            r += XYJet::constant(xk.order(), xk.prec(), (*coeffs)[j]);
        }
        return r;
    };
    sys.ratio = [](int, const XYJet& a, const XYJet& b) {
        return cis::vertex_ratio_closed(a, b);
    };
    MPFloat delta = MPFloat::of(3L, prec) - MPFloat::of(2L, prec) * sqrt(MPFloat::of(2L, prec));
    sys.admissible = [delta](const MPFloat&, const MPFloat& z) { return z < delta; };
    return sys;
}

inline HSystem bipartite_system(const PowerSeries& chat_b, int m, long prec) {
    auto coeffs = std::make_shared<std::vector<MPFloat>>(to_mp_coeffs(chat_b.at_order(std::min(m, chat_b.order())), prec));
    HSystem sys;
    sys.m = m;
    sys.series_at = [coeffs](int, const XYJet& xk) {
        XYJet r = alg_const(xk, Rational(0));
        for (int j = static_cast<int>(coeffs->size()) - 1; j >= 0; --j) {
            r = r * xk;
            r += XYJet::constant(xk.order(), xk.prec(), (*coeffs)[j]);
        }
        return r;
    };
    sys.ratio = [](int, const XYJet& a, const XYJet& b) {
        CisArgs<XYJet> args;
        args.s1 = a;
        args.s2 = b;
        args.family = [a](int) { return a; };
        XYJet one = alg_const(a, Rational(1));
        args.ypow = [one](int) { return one; };
        args.phi_limit = 1;
        return DissectionEval<XYJet>(args).even_vertex_ratio();
    };
    // branch point of the even-dissection cubic: s^2 = 16/(71+17 sqrt 17)
    MPFloat sb = sqrt(MPFloat::of(16L, prec) /
                      (MPFloat::of(71L, prec) + MPFloat::of(17L, prec) * sqrt(MPFloat::of(17L, prec))));
    sys.admissible = [sb](const MPFloat&, const MPFloat& z) { return z < sb; };
    return sys;
}

// Edge-marked system at a fixed numeric y: slot k uses Chat(x^k, y^k) and
// formula variable y^k.
inline HSystem edge_system(const EdgeSeries& chat_xy, int m, const MPFloat& y, long prec) {
    auto polys = std::make_shared<std::vector<std::vector<MPFloat>>>(2 * m + 1);
    for (int k = 1; k <= 2 * m; ++k) {
        MPFloat yk = pow_int(y, k);
        (*polys)[k] = collapse_y(chat_xy, std::min(m, chat_xy.order()), yk, prec);
    }
    auto ycopy = std::make_shared<MPFloat>(y);
    HSystem sys;
    sys.m = m;
    sys.series_at = [polys](int k, const XYJet& xk) {
        const auto& f = (*polys)[k];
        XYJet r = alg_const(xk, Rational(0));
        for (int j = static_cast<int>(f.size()) - 1; j >= 0; --j) {
            r = r * xk;
            r += XYJet::constant(xk.order(), xk.prec(), f[j]);
        }
        return r;
    };
    sys.ratio = [ycopy](int k, const XYJet& a, const XYJet& b) {
        CisArgs<XYJet> args;
        args.s1 = a;
        args.s2 = b;
        args.family = [a](int) { return a; };
        const int ord = a.order();
        const long precl = a.prec();
        MPFloat y = *ycopy;
        args.ypow = [ord, precl, y, k](int d) {
            return XYJet::constant(ord, precl, pow_int(y, static_cast<long>(k) * d));
        };
        args.phi_limit = 1;
        return DissectionEval<XYJet>(args).vertex_ratio(true);
    };
    // branch point of the edge-marked kernel u(s; y) in s, at this y
    MPFloat twoy = MPFloat::of(2L, prec) * y, y2 = y * y;
    MPFloat byy = twoy + MPFloat::of(4L, prec) * y2;
    MPFloat sstar = (byy - sqrt(byy * byy - MPFloat::of(4L, prec) * y2)) / (MPFloat::of(2L, prec) * y2);
    sys.admissible = [sstar](const MPFloat&, const MPFloat& z) { return z < sstar; };
    return sys;
}

} // namespace asym_detail

struct SolveResult {
    MPFloat rho, tau, residual;
    int m = 0;
    int digits = 0;
};

// Roots of (H, dH/dy) for the truncated general system, one convergence
// table row per m. Starting point (0.134, 0.17).
inline SolveResult solve_rho_tau(const CensusTables& t, int m, int digits) {
    if (m < 1) throw usage_error("solve_rho_tau requires m >= 1");
    if (t.trunc < m) throw usage_error("tables too short for requested m");
    const long prec = bits_for_digits(digits);
    auto sys = asym_detail::plain_system(t.chat, m, prec);
    auto nr = asym_detail::newton2(sys, MPFloat::of(0.134, prec), MPFloat::of(0.17, prec), digits);
    MPFloat delta = MPFloat::of(3L, prec) - MPFloat::of(2L, prec) * sqrt(MPFloat::of(2L, prec));
    if (nr.x.sign() <= 0 || nr.z.sign() <= 0 || !(nr.z < delta))
        throw solver_error("solve_rho_tau: root rejected (outside (0,1) x (0,delta))");
    MPFloat tol = MPFloat::parse("1e-" + std::to_string(digits - 20), prec);
    if (!(nr.residual <= tol)) throw solver_error("solve_rho_tau: residual too large");
    return {nr.x, nr.z, nr.residual, m, digits};
}

struct SingularData {
    MPFloat rho, tau, residual;
    int m_trunc = 0, digits = 0;
    MPFloat chat1, chat2, chat3; // singular expansion of Chat
    MPFloat dxH, dyyH;           // jet values behind chat1, for cross-checks
    MPFloat c_at_rho, c1, c2, c3;
    MPFloat g_at_rho, g2, g3, g3_jet;
};

inline SingularData singular_data(const CensusTables& t, int m, int digits) {
    SolveResult sr = solve_rho_tau(t, m, digits);
    const long prec = bits_for_digits(digits);
    const MPFloat &rho = sr.rho, &tau = sr.tau;
    SingularData sd;
    sd.rho = rho;
    sd.tau = tau;
    sd.residual = sr.residual;
    sd.m_trunc = m;
    sd.digits = digits;

    // order-4 bivariate jet of H at (rho, tau)
    auto sys = asym_detail::plain_system(t.chat, m, prec);
    XYJet J = sys.eval(rho, tau, 4);
    const MPFloat h10 = J.coeff(1, 0), h20 = J.coeff(2, 0);
    const MPFloat h02 = J.coeff(0, 2), h03 = J.coeff(0, 3), h04 = J.coeff(0, 4);
    const MPFloat h11 = J.coeff(1, 1), h12 = J.coeff(1, 2);
    sd.dxH = h10;
    sd.dyyH = h02 + h02;
    if (h02.sign() <= 0 || h10.sign() <= 0)
        throw solver_error("singular expansion: degenerate derivatives at (rho, tau)");

    // substitute x = rho(1 - X^2), y = tau + Y1 X + Y2 X^2 + Y3 X^3 and kill
    // the X^2..X^4 coefficients (X^0, X^1 vanish by the choice of (rho, tau))
    MPFloat Y1 = -sqrt(rho * h10 / h02);
    MPFloat Y2 = (rho * h11 - h03 * Y1 * Y1) / (h02 + h02);
    MPFloat Y3 = -(h02 * Y2 * Y2 + MPFloat::of(3L, prec) * h03 * Y1 * Y1 * Y2 +
                   h04 * Y1 * Y1 * Y1 * Y1 + rho * rho * h20 - rho * h11 * Y2 -
                   rho * h12 * Y1 * Y1) /
                 ((h02 + h02) * Y1);
    sd.chat1 = Y1;
    sd.chat2 = Y2;
    sd.chat3 = Y3;

    // X-jets for C = Chat + Z(D; Chat) - Z(V; Chat) with the d >= 2 slots
    // analytic in X^2 and the d = 1 slot carrying the singular expansion
    const int XO = 4;
    PowerSeries chatm = t.chat.at_order(std::min(m, t.trunc));
    XJet chatX(XO, prec);
    chatX.coeff_ref(0) = tau;
    chatX.coeff_ref(1) = Y1;
    chatX.coeff_ref(2) = Y2;
    chatX.coeff_ref(3) = Y3;
    XJet xjet(XO, prec); // rho (1 - X^2)
    xjet.coeff_ref(0) = rho;
    xjet.coeff_ref(2) = -rho;

    auto chat_at = [&](int d) { // Chat^[m]((rho(1-X^2))^d) as an X-jet
        XJet xd = XJet::constant(XO, prec, MPFloat::of(1L, prec));
        for (int i = 0; i < d; ++i) xd *= xjet;
        return eval_poly_on_jet(chatm, xd);
    };

    CisArgs<XJet> args;
    args.s1 = chatX;
    args.s2 = chat_at(2);
    args.family = chat_at;
    XJet one = XJet::constant(XO, prec, MPFloat::of(1L, prec));
    args.ypow = [one](int) { return one; };
    args.phi_limit = m;
    DissectionEval<XJet> ev(args);
    XJet zd = ev.dissection_closed();
    XJet zv = chatX * cis::vertex_ratio_closed(chatX, args.s2);
    XJet cX = chatX + zd - zv;
    sd.c_at_rho = cX[0];
    sd.c1 = cX[1];
    sd.c2 = cX[2];
    sd.c3 = cX[3];
    // C1 = 0 holds identically for the truncated system; a visible residue
    // here means a formula transcription bug
    MPFloat c1_tol = MPFloat::parse("1e-" + std::to_string(std::max(5, digits - 25)), prec);
    if (!(abs(sd.c1) <= c1_tol))
        throw consistency_error("singular expansion: C1 = " + sd.c1.str(5) + " is not zero");
    if (!(sd.chat1.sign() < 0) || !(sd.c3.sign() > 0))
        throw consistency_error("singular expansion: sign conditions violated");

    // G(rho) = exp(sum_k C(rho^k)/k): k = 1 from the jet, the rest from the
    // exact tables (the arguments rho^k are deep inside the disc)
    MPFloat logG = sd.c_at_rho;
    MPFloat tiny = MPFloat::parse("1e-" + std::to_string(digits + 15), prec);
    for (int k = 2; k < 4000; ++k) {
        MPFloat ck = eval_ps(t.c, pow_int(rho, k)) / MPFloat::of(static_cast<long>(k), prec);
        logG += ck;
        if (abs(ck) < tiny) break;
    }
    sd.g_at_rho = exp(logG);
    sd.g3 = sd.g_at_rho * sd.c3;

    // jet route for G as a cross-check and for G2
    XJet expo = cX;
    for (int k = 2; k < 4000; ++k) {
        MPFloat rk = pow_int(rho, k);
        if (rk < tiny) break;
        XJet xd = XJet::constant(XO, prec, MPFloat::of(1L, prec));
        for (int i = 0; i < k; ++i) xd *= xjet;
        XJet ck = eval_poly_on_jet(t.c, xd);
        expo += alg_scale(ck, Rational(1, k));
    }
    XJet gX = alg_exp(expo);
    sd.g2 = gX[2];
    sd.g3_jet = gX[3];
    if (!(sd.g3.sign() > 0))
        throw consistency_error("singular expansion: G3 must be positive");
    return sd;
}

struct AsymptoticConstants {
    MPFloat d, c, g;          // d_n ~ d n^-5/2 delta^-n etc.
    MPFloat delta, delta_inv; // 3 - 2 sqrt 2 and its inverse
    MPFloat rho, rho_inv;
};

inline AsymptoticConstants asymptotic_constants(const SingularData& sd) {
    const long prec = sd.rho.prec();
    AsymptoticConstants a;
    MPFloat one = MPFloat::of(1L, prec), two = MPFloat::of(2L, prec);
    MPFloat s2 = sqrt(two);
    a.delta = MPFloat::of(3L, prec) - two * s2;
    a.delta_inv = MPFloat::of(3L, prec) + two * s2;
    a.rho = sd.rho;
    a.rho_inv = one / sd.rho;
    // d = (3 sqrt 2 - 4)^(3/2) / (8 sqrt(2 pi))
    MPFloat base = MPFloat::of(3L, prec) * s2 - MPFloat::of(4L, prec);
    a.d = base * sqrt(base) / (MPFloat::of(8L, prec) * sqrt(two * MPFloat::pi(prec)));
    MPFloat fourth = MPFloat::of(3L, prec) / (MPFloat::of(4L, prec) * sqrt(MPFloat::pi(prec)));
    a.c = fourth * sd.c3;
    a.g = fourth * sd.g3;
    return a;
}

struct Statistics {
    MPFloat prob_connected;       // C3/G3
    MPFloat expected_components;  // 1 + sum_r C(rho^r)
    MPFloat isolated_mean;        // rho/(1-rho); law P[k] = rho^k (1-rho)
    MPFloat expected_two_connected; // sum_k D(rho^k)
    MPFloat expected_bipartite;     // sum_k C_b(rho^k)
    MPFloat rho_b;
    MPFloat chromatic_ratio;      // rho/rho_b < 1
};

inline SolveResult bipartite_growth(const BipartiteTables& bt, int m, int digits) {
    if (bt.trunc < m) throw usage_error("bipartite tables too short for requested m");
    const long prec = bits_for_digits(digits);
    auto sys = asym_detail::bipartite_system(bt.chat_b, m, prec);
    MPFloat seed_rho = MPFloat::of(0.218, prec);
    MPFloat seed_tau = eval_ps(bt.chat_b, seed_rho);
    auto nr = asym_detail::newton2(sys, seed_rho, seed_tau, digits);
    if (nr.x.sign() <= 0 || nr.z.sign() <= 0)
        throw solver_error("bipartite_growth: root rejected");
    MPFloat tol = MPFloat::parse("1e-" + std::to_string(digits - 20), prec);
    if (!(nr.residual <= tol)) throw solver_error("bipartite_growth: residual too large");
    return {nr.x, nr.z, nr.residual, m, digits};
}

inline Statistics statistics(const SingularData& sd, const CensusTables& t,
                             const BipartiteTables& bt) {
    const long prec = sd.rho.prec();
    const MPFloat& rho = sd.rho;
    MPFloat one = MPFloat::of(1L, prec);
    Statistics st;
    st.prob_connected = sd.c3 / sd.g3;
    MPFloat tiny = MPFloat::parse("1e-" + std::to_string(sd.digits + 15), prec);

    MPFloat comps = one + sd.c_at_rho; // r = 1 term from the singular jet
    for (int r = 2; r < 4000; ++r) {
        MPFloat term = eval_ps(t.c, pow_int(rho, r));
        comps += term;
        if (term < tiny) break;
    }
    st.expected_components = comps;
    st.isolated_mean = rho / (one - rho);

    MPFloat twoconn(prec);
    auto dargs = plain_args(PowerSeries::identity(t.trunc));
    PowerSeries dser = dissection_cis(dargs);
    for (int k = 1; k < 4000; ++k) {
        MPFloat term = eval_ps(dser, pow_int(rho, k));
        twoconn += term;
        if (term < tiny) break;
    }
    st.expected_two_connected = twoconn;

    MPFloat bip(prec);
    for (int k = 1; k < 4000; ++k) {
        MPFloat term = eval_ps(bt.c_b, pow_int(rho, k));
        bip += term;
        if (term < tiny) break;
    }
    st.expected_bipartite = bip;

    SolveResult rb = bipartite_growth(bt, std::min(sd.m_trunc, bt.trunc), sd.digits);
    st.rho_b = rb.rho;
    st.chromatic_ratio = rho / rb.rho;
    return st;
}

struct EdgeLaw {
    MPFloat mu, sigma2;
    MPFloat x0_at_1, x0_prime_1, x0_doubleprime_1;
};

// Dissections: the dominant singularity delta(y) = 2 + 1/y - 2 sqrt(1+1/y)
// is explicit, so mean and variance are exact closed forms.
inline EdgeLaw edge_law_dissections(int digits) {
    const long prec = bits_for_digits(digits);
    MPFloat one = MPFloat::of(1L, prec), two = MPFloat::of(2L, prec);
    MPFloat s2 = sqrt(two);
    EdgeLaw law;
    law.x0_at_1 = MPFloat::of(3L, prec) - two * s2;
    law.x0_prime_1 = -one + s2 / two;
    // second derivative of (sqrt(1+1/y) - 1)^2 at y = 1
    law.x0_doubleprime_1 = two - s2 + s2 / MPFloat::of(8L, prec);
    law.mu = -law.x0_prime_1 / law.x0_at_1;
    law.sigma2 = -law.x0_doubleprime_1 / law.x0_at_1 - law.x0_prime_1 / law.x0_at_1 +
                 (law.x0_prime_1 / law.x0_at_1) * (law.x0_prime_1 / law.x0_at_1);
    return law;
}

// Outerplanar graphs: solve the 3-variable system at y in {1, 1 +- h, 1 +- 2h}
// and differentiate rho(y) by Richardson-extrapolated central differences.
inline EdgeLaw edge_law_outerplanar(const EdgeSeries& chat_xy, int m, int digits,
                                    double h_step = 1e-6) {
    const long prec = bits_for_digits(digits);
    if (chat_xy.order() < m) throw usage_error("edge-marked tables too short for requested m");
    MPFloat h = MPFloat::of(h_step, prec);
    MPFloat one = MPFloat::of(1L, prec);

    MPFloat x0 = MPFloat::of(0.134, prec), z0 = MPFloat::of(0.17, prec);
    auto solve_at = [&](const MPFloat& y) {
        auto sys = asym_detail::edge_system(chat_xy, m, y, prec);
        auto nr = asym_detail::newton2(sys, x0, z0, digits);
        x0 = nr.x; // warm-start the next solve
        z0 = nr.z;
        return nr;
    };

    auto r0 = solve_at(one);
    MPFloat rho1 = r0.x;
    auto rp1 = solve_at(one + h);
    auto rp2 = solve_at(one + h + h);
    x0 = rho1;
    z0 = r0.z;
    auto rm1 = solve_at(one - h);
    auto rm2 = solve_at(one - h - h);

    MPFloat eight = MPFloat::of(8L, prec), twelve = MPFloat::of(12L, prec);
    MPFloat sixteen = MPFloat::of(16L, prec), thirty = MPFloat::of(30L, prec);
    MPFloat d1 = (eight * (rp1.x - rm1.x) - (rp2.x - rm2.x)) / (twelve * h);
    MPFloat d2 = (sixteen * (rp1.x + rm1.x) - (rp2.x + rm2.x) - thirty * rho1) /
                 (twelve * h * h);

    EdgeLaw law;
    law.x0_at_1 = rho1;
    law.x0_prime_1 = d1;
    law.x0_doubleprime_1 = d2;
    law.mu = -d1 / rho1;
    law.sigma2 = -d2 / rho1 - d1 / rho1 + (d1 / rho1) * (d1 / rho1);
    if (law.sigma2.sign() <= 0) throw solver_error("edge law: variance condition violated");
    return law;
}

} // namespace outercount
