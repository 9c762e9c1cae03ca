#pragma once

// Cycle index sums for polygon dissections (two-connected outerplanar
// graphs), as evaluators over concrete arguments: the formal variables
// s1, s2, ..., s_d are substituted by elements of a coefficient algebra S
// (exact series, edge-marked series, multiprecision jets, or derivative
// pairs of any of these), and the edge-marking variable y by an algebra
// element (1 for the plain counting forms).
//
// Everything is routed through the root function u(s, y) of
//     s*y*(1+y)*u^2 - (1+s*y)*u + 1 = 0,   E_o^o(s; y) = s^2*y*u(s, y),
// which turns every division in the published formulas into a division by a
// series with constant term 1, so no truncation order is lost anywhere. The
// textbook forms with their 1/s1, 1/s2^2 prefactors are kept alongside as
// cross-check routes (vertex_rooted_cis, dissection_cis_textbook).
//
// The bipartite (all faces even) analogues live in the same evaluator
// family: the polygon-size sums are restricted to even k, which replaces u
// by the root of the cubic 2*s^2*u^3 - s^2*u^2 - u + 1 = 0 and drops the
// odd-polygon reflection terms.

#include "ad.hpp"
#include "algebra.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace outercount {

// Euler totients phi(1..n).
inline std::vector<long> totients(int n) {
    std::vector<long> phi(n + 1);
    for (int i = 0; i <= n; ++i) phi[i] = i;
    for (int i = 2; i <= n; ++i) {
        if (phi[i] == i) { // i prime
            for (int j = i; j <= n; j += i) phi[j] -= phi[j] / i;
        }
    }
    return phi;
}

template <class S>
struct CisArgs {
    S s1, s2;
    std::function<S(int)> family; // family(d) for s_d, d >= 1
    std::function<S(int)> ypow;   // y^d as an algebra element
    int phi_limit = 0;            // truncation of the d-indexed phi sums

    const S& fam(int d) const {
        if (d == 1) return s1;
        if (d == 2) return s2;
        auto it = cache_.find(d);
        if (it == cache_.end()) it = cache_.emplace(d, family(d)).first;
        return it->second;
    }
    S y(int d) const { return ypow(d); }

  private:
    mutable std::map<int, S> cache_;
};

// Plain (y = 1) argument pack with s_d = base(x^d).
template <class R>
CisArgs<Series<R>> plain_args(const Series<R>& base, int phi_limit = -1) {
    CisArgs<Series<R>> a;
    a.s1 = base;
    a.s2 = substitute_power(base, 2);
    a.family = [base](int d) { return substitute_power(base, d); };
    Series<R> one = Series<R>::constant(base.order(), R(1));
    a.ypow = [one](int) { return one; };
    a.phi_limit = phi_limit < 0 ? base.order() : phi_limit;
    return a;
}

// Edge-marked argument pack: s_d = base(x^d, y^d), formula variable y^d.
inline CisArgs<YSeries> edge_args(const YSeries& base, int phi_limit = -1) {
    CisArgs<YSeries> a;
    const int n = base.order();
    auto subst = [base, n](int d) {
        YSeries s(n);
        for (int j = 0; j * d <= n; ++j) {
            const YPoly& p = base[j];
            YPoly q;
            for (int m = 0; m <= p.degree(); ++m)
                q += YPoly::monomial(p.coeff(m), m * d);
            s.coeff_ref(j * d) = q;
        }
        return s;
    };
    a.s1 = base;
    a.s2 = subst(2);
    a.family = subst;
    a.ypow = [n](int d) { return YSeries::constant(n, YPoly::monomial(Rational(1), d)); };
    a.phi_limit = phi_limit < 0 ? n : phi_limit;
    return a;
}

namespace cis {

// Root of s*y*(1+y)*u^2 - (1+s*y)*u + 1 with u(0) = 1. The quadratic
// formula is rationalized to u = 2 / (1 + sy + sqrt((1+sy)^2 - 4sy(1+y))),
// which is free of cancellation (the naive minus-branch loses all precision
// when sy is tiny) and doubles as the formal-series solution, since the
// denominator has constant term 2.
template <class S>
S oed_u(const S& s, const S& y) {
    const S one = alg_const(s, Rational(1));
    const S sy = s * y;
    const S b = one + sy;
    const S disc = b * b - alg_scale(sy * (one + y), Rational(4));
    return alg_div(alg_const(s, Rational(2)), b + alg_sqrt(disc));
}

// Root of 2*b^2*w^2 + 3*b*w - w + 1 with w(0) = 1, the reduced vertex-rooted
// kernel (1 - 3b - sqrt(b^2-6b+1)) / (4b^2), rationalized to the stable form
// w = 2 / (1 - 3b + sqrt(b^2-6b+1)).
template <class S>
S vertex_w(const S& b) {
    const S one = alg_const(b, Rational(1));
    const S disc = alg_sqrt(b * b - alg_scale(b, Rational(6)) + one);
    return alg_div(alg_const(b, Rational(2)), one - alg_scale(b, Rational(3)) + disc);
}

// Z(V; a, b)/a through the kernel w: the Corollary closed form with the
// 1/s2^2 prefactor cancelled symbolically.
template <class S>
S vertex_ratio_closed(const S& a, const S& b) {
    const S one = alg_const(a, Rational(1));
    const S disc = alg_sqrt(a * a - alg_scale(a, Rational(6)) + one);
    return alg_scale(a + one - disc, Rational(1, 8)) +
           alg_scale((a + b) * vertex_w(b), Rational(1, 2));
}

// Root of 2*s^2*u^3 - s^2*u^2 - u + 1 with u(0) = 1: oriented outer-edge
// rooted dissections with all faces even satisfy E = s^2*u. No closed form;
// Newton works in every algebra (solve_steps(jets) covers the scalar phase).
template <class S>
S even_oed_u(const S& s) {
    const S one = alg_const(s, Rational(1));
    const S ss = s * s;
    S u = one;
    const int steps = solve_steps(s);
    for (int i = 0; i < steps; ++i) {
        S u2 = u * u;
        S f = alg_scale(ss * u2 * u, Rational(2)) - ss * u2 - u + one;
        S fp = alg_scale(ss * u2, Rational(6)) - alg_scale(ss * u, Rational(2)) - one;
        u = u - alg_div(f, fp);
    }
    return u;
}

} // namespace cis

template <class S>
struct ReflectiveParts {
    S plus;  // Z+(E_o^r): automorphisms fixing the root-edge vertices
    S minus; // Z-(E_o^r): automorphisms interchanging them
    S total; // Z(E_o^r) = (plus + minus)/2
};

template <class S>
class DissectionEval {
  public:
    explicit DissectionEval(CisArgs<S> args)
        : a_(std::move(args)), one_(alg_const(a_.s1, Rational(1))) {}

    const CisArgs<S>& args() const { return a_; }

    // Z(E_o^o) = s1^2 * y * u(s1, y)
    S oed_oriented() { return a_.s1 * a_.s1 * a_.y(1) * u1(); }

    ReflectiveParts<S> oed_reflective() {
        const S y = a_.y(1);
        // q = s1^2 y^2 u(s1^2; y^2), the squared-argument oriented kernel
        const S q = a_.s1 * a_.s1 * a_.y(2) * u_s1sq();
        const S plus = alg_div(a_.s1 * y * (a_.s1 * (one_ - q) + q),
                               one_ - (one_ + y) * q);
        const S r = rmin();
        const S minus = alg_div(y * (a_.s2 * (one_ - r) + a_.s1 * r),
                                one_ - (one_ + y) * r);
        return {plus, minus, alg_scale(plus + minus, Rational(1, 2))};
    }

    // Z(E_i): the four root-edge-fixing transformation classes.
    S inner_edge() {
        const S y = a_.y(1);
        const S t1 = a_.s1 * u1() - a_.s1;                             // Z(E_o^o)/(s1 y) - s1
        const S t2 = (u_s2_y2() - one_) * (a_.s1 * a_.s1 + a_.s2);     // identity on s2-pairs
        const S rm = zminus_over_s2y();
        const S t3 = (rm - one_) * (rm - one_) * a_.s2;
        return alg_scale(y * (t1 * t1 + t2 + t3), Rational(1, 4));
    }

    // Z(E_s): symmetry-edge rooted dissections.
    S symmetry_edge() {
        const S y = a_.y(1);
        const S s1s = a_.s1 * a_.s1;
        const S t1 = alg_scale(s1s * y * u_s1sq(), Rational(1, 2));
        const S t2 = alg_scale((s1s + a_.s2) * y * u_s2_y2(), Rational(1, 4));
        const S t3 = alg_scale(y * zplus_sq_over_s1sq(), Rational(1, 4));
        const S t4 = alg_scale(y * zminus_sq_over_s2(), Rational(1, 4));
        const S t5 = alg_scale((s1s + a_.s2) * y, Rational(1, 2));
        return t1 + t2 - t3 + t4 - t5;
    }

    // Z(F^o): cyclic compositions over all polygon sizes k >= 3.
    S face_oriented() {
        S acc = phi_log_sum();
        const S e1 = a_.s1 * a_.y(1) * u1(); // Z(E_o^o)/s1
        acc -= e1;
        acc -= alg_scale(e1 * e1 + rmin(), Rational(1, 2));
        return acc;
    }

    // Z(F): dihedral version of face_oriented.
    S face() {
        const S y = a_.y(1);
        const S rm = zminus_over_s2y();
        const S r = rmin();
        const S bracket = a_.s1 * y * rm +
                          alg_scale(a_.s1 * a_.s1 * a_.y(2) * u_s2_y2(), Rational(1, 2)) +
                          alg_scale(a_.s2 * a_.y(2) * rm * rm, Rational(1, 2));
        return alg_scale(face_oriented(), Rational(1, 2)) +
               alg_scale(bracket * alg_div(r, one_ - r), Rational(1, 2));
    }

    // Z(F_s): root face incident to a symmetry-edge.
    S face_symmetry() {
        const S y = a_.y(1);
        const S s1s = a_.s1 * a_.s1;
        return s1s * y * u_s1sq() - alg_scale(y * zplus_sq_over_s1sq(), Rational(1, 2)) +
               alg_scale(y * zminus_sq_over_s2(), Rational(1, 2)) -
               alg_scale((s1s + a_.s2) * y, Rational(1, 2));
    }

    // Z(D) assembled by the dissimilarity characteristic combination; the
    // (s1^2+s2)/2 * y term is the single-edge dissection.
    S dissection_assembled() {
        const S edge = alg_scale((a_.s1 * a_.s1 + a_.s2) * a_.y(1), Rational(1, 2));
        return edge + face() - face_symmetry() - inner_edge() +
               alg_scale(symmetry_edge(), Rational(2));
    }

    // Z(D) closed form (plain y = 1 only), with the 1/s2^2 block resolved
    // through the vertex kernel w so that no order is lost:
    //   [6 s1 + 4 s1^2 w(s2) + 8 s1 s2 w(s2) - sqrt(s2^2-6 s2+1)]/16.
    S dissection_closed() {
        S acc = alg_scale(phi_log_sum(), Rational(1, 2));
        const S s1 = a_.s1, s2 = a_.s2;
        acc += alg_scale(s2 + s1 * s1 - alg_scale(s1, Rational(4)) - alg_const(s1, Rational(2)),
                         Rational(1, 16));
        acc += alg_scale((alg_const(s1, Rational(3)) - s1) * sqrt_disc(s1), Rational(1, 16));
        const S w2 = vertex_w_s2();
        acc += alg_scale(alg_scale(s1, Rational(6)) + alg_scale(s1 * s1 * w2, Rational(4)) +
                             alg_scale(s1 * s2 * w2, Rational(8)) - sqrt_disc(s2),
                         Rational(1, 16));
        return acc;
    }

    // Z(V)/s1. Plain route: Corollary-style closed form through w. Fallback
    // (edge-marked, or forced): forward derivative of dissection_assembled.
    S vertex_ratio(bool via_derivative = false) {
        if (!via_derivative && is_plain()) return cis::vertex_ratio_closed(a_.s1, a_.s2);
        DissectionEval<D1<S>> d(derivative_args());
        return d.dissection_assembled().d;
    }

    // Z(V) itself.
    S vertex_rooted(bool via_derivative = false) {
        return a_.s1 * vertex_ratio(via_derivative);
    }

    // ---- bipartite (even-face) analogues; plain arguments only ----

    S even_oed_oriented() { return a_.s1 * a_.s1 * bu1(); }

    S even_oed_reflective_plus() {
        const S w = a_.s1 * a_.s1 * bu_s1sq();
        return alg_div(a_.s1 * a_.s1 * (one_ - w), one_ - alg_scale(w, Rational(2)));
    }
    S even_oed_reflective_minus() {
        const S v = bv();
        return alg_div(a_.s2 * (one_ - v), one_ - alg_scale(v, Rational(2)));
    }

    S even_inner_edge() {
        const S t1 = a_.s1 * (bu1() - one_);
        const S q = even_q();
        const S t3 = (q - one_) * (q - one_) * a_.s2;
        return alg_scale(t1 * t1 + (bu2() - one_) * (a_.s1 * a_.s1 + a_.s2) + t3,
                         Rational(1, 4));
    }

    S even_symmetry_edge() {
        const S s1s = a_.s1 * a_.s1;
        return alg_scale(s1s * bu_s1sq(), Rational(1, 2)) +
               alg_scale((s1s + a_.s2) * bu2(), Rational(1, 4)) -
               alg_scale(even_zplus_over_s1sq(), Rational(1, 4)) +
               alg_scale(even_zminus_sq_over_s2(), Rational(1, 4)) -
               alg_scale(s1s + a_.s2, Rational(1, 2));
    }

    // Even-size cyclic compositions: sum over even k >= 4 of Z(C_k)[t] is
    //   -sum_{d even} phi(d)/d log(1-t_d) - 1/2 sum_{d odd} phi(d)/d log(1-t_d^2)
    // minus the k=2 term (t_1^2 + t_2)/2.
    S even_face_oriented() {
        const std::vector<long> phi = totients(a_.phi_limit);
        S acc = alg_const(a_.s1, Rational(0));
        for (int d = 1; d <= a_.phi_limit; ++d) {
            const S td = a_.fam(d) * bu_fam(d);
            S arg = (d % 2 == 0) ? (one_ - td) : (one_ - td * td);
            Rational c = (d % 2 == 0) ? Rational(-phi[d], d) : Rational(-phi[d], 2 * d);
            acc += alg_scale(alg_log(arg), c);
        }
        const S t1 = a_.s1 * bu1();
        return acc - alg_scale(t1 * t1 + a_.s2 * bu2(), Rational(1, 2));
    }

    S even_face() {
        const S q = even_q();
        const S v = bv();
        const S bracket = a_.s1 * a_.s1 * bu2() + a_.s2 * q * q;
        return alg_scale(even_face_oriented(), Rational(1, 2)) +
               alg_scale(bracket * alg_div(v, one_ - v), Rational(1, 4));
    }

    S even_face_symmetry() {
        const S s1s = a_.s1 * a_.s1;
        return s1s * bu_s1sq() - alg_scale(even_zplus_over_s1sq(), Rational(1, 2)) +
               alg_scale(even_zminus_sq_over_s2(), Rational(1, 2)) -
               alg_scale(s1s + a_.s2, Rational(1, 2));
    }

    S even_dissection() {
        const S edge = alg_scale(a_.s1 * a_.s1 + a_.s2, Rational(1, 2));
        return edge + even_face() - even_face_symmetry() - even_inner_edge() +
               alg_scale(even_symmetry_edge(), Rational(2));
    }

    // Z_b(V)/s1 = d/ds1 Z_b(D); no printed closed form exists, the rooting
    // identity is realized by forward differentiation.
    S even_vertex_ratio() {
        DissectionEval<D1<S>> d(derivative_args());
        return d.even_dissection().d;
    }
    S even_vertex_rooted() { return a_.s1 * even_vertex_ratio(); }

  private:
    bool is_plain() const {
        // plain means the formula variable y is 1 (edge marking off)
        return a_.y(1) == one_;
    }

    CisArgs<D1<S>> derivative_args() const {
        CisArgs<D1<S>> d;
        d.s1 = D1<S>::var(a_.s1);
        d.s2 = D1<S>::fixed(a_.s2);
        auto fam = a_.family;
        auto s1v = d.s1;
        auto s2f = d.s2;
        d.family = [fam, s1v, s2f](int k) {
            if (k == 1) return s1v;
            if (k == 2) return s2f;
            return D1<S>::fixed(fam(k));
        };
        auto yp = a_.ypow;
        d.ypow = [yp](int k) { return D1<S>::fixed(yp(k)); };
        d.phi_limit = a_.phi_limit;
        return d;
    }

    S sqrt_disc(const S& s) {
        return alg_sqrt(s * s - alg_scale(s, Rational(6)) + one_);
    }

    // memoized kernels
    const S& u1() { return memo(u1_, [&] { return cis::oed_u(a_.s1, a_.y(1)); }); }
    const S& u_s1sq() {
        return memo(u_s1sq_, [&] { return cis::oed_u(a_.s1 * a_.s1, a_.y(2)); });
    }
    const S& u_s1p4() {
        return memo(u_s1p4_, [&] {
            const S s1s = a_.s1 * a_.s1;
            return cis::oed_u(s1s * s1s, a_.y(4));
        });
    }
    const S& u_s2_y2() { return memo(u_s2_y2_, [&] { return cis::oed_u(a_.s2, a_.y(2)); }); }
    const S& u_s2sq_y4() {
        return memo(u_s2sq_y4_, [&] { return cis::oed_u(a_.s2 * a_.s2, a_.y(4)); });
    }
    const S& vertex_w_s2() { return memo(w_s2_, [&] { return cis::vertex_w(a_.s2); }); }

    // r = s2 y^2 u(s2; y^2) = Z(E_o^o; s2; y^2)/s2
    const S& rmin() { return memo(rmin_, [&] { return a_.s2 * a_.y(2) * u_s2_y2(); }); }

    // Z-(E_o^r)/(s2 y) = [1 - r + s1 y^2 u(s2;y^2)] / (1 - (1+y) r)
    S zminus_over_s2y() {
        const S r = rmin();
        return alg_div(one_ - r + a_.s1 * a_.y(2) * u_s2_y2(), one_ - (one_ + a_.y(1)) * r);
    }

    // Z+(E_o^r; s1^2; y^2)/(s1^2 y^2) = [s1^2(1-q)+q] / (1-(1+y^2)q),
    // q = s1^4 y^4 u(s1^4; y^4)
    S zplus_sq_over_s1sq() {
        const S s1s = a_.s1 * a_.s1;
        const S q = s1s * s1s * a_.y(4) * u_s1p4();
        return alg_div(s1s * (one_ - q) + q, one_ - (one_ + a_.y(2)) * q);
    }

    // Z-(E_o^r; s1^2, s2^2; y^2)/(s2 y^2) = [s2(1-r) + s1^2 s2 y^4 u(s2^2;y^4)] / (1-(1+y^2)r),
    // r = s2^2 y^4 u(s2^2; y^4)
    S zminus_sq_over_s2() {
        const S r = a_.s2 * a_.s2 * a_.y(4) * u_s2sq_y4();
        const S num = a_.s2 * (one_ - r) + a_.s1 * a_.s1 * a_.s2 * a_.y(4) * u_s2sq_y4();
        return alg_div(num, one_ - (one_ + a_.y(2)) * r);
    }

    // sum_d (phi(d)/d) log(1/(1 - Z(E_o^o; s_d; y^d)/s_d)), the k >= 1 cyclic sum
    S phi_log_sum() {
        const std::vector<long> phi = totients(a_.phi_limit);
        S acc = alg_const(a_.s1, Rational(0));
        for (int d = 1; d <= a_.phi_limit; ++d) {
            const S& sd = a_.fam(d);
            const S ud = (d == 1) ? u1() : (d == 2 ? u_s2_y2() : cis::oed_u(sd, a_.y(d)));
            acc += alg_scale(alg_log(one_ - sd * a_.y(d) * ud), Rational(phi[d], d));
        }
        return -acc;
    }

    // bipartite kernels
    const S& bu1() { return memo(bu1_, [&] { return cis::even_oed_u(a_.s1); }); }
    const S& bu2() { return memo(bu2_, [&] { return cis::even_oed_u(a_.s2); }); }
    const S& bu_s1sq() {
        return memo(bu_s1sq_, [&] { return cis::even_oed_u(a_.s1 * a_.s1); });
    }
    const S& bu_s1p4() {
        return memo(bu_s1p4_, [&] {
            const S s1s = a_.s1 * a_.s1;
            return cis::even_oed_u(s1s * s1s);
        });
    }
    const S& bu_s2sq() {
        return memo(bu_s2sq_, [&] { return cis::even_oed_u(a_.s2 * a_.s2); });
    }
    S bu_fam(int d) {
        if (d == 1) return bu1();
        if (d == 2) return bu2();
        return cis::even_oed_u(a_.fam(d));
    }
    // v = E_b(s2)/s2
    const S& bv() { return memo(bv_, [&] { return a_.s2 * bu2(); }); }
    // Z_b-(E_o^r)/s2 = (1-v)/(1-2v)
    S even_q() {
        const S v = bv();
        return alg_div(one_ - v, one_ - alg_scale(v, Rational(2)));
    }
    // Z_b+(s1^2)/s1^2 = s1^2 (1-w)/(1-2w), w = s1^4 u_b(s1^4)
    S even_zplus_over_s1sq() {
        const S s1s = a_.s1 * a_.s1;
        const S w = s1s * s1s * bu_s1p4();
        return alg_div(s1s * (one_ - w), one_ - alg_scale(w, Rational(2)));
    }
    // Z_b-(s2^2)/s2 = s2 (1-v)/(1-2v), v = s2^2 u_b(s2^2)
    S even_zminus_sq_over_s2() {
        const S v = a_.s2 * a_.s2 * bu_s2sq();
        return alg_div(a_.s2 * (one_ - v), one_ - alg_scale(v, Rational(2)));
    }

    template <class F>
    const S& memo(std::optional<S>& slot, F&& make) {
        if (!slot) slot = make();
        return *slot;
    }

    CisArgs<S> a_;
    S one_;
    std::optional<S> u1_, u_s1sq_, u_s1p4_, u_s2_y2_, u_s2sq_y4_, w_s2_, rmin_;
    std::optional<S> bu1_, bu2_, bu_s1sq_, bu_s1p4_, bu_s2sq_, bv_;
};

// ---- spec-facing operation wrappers ----

template <class S>
S oed_oriented(const CisArgs<S>& args) {
    return DissectionEval<S>(args).oed_oriented();
}
template <class S>
ReflectiveParts<S> oed_reflective(const CisArgs<S>& args) {
    return DissectionEval<S>(args).oed_reflective();
}
template <class S>
S inner_edge(const CisArgs<S>& args) {
    return DissectionEval<S>(args).inner_edge();
}
template <class S>
S symmetry_edge(const CisArgs<S>& args) {
    return DissectionEval<S>(args).symmetry_edge();
}
template <class S>
S face_oriented(const CisArgs<S>& args) {
    return DissectionEval<S>(args).face_oriented();
}
template <class S>
S face(const CisArgs<S>& args) {
    return DissectionEval<S>(args).face();
}
template <class S>
S face_symmetry(const CisArgs<S>& args) {
    return DissectionEval<S>(args).face_symmetry();
}

// Z(D). Plain arguments evaluate the closed form; edge-marked arguments use
// the dissimilarity assembly (no closed edge-marked form is published).
template <class R>
Series<R> dissection_cis(const CisArgs<Series<R>>& args) {
    DissectionEval<Series<R>> ev(args);
    Series<R> one = Series<R>::constant(args.s1.order(), R(1));
    if (args.y(1) == one) return ev.dissection_closed();
    return ev.dissection_assembled();
}

template <class S>
S assemble_dissection_via_dissimilarity(const CisArgs<S>& args) {
    return DissectionEval<S>(args).dissection_assembled();
}

// Z(V; s1, s2), the vertex-rooted cycle index sum. Evaluated loss-free
// through the kernel w (the bracketed Corollary numerator equals
// 4 s2^2 w(s2) identically), then the textbook 1/s2^2 cancellation is
// asserted with an explicit div_exact pass over the reliable prefix.
inline PowerSeries vertex_rooted_cis(const PowerSeries& s1, const PowerSeries& s2) {
    if (!s1[0].is_zero() || !s2[0].is_zero())
        throw usage_error("vertex_rooted_cis requires constant term 0 arguments");
    const int n = s1.order();
    const PowerSeries one = PowerSeries::constant(n, Rational(1));
    auto disc = [&](const PowerSeries& s) {
        return sqrt1(s * s - s.scaled(Rational(6)) + one);
    };
    PowerSeries head = (s1 * (s1 + one - disc(s1))).scaled(Rational(1, 8));
    PowerSeries full =
        head + (s1 * (s1 + s2) * cis::vertex_w(s2)).scaled(Rational(1, 2));

    if (!s2.is_zero()) {
        PowerSeries bracket = one - s2.scaled(Rational(3)) - disc(s2);
        PowerSeries num = (s1 * (s1 + s2) * bracket).scaled(Rational(1, 8));
        PowerSeries den = s2 * s2;
        if (!num.is_zero() && num.valuation() < 2 * s2.valuation())
            throw consistency_error("vertex_rooted_cis: numerator fails to cancel 1/s2^2");
        PowerSeries tail = div_exact(num, den); // asserts leading divisibility
        for (int k = 0; k <= tail.order(); ++k)
            if (!(tail[k] + head[k] == full[k]))
                throw consistency_error("vertex_rooted_cis: route disagreement at x^" +
                                        std::to_string(k));
    }
    return full;
}

// Textbook Theorem-3.6 closed form with the raw 1/s2^2 division kept;
// cross-check route for dissection_cis (result order drops by 2*val(s2)).
inline PowerSeries dissection_cis_textbook(const CisArgs<PowerSeries>& args) {
    const int n = args.s1.order();
    const PowerSeries one = PowerSeries::constant(n, Rational(1));
    auto disc = [&](const PowerSeries& s) {
        return sqrt1(s * s - s.scaled(Rational(6)) + one);
    };
    const std::vector<long> phi = totients(args.phi_limit);
    PowerSeries acc = PowerSeries::zero(n);
    for (int d = 1; d <= args.phi_limit; ++d) {
        const PowerSeries sd = args.fam(d);
        PowerSeries arg = one.scaled(Rational(3, 4)) - sd.scaled(Rational(1, 4)) +
                          disc(sd).scaled(Rational(1, 4));
        acc += log1(arg).scaled(Rational(-phi[d], 2 * d));
    }
    const PowerSeries& s1 = args.s1;
    const PowerSeries& s2 = args.s2;
    acc += (s2 + s1 * s1 - s1.scaled(Rational(4)) - one.scaled(Rational(2))).scaled(Rational(1, 16));
    acc += ((one.scaled(Rational(3)) - s1) * disc(s1)).scaled(Rational(1, 16));
    PowerSeries num = s1 * s1 + (s1 * s2).scaled(Rational(2)) - (s1 * s1 * s2).scaled(Rational(3)) -
                      (s1 + s2) * (s1 + s2) * disc(s2);
    PowerSeries frac = div_exact(num, (s2 * s2).scaled(Rational(16)));
    return acc.at_order(frac.order()) + frac;
}

} // namespace outercount
