#pragma once

// The block decomposition pipeline: vertex-rooted connected outerplanar
// graphs Chat(x) as the fixed point of
//     Chat = x * exp( sum_{k>=1} Z(V; Chat(x^k), Chat(x^2k)) / (k Chat(x^k)) ),
// then C = Chat + Z(D; Chat) - Z(V; Chat) and G = exp(sum_k C(x^k)/k),
// plain and edge-marked. Z(V; a, b)/a is evaluated through the loss-free
// vertex kernel (plain) or the forward derivative of the assembled Z(D)
// (edge-marked), so the fixed point runs at the target order directly.

#include "dissections.hpp"
#include "edge_series.hpp"

#include <vector>

namespace outercount {

namespace detail {

// Substitute x -> x^k and y -> y^k in an edge-marked series.
inline YSeries subst_xy(const YSeries& base, int k) {
    const int n = base.order();
    YSeries s(n);
    for (int j = 0; j * k <= n; ++j) {
        const YPoly& p = base[j];
        YPoly q;
        for (int m = 0; m <= p.degree(); ++m) q += YPoly::monomial(p.coeff(m), m * k);
        s.coeff_ref(j * k) = q;
    }
    return s;
}

// Z(V; a, b)/a for plain series via the closed kernel form.
inline PowerSeries vertex_ratio_plain(const PowerSeries& a, const PowerSeries& b) {
    return cis::vertex_ratio_closed(a, b);
}

// Z(V; a, b; y)/a for edge-marked series: derivative of the assembled Z(D).
// Only the d = 1 term of the phi-sum depends on s1, so phi_limit = 1 is
// exact for the derivative part.
inline YSeries vertex_ratio_xy(const YSeries& a, const YSeries& b, int ypower) {
    CisArgs<YSeries> args;
    args.s1 = a;
    args.s2 = b;
    args.family = [a](int) { return a; };
    const int n = a.order();
    args.ypow = [n, ypower](int d) {
        return YSeries::constant(n, YPoly::monomial(Rational(1), ypower * d));
    };
    args.phi_limit = 1;
    return DissectionEval<YSeries>(args).vertex_ratio(true);
}

inline void check_counting_series(const PowerSeries& s, const char* what) {
    for (int k = 0; k <= s.order(); ++k) {
        if (!s[k].is_integer() || s[k].sign() < 0)
            throw consistency_error(std::string(what) + ": coefficient of x^" +
                                    std::to_string(k) + " is not a non-negative integer: " +
                                    s[k].str());
    }
}
inline void check_counting_series(const YSeries& s, const char* what) {
    for (int k = 0; k <= s.order(); ++k)
        for (int m = 0; m <= s[k].degree(); ++m) {
            Rational c = s[k].coeff(m);
            if (!c.is_integer() || c.sign() < 0)
                throw consistency_error(std::string(what) + ": coefficient x^" +
                                        std::to_string(k) + " y^" + std::to_string(m) +
                                        " is not a non-negative integer: " + c.str());
        }
}

} // namespace detail

namespace detail {

// Fixed point of chat = RHS(chat) where the x prefactor guarantees each pass
// extends the correct coefficient prefix by at least one. Pass p therefore
// runs at truncation order p+1; a final full-order residual check guards the
// result. RHS(chat) receives the working truncation order alongside chat.
template <class R, class Rhs>
Series<R> rooted_fixed_point(int order, Rhs&& rhs, const char* what) {
    Series<R> chat = Series<R>::identity(order);
    for (int pass = 1; pass < order; ++pass) {
        const int ord = std::min(pass + 1, order);
        Series<R> next = rhs(chat.at_order(ord));
        for (int j = 0; j <= ord; ++j) chat.coeff_ref(j) = next[j];
    }
    if (order > 1) {
        Series<R> next = rhs(chat);
        if (!(next == chat))
            throw consistency_error(std::string(what) + " fixed point residual is nonzero");
        chat = next;
    }
    check_counting_series(chat, what);
    return chat;
}

} // namespace detail

// Vertex-rooted connected outerplanar graphs.
inline PowerSeries chat_series(int order) {
    if (order < 1) throw usage_error("chat_series requires order >= 1");
    auto rhs = [](const PowerSeries& chat) {
        const int ord = chat.order();
        PowerSeries sum = PowerSeries::zero(ord);
        for (int k = 1; k <= ord; ++k) {
            PowerSeries a = substitute_power(chat, k);
            if (a.is_zero()) break; // valuation k exceeds the order
            PowerSeries b = substitute_power(chat, 2 * k);
            sum += detail::vertex_ratio_plain(a, b).scaled(Rational(1, k));
        }
        return exp0(sum).shifted_up(1);
    };
    return detail::rooted_fixed_point<Rational>(order, rhs, "chat");
}

// Edge-marked version: Chat(x,y) with y marking edges.
inline YSeries chat_series_xy(int order) {
    if (order < 1) throw usage_error("chat_series_xy requires order >= 1");
    auto rhs = [](const YSeries& chat) {
        const int ord = chat.order();
        YSeries sum = YSeries::zero(ord);
        for (int k = 1; k <= ord; ++k) {
            YSeries a = detail::subst_xy(chat, k);
            if (a.is_zero()) break;
            YSeries b = detail::subst_xy(chat, 2 * k);
            sum += detail::vertex_ratio_xy(a, b, k).scaled(Rational(1, k));
        }
        return exp0(sum).shifted_up(1);
    };
    return detail::rooted_fixed_point<YPoly>(order, rhs, "chat_xy");
}

// The unlabeled-multiset construction exp(sum_k f(x^k)/k).
template <class R>
Series<R> multiset_exp(const Series<R>& f) {
    if (!detail::coeff_is_zero(f[0]))
        throw domain_error("multiset_exp requires constant term 0");
    Series<R> sum = f;
    for (int k = 2; k <= f.order(); ++k) {
        Series<R> fk = substitute_power(f, k);
        if (fk.is_zero()) break;
        sum += fk.scaled(Rational(1, k));
    }
    return exp0(sum);
}

// Connected outerplanar graphs from the rooted series.
inline PowerSeries c_series_from(const PowerSeries& chat) {
    auto args = plain_args(chat);
    PowerSeries zd = dissection_cis(args);
    PowerSeries zv = chat * detail::vertex_ratio_plain(chat, args.s2);
    PowerSeries c = chat + zd - zv;
    detail::check_counting_series(c, "c");
    return c;
}

inline YSeries c_series_xy_from(const YSeries& chat) {
    auto args = edge_args(chat);
    YSeries zd = assemble_dissection_via_dissimilarity(args);
    YSeries zv = chat * detail::vertex_ratio_xy(chat, args.s2, 1);
    YSeries c = chat + zd - zv;
    detail::check_counting_series(c, "c_xy");
    return c;
}

// Outerplanar graphs: multisets of connected ones; g0 = 1 is the empty graph.
inline PowerSeries g_series_from(const PowerSeries& c) {
    PowerSeries g = multiset_exp(c);
    detail::check_counting_series(g, "g");
    return g;
}

// Edge-marked multiset construction: the k-th slot gets C(x^k, y^k).
inline YSeries g_series_xy_from(const YSeries& c) {
    YSeries sum = YSeries::zero(c.order());
    for (int k = 1; k <= c.order(); ++k) {
        YSeries ck = detail::subst_xy(c, k);
        if (ck.is_zero()) break;
        sum += ck.scaled(Rational(1, k));
    }
    YSeries g = exp0(sum);
    detail::check_counting_series(g, "g_xy");
    return g;
}

// Exact census tables for unlabeled outerplanar graphs.
struct CensusTables {
    int trunc = 0;
    PowerSeries chat, c, g;
    bool has_xy = false;
    EdgeSeries chat_xy, c_xy, g_xy;
};

inline CensusTables build_tables(int order, bool with_xy = false) {
    CensusTables t;
    t.trunc = order;
    t.chat = chat_series(order);
    t.c = c_series_from(t.chat);
    t.g = g_series_from(t.c);
    if (!t.g[0].is_one()) throw consistency_error("g0 must be 1");
    for (int n = 0; n <= order; ++n)
        if (t.g[n] < t.c[n]) throw consistency_error("g_n >= c_n violated");
    if (with_xy) {
        t.has_xy = true;
        YSeries chat_xy = chat_series_xy(order);
        YSeries c_xy = c_series_xy_from(chat_xy);
        YSeries g_xy = g_series_xy_from(c_xy);
        t.chat_xy = EdgeSeries(chat_xy);
        t.c_xy = EdgeSeries(c_xy);
        t.g_xy = EdgeSeries(g_xy);
        if (!(t.chat_xy.eval_y1() == t.chat) || !(t.c_xy.eval_y1() == t.c) ||
            !(t.g_xy.eval_y1() == t.g))
            throw consistency_error("edge-marked tables disagree with plain tables at y=1");
    }
    return t;
}

// Exact expected number of components of a random n-vertex outerplanar
// graph: (1/g_n) [x^n] G(x) * sum_k C(x^k).
inline Rational expected_components_exact(const CensusTables& t, int n) {
    if (n < 1 || n > t.trunc) throw usage_error("n out of range of the tables");
    PowerSeries g = t.g.at_order(n);
    PowerSeries sum = PowerSeries::zero(n);
    for (int k = 1; k <= n; ++k) sum += substitute_power(t.c.at_order(n), k);
    return (g * sum)[n] / t.g[n];
}

// Exact counts of n-vertex outerplanar graphs by their number of components
// lying in the family A (A must count connected outerplanar graphs, hence
// A <= C termwise). Index k of the result = number of A-components.
inline std::vector<BigInt> components_distribution_exact(const CensusTables& t,
                                                         const PowerSeries& A, int n) {
    if (n < 1 || n > t.trunc || A.order() < n) throw usage_error("n out of range");
    if (!A[0].is_zero()) throw usage_error("family series must have constant term 0");
    for (int k = 0; k <= std::min(A.order(), t.trunc); ++k)
        if (A[k] > t.c[k] || A[k].sign() < 0)
            throw usage_error("family series is not dominated by C");
    // G^A(x,u) = G(x) exp(sum_j (u^j - 1)/j A(x^j)), u-degree capped at n
    YSeries expo = YSeries::zero(n);
    PowerSeries An = A.at_order(n);
    for (int j = 1; j <= n; ++j) {
        PowerSeries aj = substitute_power(An, j);
        if (aj.is_zero()) break;
        YPoly factor = YPoly::monomial(Rational(1, j), j) - YPoly(Rational(1, j));
        for (int i = 0; i <= n; ++i)
            if (!aj[i].is_zero()) {
                YPoly add = factor;
                add.scale(aj[i]);
                expo.coeff_ref(i) += add;
            }
    }
    YSeries ga = lift_to_y(t.g.at_order(n)) * exp0(expo);
    std::vector<BigInt> counts(n + 1);
    for (int k = 0; k <= n; ++k) counts[k] = ga[n].coeff(k).to_integer();
    return counts;
}

} // namespace outercount
