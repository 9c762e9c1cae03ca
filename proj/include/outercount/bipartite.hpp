#pragma once

// Bipartite outerplanar graphs: blocks are dissections with all inner faces
// even, so the pipeline is the general one with the even-face evaluators
// substituted for Z(D) and Z(V). Z_b(V)/s1 is the forward derivative of the
// assembled even-face Z_b(D) (no closed form is published for it).

#include "composition.hpp"

namespace outercount {

namespace detail {

// Z_b(V; a, b)/a. As in the general case only the d = 1 term of the cyclic
// sum depends on s1, so phi_limit = 1 is exact for the derivative.
inline PowerSeries even_vertex_ratio(const PowerSeries& a, const PowerSeries& b) {
    CisArgs<PowerSeries> args;
    args.s1 = a;
    args.s2 = b;
    args.family = [a](int) { return a; };
    const int n = a.order();
    PowerSeries one = PowerSeries::constant(n, Rational(1));
    args.ypow = [one](int) { return one; };
    args.phi_limit = 1;
    return DissectionEval<PowerSeries>(args).even_vertex_ratio();
}

} // namespace detail

inline PowerSeries even_dissection_cis(const CisArgs<PowerSeries>& args) {
    return DissectionEval<PowerSeries>(args).even_dissection();
}

// Unlabeled bipartite dissections (even-face dissections plus the single
// edge), by vertex count.
inline PowerSeries bipartite_dissection_series(int order) {
    if (order < 2) throw usage_error("bipartite_dissection_series requires order >= 2");
    auto args = plain_args(PowerSeries::identity(order));
    PowerSeries d = even_dissection_cis(args);
    detail::check_counting_series(d, "d_b");
    return d;
}

struct BipartiteTables {
    int trunc = 0;
    PowerSeries d_b, chat_b, c_b, g_b;
};

inline PowerSeries chat_b_series(int order) {
    if (order < 1) throw usage_error("chat_b_series requires order >= 1");
    auto rhs = [](const PowerSeries& chat) {
        const int ord = chat.order();
        PowerSeries sum = PowerSeries::zero(ord);
        for (int k = 1; k <= ord; ++k) {
            PowerSeries a = substitute_power(chat, k);
            if (a.is_zero()) break;
            PowerSeries b = substitute_power(chat, 2 * k);
            sum += detail::even_vertex_ratio(a, b).scaled(Rational(1, k));
        }
        return exp0(sum).shifted_up(1);
    };
    return detail::rooted_fixed_point<Rational>(order, rhs, "chat_b");
}

inline BipartiteTables bipartite_tables(int order) {
    BipartiteTables t;
    t.trunc = order;
    t.d_b = bipartite_dissection_series(order);
    t.chat_b = chat_b_series(order);
    auto args = plain_args(t.chat_b);
    PowerSeries zd = DissectionEval<PowerSeries>(args).even_dissection();
    PowerSeries zv = t.chat_b * detail::even_vertex_ratio(t.chat_b, args.s2);
    t.c_b = t.chat_b + zd - zv;
    detail::check_counting_series(t.c_b, "c_b");
    t.g_b = multiset_exp(t.c_b);
    detail::check_counting_series(t.g_b, "g_b");
    return t;
}

} // namespace outercount
