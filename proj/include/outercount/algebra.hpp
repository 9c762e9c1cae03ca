#pragma once

// Uniform operation names over the coefficient algebras the cycle-index
// evaluators run on: exact truncated series (Rational or YPoly coefficients),
// multiprecision jets (see jets.hpp), and first-derivative pairs (see
// ad.hpp). Each instance overloads the functions below; the evaluators in
// dissections.hpp are written once against this vocabulary.
//
//   alg_div(a, b)    division (exact series division / jet division)
//   alg_sqrt(a)      square root: exact series require constant term 1
//   alg_log(a)       logarithm:   exact series require constant term 1
//   alg_exp(a)       exponential: exact series require constant term 0
//   alg_const(m, q)  the rational constant q shaped like model m
//   alg_scale(a, q)  multiplication by a rational scalar
//   const_term_zero(a)  true when the "value at the origin" vanishes --
//                       selects the formal (Newton) branch of the root
//                       solvers over the closed-form branch
//   solve_steps(m)   Newton step count that saturates m's truncation order

#include "series.hpp"

namespace outercount {

template <class R>
Series<R> alg_div(const Series<R>& a, const Series<R>& b) {
    return div_exact(a, b);
}
template <class R>
Series<R> alg_sqrt(const Series<R>& a) {
    return sqrt1(a);
}
template <class R>
Series<R> alg_log(const Series<R>& a) {
    return log1(a);
}
template <class R>
Series<R> alg_exp(const Series<R>& a) {
    return exp0(a);
}
template <class R>
Series<R> alg_const(const Series<R>& model, const Rational& q) {
    return Series<R>::constant(model.order(), R(q));
}
template <class R>
Series<R> alg_scale(const Series<R>& a, const Rational& q) {
    return a.scaled(q);
}
template <class R>
bool const_term_zero(const Series<R>& a) {
    return detail::coeff_is_zero(a[0]);
}
template <class R>
int solve_steps(const Series<R>& model) {
    int steps = 1;
    while ((1 << steps) < model.order() + 1) ++steps;
    return steps + 1;
}

} // namespace outercount
