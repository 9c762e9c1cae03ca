#pragma once

// Forward-mode first derivatives over any coefficient algebra: D1<S> carries
// (value, directional derivative) and propagates the chain rule through the
// algebra vocabulary. Used to realize the rooting identity
// Z(V) = s1 * d/ds1 Z(D) where no closed form is available (edge-marked and
// bipartite vertex-rooted cycle index sums), and for derivative cross-checks.

#include "algebra.hpp"

namespace outercount {

template <class S>
struct D1 {
    S v; // value
    S d; // derivative in the chosen direction

    D1() = default;
    D1(S value, S deriv) : v(std::move(value)), d(std::move(deriv)) {}

    static D1 var(const S& value) {
        return D1(value, alg_const(value, Rational(1)));
    }
    static D1 fixed(const S& value) {
        return D1(value, alg_const(value, Rational(0)));
    }

    D1 operator-() const { return D1(-v, -d); }
    friend D1 operator+(const D1& a, const D1& b) { return D1(a.v + b.v, a.d + b.d); }
    friend D1 operator-(const D1& a, const D1& b) { return D1(a.v - b.v, a.d - b.d); }
    friend D1 operator*(const D1& a, const D1& b) {
        return D1(a.v * b.v, a.d * b.v + a.v * b.d);
    }
    D1& operator+=(const D1& o) { return *this = *this + o; }
    D1& operator-=(const D1& o) { return *this = *this - o; }
    D1& operator*=(const D1& o) { return *this = *this * o; }
};

template <class S>
D1<S> alg_div(const D1<S>& a, const D1<S>& b) {
    S q = alg_div(a.v, b.v);
    return D1<S>(q, alg_div(a.d - q * b.d, b.v));
}
template <class S>
D1<S> alg_sqrt(const D1<S>& a) {
    S r = alg_sqrt(a.v);
    return D1<S>(r, alg_div(alg_scale(a.d, Rational(1, 2)), r));
}
template <class S>
D1<S> alg_log(const D1<S>& a) {
    return D1<S>(alg_log(a.v), alg_div(a.d, a.v));
}
template <class S>
D1<S> alg_exp(const D1<S>& a) {
    S e = alg_exp(a.v);
    return D1<S>(e, e * a.d);
}
template <class S>
D1<S> alg_const(const D1<S>& model, const Rational& q) {
    return D1<S>::fixed(alg_const(model.v, q));
}
template <class S>
D1<S> alg_scale(const D1<S>& a, const Rational& q) {
    return D1<S>(alg_scale(a.v, q), alg_scale(a.d, q));
}
template <class S>
bool const_term_zero(const D1<S>& a) {
    return const_term_zero(a.v);
}
template <class S>
int solve_steps(const D1<S>& model) {
    return solve_steps(model.v) + 1;
}

} // namespace outercount
