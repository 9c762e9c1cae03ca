#pragma once

// Truncated univariate formal power series over an exact coefficient ring
// (Rational for plain counting series, YPoly for the edge- and
// component-marked series). All arithmetic is exact; every operation is
// correct modulo x^(order+1). Binary operations require equal truncation
// orders, matching the module contract.

#include "rational.hpp"
#include "ypoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace outercount {

namespace detail {
inline bool coeff_is_zero(const Rational& r) { return r.is_zero(); }
inline bool coeff_is_zero(const YPoly& p) { return p.is_zero(); }
inline Rational coeff_div(const Rational& a, const Rational& b) { return a / b; }
// YPoly division: by a constant when the divisor is constant, exact
// polynomial division otherwise (throws on nonzero remainder).
inline YPoly coeff_div(const YPoly& a, const YPoly& b) {
    if (b.degree() == 0) return a / b.coeff(0);
    return YPoly::divexact(a, b);
}
inline Rational coeff_scale(const Rational& a, const Rational& r) { return a * r; }
inline YPoly coeff_scale(YPoly a, const Rational& r) { a.scale(r); return a; }
} // namespace detail

template <class R>
class Series {
  public:
    Series() : order_(0), c_(1) {}
    explicit Series(int order) : order_(order), c_(order + 1) {
        if (order < 0) throw usage_error("negative truncation order");
    }
    Series(int order, std::vector<R> coeffs) : order_(order), c_(std::move(coeffs)) {
        if (order < 0) throw usage_error("negative truncation order");
        c_.resize(order + 1);
    }

    static Series zero(int order) { return Series(order); }
    static Series constant(int order, R v) {
        Series s(order);
        s.c_[0] = std::move(v);
        return s;
    }
    static Series monomial(int order, R v, int k) {
        Series s(order);
        if (k < 0) throw usage_error("negative exponent");
        if (k <= order) s.c_[k] = std::move(v);
        return s;
    }
    static Series identity(int order) { return monomial(order, R(1), 1); } // the series x

    int order() const { return order_; }
    const R& operator[](int k) const { return c_[k]; }
    R& coeff_ref(int k) { return c_[k]; }
    const std::vector<R>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!detail::coeff_is_zero(x)) return false;
        return true;
    }
    // Index of the first nonzero coefficient; order+1 for the zero series.
    int valuation() const {
        for (int k = 0; k <= order_; ++k)
            if (!detail::coeff_is_zero(c_[k])) return k;
        return order_ + 1;
    }

    Series at_order(int m) const {
        if (m == order_) return *this;
        if (m > order_) throw usage_error("cannot extend truncation order");
        std::vector<R> c(c_.begin(), c_.begin() + m + 1);
        return Series(m, std::move(c));
    }

    Series operator-() const {
        Series r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        check_orders(a, b);
        Series r = a;
        for (int k = 0; k <= a.order_; ++k) r.c_[k] += b.c_[k];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        check_orders(a, b);
        Series r = a;
        for (int k = 0; k <= a.order_; ++k) r.c_[k] -= b.c_[k];
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        check_orders(a, b);
        Series r(a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (!detail::coeff_is_zero(b.c_[j])) r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series scaled(const Rational& r) const {
        Series s = *this;
        for (auto& x : s.c_) x = detail::coeff_scale(x, r);
        return s;
    }
    Series plus_const(const R& v) const {
        Series s = *this;
        s.c_[0] += v;
        return s;
    }

    // Multiplication by x^k (top coefficients fall off the truncation).
    Series shifted_up(int k) const {
        Series s(order_);
        for (int j = 0; j + k <= order_; ++j) s.c_[j + k] = c_[j];
        return s;
    }

    bool operator==(const Series& o) const { return order_ == o.order_ && equal_coeffs(o); }
    bool operator!=(const Series& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "[";
        for (int k = 0; k <= order_; ++k) {
            if (k) s += ", ";
            if constexpr (std::is_same_v<R, Rational>)
                s += c_[k].str();
            else
                s += "(" + c_[k].str() + ")";
        }
        return s + "]";
    }

  private:
    static void check_orders(const Series& a, const Series& b) {
        if (a.order_ != b.order_) throw usage_error("series truncation orders differ");
    }
    bool equal_coeffs(const Series& o) const {
        for (int k = 0; k <= order_; ++k)
            if (!(c_[k] == o.c_[k])) return false;
        return true;
    }

    int order_;
    std::vector<R> c_;
};

using PowerSeries = Series<Rational>;
using YSeries = Series<YPoly>;

// q with q*b = a modulo x^(order+1-val(b)); the result order drops by val(b).
// Leading-coefficient divisibility is asserted through the coefficient ring.
template <class R>
Series<R> div_exact(const Series<R>& a, const Series<R>& b) {
    if (a.order() != b.order()) throw usage_error("series truncation orders differ");
    if (b.is_zero()) throw division_error("series division by zero");
    const int v = b.valuation();
    if (a.valuation() < v) throw division_error("divisor valuation exceeds dividend valuation");
    const int n = a.order() - v;
    Series<R> q(n);
    for (int k = 0; k <= n; ++k) {
        R acc = a[k + v];
        for (int j = 0; j < k; ++j) {
            if (!detail::coeff_is_zero(q[j])) acc -= q[j] * b[v + k - j];
        }
        q.coeff_ref(k) = detail::coeff_div(acc, b[v]);
    }
    return q;
}

// Division by a series with invertible constant term; order is preserved.
template <class R>
Series<R> div_unit(const Series<R>& a, const Series<R>& b) {
    if (detail::coeff_is_zero(b[0]))
        throw division_error("div_unit divisor has zero constant term");
    return div_exact(a, b);
}

template <class R>
Series<R> derivative(const Series<R>& a) {
    if (a.order() == 0) return Series<R>::zero(0);
    Series<R> d(a.order() - 1);
    for (int k = 1; k <= a.order(); ++k)
        d.coeff_ref(k - 1) = detail::coeff_scale(a[k], Rational(k));
    return d;
}

// Antiderivative with zero constant term; order grows by one.
template <class R>
Series<R> integrate(const Series<R>& a) {
    Series<R> s(a.order() + 1);
    for (int k = 0; k <= a.order(); ++k)
        s.coeff_ref(k + 1) = detail::coeff_scale(a[k], Rational(1, k + 1));
    return s;
}

// Square root with constant term 1, by Newton iteration (exact arithmetic;
// each step doubles the number of correct coefficients).
template <class R>
Series<R> sqrt1(const Series<R>& a) {
    if (!(a[0] == R(1))) throw domain_error("sqrt1 requires constant term 1");
    Series<R> s = Series<R>::constant(a.order(), R(1));
    int correct = 1;
    while (correct <= a.order()) {
        s = (s + div_unit(a, s)).scaled(Rational(1, 2));
        correct *= 2;
    }
    return s;
}

// log of a series with constant term 1: integrate a'/a.
template <class R>
Series<R> log1(const Series<R>& a) {
    if (!(a[0] == R(1))) throw domain_error("log1 requires constant term 1");
    if (a.order() == 0) return Series<R>::zero(0);
    Series<R> d = derivative(a);
    return integrate(div_unit(d, a.at_order(a.order() - 1)));
}

// exp of a series with constant term 0, by the standard coefficient
// recurrence n*e_n = sum_k k*a_k*e_{n-k}.
template <class R>
Series<R> exp0(const Series<R>& a) {
    if (!detail::coeff_is_zero(a[0])) throw domain_error("exp0 requires constant term 0");
    Series<R> e = Series<R>::constant(a.order(), R(1));
    for (int n = 1; n <= a.order(); ++n) {
        R acc{};
        for (int k = 1; k <= n; ++k) {
            if (!detail::coeff_is_zero(a[k]))
                acc += detail::coeff_scale(a[k], Rational(k)) * e[n - k];
        }
        e.coeff_ref(n) = detail::coeff_scale(acc, Rational(1, n));
    }
    return e;
}

// a(x^k), truncated at the original order.
template <class R>
Series<R> substitute_power(const Series<R>& a, int k) {
    if (k < 1) throw usage_error("substitute_power requires k >= 1");
    Series<R> s(a.order());
    for (int j = 0; j * k <= a.order(); ++j) s.coeff_ref(j * k) = a[j];
    return s;
}

// outer(inner(x)) by Horner evaluation; inner must have constant term 0.
template <class R>
Series<R> compose(const Series<R>& outer, const Series<R>& inner) {
    if (outer.order() != inner.order()) throw usage_error("series truncation orders differ");
    if (!detail::coeff_is_zero(inner[0]))
        throw domain_error("compose requires inner constant term 0");
    Series<R> r = Series<R>::constant(outer.order(), outer[outer.order()]);
    for (int k = outer.order() - 1; k >= 0; --k) r = (r * inner).plus_const(outer[k]);
    return r;
}

} // namespace outercount
