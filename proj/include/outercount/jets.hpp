#pragma once

// Truncated multiprecision Taylor jets, the algebra the cycle-index
// evaluators run on for the singularity analysis. XJet is univariate (used
// for singular expansions in X = sqrt(1-x/rho)); XYJet is bivariate with
// total-degree truncation (used for the Newton solves on (H, dH/dy) and the
// order-4 jets behind the undetermined-coefficients procedure). Analytic
// functions of a jet are Taylor compositions around the constant term, exact
// at these tiny orders.

#include "algebra.hpp"
#include "mpfloat.hpp"

#include <vector>

namespace outercount {

class XJet {
  public:
    XJet() : ord_(0), c_(1) {}
    XJet(int order, long prec) : ord_(order), c_(order + 1, MPFloat(prec)) {}

    static XJet constant(int order, long prec, const MPFloat& v) {
        XJet j(order, prec);
        j.c_[0] = v;
        return j;
    }
    // the variable: point + one unit of the jet direction
    static XJet variable(int order, long prec, const MPFloat& point) {
        XJet j(order, prec);
        j.c_[0] = point;
        if (order >= 1) j.c_[1] = MPFloat::of(1L, prec);
        return j;
    }

    int order() const { return ord_; }
    long prec() const { return c_[0].prec(); }
    const MPFloat& operator[](int k) const { return c_[k]; }
    MPFloat& coeff_ref(int k) { return c_[k]; }

    XJet operator-() const {
        XJet r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend XJet operator+(const XJet& a, const XJet& b) {
        XJet r = a;
        for (int k = 0; k <= a.ord_; ++k) r.c_[k] += b.c_[k];
        return r;
    }
    friend XJet operator-(const XJet& a, const XJet& b) {
        XJet r = a;
        for (int k = 0; k <= a.ord_; ++k) r.c_[k] -= b.c_[k];
        return r;
    }
    friend XJet operator*(const XJet& a, const XJet& b) {
        XJet r(a.ord_, std::max(a.prec(), b.prec()));
        for (int i = 0; i <= a.ord_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.ord_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    XJet& operator+=(const XJet& o) { return *this = *this + o; }
    XJet& operator-=(const XJet& o) { return *this = *this - o; }
    XJet& operator*=(const XJet& o) { return *this = *this * o; }

    friend bool operator==(const XJet& a, const XJet& b) {
        if (a.ord_ != b.ord_) return false;
        for (int k = 0; k <= a.ord_; ++k)
            if (a.c_[k] != b.c_[k]) return false;
        return true;
    }

    // f applied coefficientwise via the Taylor coefficients of f at c0:
    // result = sum_k taylor[k] * (jet - c0)^k.
    XJet compose_analytic(const std::vector<MPFloat>& taylor) const {
        XJet t = *this;
        t.c_[0] = MPFloat(prec());
        XJet r = constant(ord_, prec(), taylor[0]);
        XJet p = constant(ord_, prec(), MPFloat::of(1L, prec()));
        for (int k = 1; k <= ord_ && k < static_cast<int>(taylor.size()); ++k) {
            p *= t;
            XJet term = p;
            for (auto& x : term.c_) x = x * taylor[k];
            r += term;
        }
        return r;
    }

  private:
    int ord_;
    std::vector<MPFloat> c_;
};

// Bivariate jet truncated by total degree; coefficient (i, j) multiplies
// u^i w^j where u is the first direction and w the second.
class XYJet {
  public:
    XYJet() : ord_(0), c_(1) {}
    XYJet(int order, long prec)
        : ord_(order), c_((order + 1) * (order + 2) / 2, MPFloat(prec)) {}

    static XYJet constant(int order, long prec, const MPFloat& v) {
        XYJet j(order, prec);
        j.at(0, 0) = v;
        return j;
    }
    static XYJet variable_u(int order, long prec, const MPFloat& point) {
        XYJet j(order, prec);
        j.at(0, 0) = point;
        if (order >= 1) j.at(1, 0) = MPFloat::of(1L, prec);
        return j;
    }
    static XYJet variable_w(int order, long prec, const MPFloat& point) {
        XYJet j(order, prec);
        j.at(0, 0) = point;
        if (order >= 1) j.at(0, 1) = MPFloat::of(1L, prec);
        return j;
    }

    int order() const { return ord_; }
    long prec() const { return c_[0].prec(); }
    static int index(int i, int j) {
        int d = i + j;
        return d * (d + 1) / 2 + j;
    }
    const MPFloat& coeff(int i, int j) const { return c_[index(i, j)]; }
    MPFloat& at(int i, int j) { return c_[index(i, j)]; }

    XYJet operator-() const {
        XYJet r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend XYJet operator+(const XYJet& a, const XYJet& b) {
        XYJet r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
        return r;
    }
    friend XYJet operator-(const XYJet& a, const XYJet& b) {
        XYJet r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
        return r;
    }
    friend XYJet operator*(const XYJet& a, const XYJet& b) {
        XYJet r(a.ord_, std::max(a.prec(), b.prec()));
        for (int di = 0; di <= a.ord_; ++di)
            for (int i = 0; i <= di; ++i) {
                const MPFloat& av = a.coeff(di - i, i);
                if (av.is_zero()) continue;
                for (int dj = 0; di + dj <= a.ord_; ++dj)
                    for (int j = 0; j <= dj; ++j) {
                        const MPFloat& bv = b.coeff(dj - j, j);
                        if (!bv.is_zero()) r.at(di - i + dj - j, i + j) += av * bv;
                    }
            }
        return r;
    }
    XYJet& operator+=(const XYJet& o) { return *this = *this + o; }
    XYJet& operator-=(const XYJet& o) { return *this = *this - o; }
    XYJet& operator*=(const XYJet& o) { return *this = *this * o; }

    friend bool operator==(const XYJet& a, const XYJet& b) {
        if (a.ord_ != b.ord_) return false;
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            if (a.c_[k] != b.c_[k]) return false;
        return true;
    }

    XYJet compose_analytic(const std::vector<MPFloat>& taylor) const {
        XYJet t = *this;
        t.at(0, 0) = MPFloat(prec());
        XYJet r = constant(ord_, prec(), taylor[0]);
        XYJet p = constant(ord_, prec(), MPFloat::of(1L, prec()));
        for (int k = 1; k <= ord_ && k < static_cast<int>(taylor.size()); ++k) {
            p *= t;
            XYJet term = p;
            for (int q = 0; q < static_cast<int>(term.size()); ++q) term.raw(q) *= taylor[k];
            r += term;
        }
        return r;
    }

    std::size_t size() const { return c_.size(); }
    MPFloat& raw(int k) { return c_[k]; }
    const MPFloat& raw(int k) const { return c_[k]; }

  private:
    int ord_;
    std::vector<MPFloat> c_;
};

namespace jet_detail {

inline std::vector<MPFloat> inv_taylor(const MPFloat& a0, int order) {
    std::vector<MPFloat> t(order + 1, MPFloat(a0.prec()));
    MPFloat one = MPFloat::of(1L, a0.prec());
    t[0] = one / a0;
    for (int k = 1; k <= order; ++k) t[k] = -t[k - 1] / a0;
    return t;
}
inline std::vector<MPFloat> sqrt_taylor(const MPFloat& a0, int order) {
    // binomial(1/2, k) a0^(1/2 - k)
    std::vector<MPFloat> t(order + 1, MPFloat(a0.prec()));
    const long p = a0.prec();
    MPFloat coef = sqrt(a0);
    MPFloat half = MPFloat::of(1L, p) / MPFloat::of(2L, p);
    t[0] = coef;
    MPFloat binom = MPFloat::of(1L, p);
    for (int k = 1; k <= order; ++k) {
        binom = binom * (half - MPFloat::of(static_cast<long>(k - 1), p)) / MPFloat::of(static_cast<long>(k), p);
        t[k] = binom * t[0] / pow_int(a0, k);
    }
    return t;
}
inline std::vector<MPFloat> log_taylor(const MPFloat& a0, int order) {
    std::vector<MPFloat> t(order + 1, MPFloat(a0.prec()));
    const long p = a0.prec();
    t[0] = log(a0);
    for (int k = 1; k <= order; ++k) {
        t[k] = MPFloat::of(k % 2 ? 1L : -1L, p) /
               (MPFloat::of(static_cast<long>(k), p) * pow_int(a0, k));
    }
    return t;
}
inline std::vector<MPFloat> exp_taylor(const MPFloat& a0, int order) {
    std::vector<MPFloat> t(order + 1, MPFloat(a0.prec()));
    const long p = a0.prec();
    t[0] = exp(a0);
    for (int k = 1; k <= order; ++k) t[k] = t[k - 1] / MPFloat::of(static_cast<long>(k), p);
    return t;
}

} // namespace jet_detail

// algebra vocabulary instances

inline XJet alg_div(const XJet& a, const XJet& b) {
    if (b[0].is_zero()) throw division_error("jet division by zero constant term");
    return a * b.compose_analytic(jet_detail::inv_taylor(b[0], b.order()));
}
inline XJet alg_sqrt(const XJet& a) {
    if (a[0].sign() <= 0) throw domain_error("jet sqrt needs positive constant term");
    return a.compose_analytic(jet_detail::sqrt_taylor(a[0], a.order()));
}
inline XJet alg_log(const XJet& a) {
    if (a[0].sign() <= 0) throw domain_error("jet log needs positive constant term");
    return a.compose_analytic(jet_detail::log_taylor(a[0], a.order()));
}
inline XJet alg_exp(const XJet& a) {
    return a.compose_analytic(jet_detail::exp_taylor(a[0], a.order()));
}
inline XJet alg_const(const XJet& model, const Rational& q) {
    return XJet::constant(model.order(), model.prec(), MPFloat::of(q, model.prec()));
}
inline XJet alg_scale(const XJet& a, const Rational& q) {
    XJet r = a;
    MPFloat f = MPFloat::of(q, a.prec());
    for (int k = 0; k <= a.order(); ++k) r.coeff_ref(k) *= f;
    return r;
}
inline bool const_term_zero(const XJet& a) { return a[0].is_zero(); }
inline int solve_steps(const XJet&) { return 64; }

inline XYJet alg_div(const XYJet& a, const XYJet& b) {
    if (b.coeff(0, 0).is_zero()) throw division_error("jet division by zero constant term");
    return a * b.compose_analytic(jet_detail::inv_taylor(b.coeff(0, 0), b.order()));
}
inline XYJet alg_sqrt(const XYJet& a) {
    if (a.coeff(0, 0).sign() <= 0) throw domain_error("jet sqrt needs positive constant term");
    return a.compose_analytic(jet_detail::sqrt_taylor(a.coeff(0, 0), a.order()));
}
inline XYJet alg_log(const XYJet& a) {
    if (a.coeff(0, 0).sign() <= 0) throw domain_error("jet log needs positive constant term");
    return a.compose_analytic(jet_detail::log_taylor(a.coeff(0, 0), a.order()));
}
inline XYJet alg_exp(const XYJet& a) {
    return a.compose_analytic(jet_detail::exp_taylor(a.coeff(0, 0), a.order()));
}
inline XYJet alg_const(const XYJet& model, const Rational& q) {
    return XYJet::constant(model.order(), model.prec(), MPFloat::of(q, model.prec()));
}
inline XYJet alg_scale(const XYJet& a, const Rational& q) {
    XYJet r = a;
    MPFloat f = MPFloat::of(q, a.prec());
    for (int k = 0; k < static_cast<int>(r.size()); ++k) r.raw(k) *= f;
    return r;
}
inline bool const_term_zero(const XYJet& a) { return a.coeff(0, 0).is_zero(); }
inline int solve_steps(const XYJet&) { return 64; }

// Evaluate an exact series (as a polynomial, all stored coefficients) on a jet.
template <class J>
J eval_poly_on_jet(const PowerSeries& f, const J& x) {
    J r = alg_const(x, f[f.order()]);
    for (int k = f.order() - 1; k >= 0; --k) r = r * x + alg_const(x, f[k]);
    return r;
}

} // namespace outercount
