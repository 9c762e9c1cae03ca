#pragma once

// Arbitrary-precision reals on MPFR. Every value carries its own working
// precision (no ambient global state); binary operations round to the larger
// of the operand precisions.

#include "rational.hpp"

#include <mpfr.h>

#include <string>

namespace outercount {

inline long bits_for_digits(int digits) {
    return static_cast<long>(digits * 3.3219280948873623) + 64;
}

class MPFloat {
  public:
    MPFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit MPFloat(long prec_bits) {
        mpfr_init2(v_, prec_bits);
        mpfr_set_zero(v_, 1);
    }
    MPFloat(const MPFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MPFloat(MPFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    MPFloat& operator=(const MPFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MPFloat& operator=(MPFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MPFloat() { mpfr_clear(v_); }

    static MPFloat of(double x, long prec) {
        MPFloat r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static MPFloat of(long x, long prec) {
        MPFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static MPFloat of(const Rational& q, long prec) {
        MPFloat r(prec);
        mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static MPFloat parse(const std::string& s, long prec) {
        MPFloat r(prec);
        mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
        return r;
    }
    static MPFloat pi(long prec) {
        MPFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    long prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_finite() const { return mpfr_number_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(int digits = 25) const {
        char buf[256];
        mpfr_snprintf(buf, sizeof buf, "%.*Re", digits - 1, v_);
        return buf;
    }

    friend MPFloat bin(const MPFloat& a, const MPFloat& b,
                       int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
        MPFloat r(std::max(a.prec(), b.prec()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPFloat operator+(const MPFloat& a, const MPFloat& b) { return bin(a, b, mpfr_add); }
    friend MPFloat operator-(const MPFloat& a, const MPFloat& b) { return bin(a, b, mpfr_sub); }
    friend MPFloat operator*(const MPFloat& a, const MPFloat& b) { return bin(a, b, mpfr_mul); }
    friend MPFloat operator/(const MPFloat& a, const MPFloat& b) {
        if (b.is_zero()) throw division_error("mpfloat division by zero");
        return bin(a, b, mpfr_div);
    }
    MPFloat operator-() const {
        MPFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    MPFloat& operator+=(const MPFloat& o) { return *this = *this + o; }
    MPFloat& operator-=(const MPFloat& o) { return *this = *this - o; }
    MPFloat& operator*=(const MPFloat& o) { return *this = *this * o; }
    MPFloat& operator/=(const MPFloat& o) { return *this = *this / o; }

    friend bool operator<(const MPFloat& a, const MPFloat& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const MPFloat& a, const MPFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const MPFloat& a, const MPFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const MPFloat& a, const MPFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const MPFloat& a, const MPFloat& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator!=(const MPFloat& a, const MPFloat& b) { return !mpfr_equal_p(a.v_, b.v_); }

    friend MPFloat sqrt(const MPFloat& a) {
        if (a.sign() < 0) throw domain_error("mpfloat sqrt of negative value");
        MPFloat r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MPFloat log(const MPFloat& a) {
        if (a.sign() <= 0) throw domain_error("mpfloat log of non-positive value");
        MPFloat r(a.prec());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MPFloat exp(const MPFloat& a) {
        MPFloat r(a.prec());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MPFloat abs(const MPFloat& a) {
        MPFloat r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MPFloat pow_int(const MPFloat& a, long k) {
        MPFloat r(a.prec());
        mpfr_pow_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }

  private:
    mpfr_t v_;
};

} // namespace outercount
