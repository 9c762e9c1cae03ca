#pragma once

// Exact arbitrary-precision rational arithmetic, the coefficient field for
// every exact series in this library. Thin wrapper around GMP's mpq_class:
// values are always canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace outercount {

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct division_error : std::domain_error {
    using std::domain_error::domain_error;
};
// Raised when an internal identity that the mathematics guarantees fails to
// hold (catches formula transcription bugs).
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using BigInt = mpz_class;

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw division_error("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) throw division_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) {}

    const mpq_class& raw() const { return v_; }
    BigInt num() const { return BigInt(v_.get_num()); }
    BigInt den() const { return BigInt(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "num/den" (or just "num" for integers).
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_str();
    }
    // Integer value; throws if not an integer. Series of graph counts go
    // through this, so it doubles as a non-integrality tripwire.
    BigInt to_integer() const {
        if (!is_integer()) throw consistency_error("expected integer, got " + str());
        return num();
    }
    double to_double() const { return v_.get_d(); }

  private:
    mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

} // namespace outercount
