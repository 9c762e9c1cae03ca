#pragma once

// Dense polynomials in the edge-marking variable y over Rational. These are
// the coefficients of EdgeSeries; in the component-counting construction the
// same type marks components (variable u). Always normalized: no trailing
// zero coefficients, the zero polynomial has an empty coefficient vector.

#include "rational.hpp"

#include <vector>

namespace outercount {

class YPoly {
  public:
    YPoly() = default;
    YPoly(long n) { if (n != 0) c_.push_back(Rational(n)); }
    YPoly(const Rational& r) { if (!r.is_zero()) c_.push_back(r); }
    explicit YPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static YPoly monomial(const Rational& r, int deg) {
        YPoly p;
        if (!r.is_zero()) {
            p.c_.assign(deg + 1, Rational());
            p.c_[deg] = r;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational();
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    YPoly operator-() const {
        YPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    YPoly& operator+=(const YPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    YPoly& operator-=(const YPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
    friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }

    friend YPoly operator*(const YPoly& a, const YPoly& b) {
        if (a.is_zero() || b.is_zero()) return YPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return YPoly(std::move(r));
    }
    YPoly& operator*=(const YPoly& o) { return *this = *this * o; }

    // Division requires an invertible divisor, i.e. a nonzero constant: that
    // is the only shape the production formulas ever divide by (see series
    // division). Full polynomial division lives in divexact below.
    YPoly& operator/=(const Rational& r) {
        if (r.is_zero()) throw division_error("ypoly division by zero");
        for (auto& x : c_) x /= r;
        return *this;
    }
    friend YPoly operator/(YPoly a, const Rational& b) { return a /= b; }

    YPoly& scale(const Rational& r) {
        if (r.is_zero()) { c_.clear(); return *this; }
        for (auto& x : c_) x *= r;
        return *this;
    }

    // Exact polynomial division; throws if the remainder is nonzero. Used by
    // the cross-check implementations of the printed edge-marked closed
    // forms, whose denominators have leading coefficient (y-1).
    static YPoly divexact(const YPoly& a, const YPoly& b) {
        if (b.is_zero()) throw division_error("ypoly division by zero polynomial");
        if (a.is_zero()) return YPoly();
        std::vector<Rational> rem = a.c_;
        int db = b.degree();
        int dq = static_cast<int>(rem.size()) - 1 - db;
        if (dq < 0) throw division_error("ypoly divexact: degree too small");
        std::vector<Rational> q(dq + 1);
        const Rational& lead = b.c_[db];
        for (int k = dq; k >= 0; --k) {
            Rational f = rem[k + db] / lead;
            q[k] = f;
            if (!f.is_zero())
                for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
        }
        for (const auto& r : rem)
            if (!r.is_zero()) throw division_error("ypoly divexact: nonzero remainder");
        return YPoly(std::move(q));
    }

    Rational eval_one() const {
        Rational s;
        for (const auto& x : c_) s += x;
        return s;
    }
    Rational eval(const Rational& y) const {
        Rational s;
        for (int k = degree(); k >= 0; --k) s = s * y + c_[k];
        return s;
    }

    bool operator==(const YPoly& o) const { return c_ == o.c_; }
    bool operator!=(const YPoly& o) const { return !(*this == o); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = 0; k <= degree(); ++k) {
            if (c_[k].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[k].str();
            if (k > 0) s += "*y^" + std::to_string(k);
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace outercount
