#pragma once

// EdgeSeries: truncated bivariate series in (x, y) where x marks vertices and
// y marks edges. Stored as a univariate series in x with YPoly coefficients.
// The constructor enforces the structural bound deg_y([x^n]) <= 2n (an
// outerplanar graph on n vertices has fewer than 2n edges); intermediate
// computations that legitimately exceed it live in raw Series<YPoly>.

#include "series.hpp"

namespace outercount {

class EdgeSeries {
  public:
    EdgeSeries() : s_(0) {}
    explicit EdgeSeries(YSeries s) : s_(std::move(s)) { check_cap(); }

    int order() const { return s_.order(); }
    const YSeries& raw() const { return s_; }
    const YPoly& operator[](int n) const { return s_[n]; }
    Rational coeff(int n, int m) const { return s_[n].coeff(m); }

    PowerSeries eval_y1() const {
        PowerSeries p(s_.order());
        for (int n = 0; n <= s_.order(); ++n) p.coeff_ref(n) = s_[n].eval_one();
        return p;
    }
    PowerSeries eval_y(const Rational& y) const {
        PowerSeries p(s_.order());
        for (int n = 0; n <= s_.order(); ++n) p.coeff_ref(n) = s_[n].eval(y);
        return p;
    }

    friend EdgeSeries operator+(const EdgeSeries& a, const EdgeSeries& b) {
        return EdgeSeries(a.s_ + b.s_);
    }
    friend EdgeSeries operator-(const EdgeSeries& a, const EdgeSeries& b) {
        return EdgeSeries(a.s_ - b.s_);
    }
    friend EdgeSeries operator*(const EdgeSeries& a, const EdgeSeries& b) {
        return EdgeSeries(a.s_ * b.s_);
    }
    bool operator==(const EdgeSeries& o) const { return s_ == o.s_; }

  private:
    void check_cap() const {
        for (int n = 0; n <= s_.order(); ++n)
            if (s_[n].degree() > 2 * n)
                throw consistency_error("edge series coefficient exceeds y-degree 2n at x^" +
                                        std::to_string(n));
    }
    YSeries s_;
};

inline EdgeSeries edge_div_exact(const EdgeSeries& a, const EdgeSeries& b) {
    return EdgeSeries(div_exact(a.raw(), b.raw()));
}
inline EdgeSeries edge_substitute_power(const EdgeSeries& a, int k) {
    return EdgeSeries(substitute_power(a.raw(), k));
}

// x-series lifted to a y-free bivariate series.
inline YSeries lift_to_y(const PowerSeries& p) {
    YSeries s(p.order());
    for (int n = 0; n <= p.order(); ++n) s.coeff_ref(n) = YPoly(p[n]);
    return s;
}

} // namespace outercount
