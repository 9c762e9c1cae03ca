#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "outercount/dissection_oracle.hpp"
#include "outercount/dissections.hpp"

#include <cstdint>

using namespace outercount;

namespace {

struct Rng {
    uint64_t s = 0xf00dbabe12345678ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % uint64_t(hi - lo + 1)); }
    Rational rat() { return Rational(range(-3, 3), range(1, 3)); }
};

PowerSeries random_arg(Rng& rng, int order) {
    PowerSeries s(order);
    for (int k = 1; k <= order; ++k) s.coeff_ref(k) = rng.rat();
    return s;
}

long as_long(const Rational& r) { return static_cast<long>(r.to_integer().get_si()); }

} // namespace

TEST_CASE("oriented outer-edge rooted dissections") {
    const int N = 8;
    auto args = plain_args(PowerSeries::identity(N));
    PowerSeries e = oed_oriented(args);
    // the bracketing numbers 1, 1, 3, 11, 45 from x^2 on
    CHECK(as_long(e[2]) == 1);
    CHECK(as_long(e[3]) == 1);
    CHECK(as_long(e[4]) == 3);
    CHECK(as_long(e[5]) == 11);
    CHECK(as_long(e[6]) == 45);
    CHECK(as_long(e[7]) == 197);

    auto zero = plain_args(PowerSeries::zero(N));
    CHECK(oed_oriented(zero).is_zero());
}

TEST_CASE("edge-marked evaluation at y = 1 equals plain") {
    const int N = 8;
    auto plain = plain_args(PowerSeries::identity(N));
    auto edge = edge_args(YSeries::identity(N));
    DissectionEval<PowerSeries> pe(plain);
    DissectionEval<YSeries> ee(edge);
    auto y1 = [](const YSeries& s) {
        PowerSeries p(s.order());
        for (int k = 0; k <= s.order(); ++k) p.coeff_ref(k) = s[k].eval_one();
        return p;
    };
    CHECK(y1(ee.oed_oriented()) == pe.oed_oriented());
    CHECK(y1(ee.oed_reflective().total) == pe.oed_reflective().total);
    CHECK(y1(ee.inner_edge()) == pe.inner_edge());
    CHECK(y1(ee.symmetry_edge()) == pe.symmetry_edge());
    CHECK(y1(ee.face_oriented()) == pe.face_oriented());
    CHECK(y1(ee.face()) == pe.face());
    CHECK(y1(ee.face_symmetry()) == pe.face_symmetry());
    CHECK(y1(ee.dissection_assembled()) == pe.dissection_assembled());
    CHECK(y1(ee.vertex_ratio(true)) == pe.vertex_ratio(false));
}

TEST_CASE("reflective outer-edge rooted dissections") {
    const int N = 7;
    auto args = plain_args(PowerSeries::identity(N));
    auto r = oed_reflective(args);
    CHECK(r.total.valuation() == 2); // the single edge is reflective
    CHECK(as_long(r.plus[2]) == 1);
    CHECK(as_long(r.minus[2]) == 1);
    auto zero = plain_args(PowerSeries::zero(N));
    auto rz = oed_reflective(zero);
    CHECK(rz.plus.is_zero());
    CHECK(rz.minus.is_zero());
    CHECK(rz.total.is_zero());
    // Burnside: 2 * (unoriented rooted classes) = oriented + reflective
    PowerSeries e = oed_oriented(args);
    for (int n = 2; n <= N; ++n) {
        DissectionOracle orc(std::max(3, n));
        if (n >= 3) {
            CHECK(as_long(r.plus[n]) == orc.reflective_outer_edge_rooted());
            CHECK(as_long(r.minus[n]) == orc.reflective_outer_edge_rooted());
            CHECK(as_long(e[n]) == orc.oriented_outer_edge_rooted());
        }
    }
}

TEST_CASE("inner-edge and symmetry-edge rooted dissections") {
    const int N = 9;
    auto args = plain_args(PowerSeries::identity(N));
    PowerSeries ei = inner_edge(args);
    PowerSeries es = symmetry_edge(args);
    CHECK(ei.valuation() == 4); // quadrilateral with a chord
    auto zero = plain_args(PowerSeries::zero(N));
    CHECK(inner_edge(zero).is_zero());
    CHECK(symmetry_edge(zero).is_zero());
    for (int n = 0; n <= N; ++n) CHECK(es[n] <= ei[n]);
    for (int n = 3; n <= N; ++n) {
        DissectionOracle orc(n);
        CHECK(as_long(ei[n]) == orc.inner_edge_rooted());
        CHECK(as_long(es[n]) == orc.symmetry_edge_rooted());
    }
}

TEST_CASE("face rooted dissections") {
    const int N = 9;
    auto args = plain_args(PowerSeries::identity(N));
    PowerSeries fo = face_oriented(args);
    PowerSeries f = face(args);
    PowerSeries fs = face_symmetry(args);
    CHECK(f.valuation() == 3); // rooted triangle
    auto zero = plain_args(PowerSeries::zero(N));
    CHECK(face(zero).is_zero());
    CHECK(face_oriented(zero).is_zero());
    for (int n = 0; n <= N; ++n) CHECK(f[n] <= fo[n]);
    for (int n = 3; n <= N; ++n) {
        DissectionOracle orc(n);
        CHECK(as_long(fo[n]) == orc.oriented_face_rooted());
        CHECK(as_long(f[n]) == orc.face_rooted());
        CHECK(as_long(fs[n]) == orc.face_rooted_at_symmetry());
    }
}

TEST_CASE("unrooted dissections via closed form and via dissimilarity") {
    const int N = 10;
    auto args = plain_args(PowerSeries::identity(N));
    PowerSeries d = dissection_cis(args);
    // Read's numbers: x^2 + x^3 + 2x^4 + 3x^5 + 9x^6 + 20x^7 + 75x^8 + 262x^9
    long expect[] = {0, 0, 1, 1, 2, 3, 9, 20, 75, 262, 1117};
    for (int n = 0; n <= N; ++n) CHECK(as_long(d[n]) == expect[n]);
    CHECK(assemble_dissection_via_dissimilarity(args) == d);
    CHECK(dissection_cis(plain_args(PowerSeries::zero(N))).is_zero());
    for (int n = 3; n <= N; ++n) {
        DissectionOracle orc(n);
        CHECK(as_long(d[n]) == orc.count());
    }
    // textbook route with the raw 1/s2^2 division agrees on its prefix
    PowerSeries txt = dissection_cis_textbook(args);
    for (int n = 0; n <= txt.order(); ++n) CHECK(txt[n] == d[n]);
}

TEST_CASE("dissimilarity assembly equals closed form on random arguments") {
    Rng rng;
    const int N = 8;
    for (int trial = 0; trial < 8; ++trial) {
        CisArgs<PowerSeries> args;
        args.s1 = random_arg(rng, N);
        args.s2 = random_arg(rng, N);
        std::vector<PowerSeries> fam{PowerSeries::zero(N), args.s1, args.s2};
        for (int dd = 3; dd <= N; ++dd) fam.push_back(random_arg(rng, N));
        args.family = [fam](int dd) { return fam[dd]; };
        PowerSeries one = PowerSeries::constant(N, Rational(1));
        args.ypow = [one](int) { return one; };
        args.phi_limit = N;
        DissectionEval<PowerSeries> ev(args);
        CHECK(ev.dissection_assembled() == ev.dissection_closed());
    }
}

TEST_CASE("vertex rooted dissections") {
    const int N = 8;
    PowerSeries x = PowerSeries::identity(N);
    PowerSeries v = vertex_rooted_cis(x, substitute_power(x, 2));
    CHECK(as_long(v[2]) == 1); // single edge rooted at a vertex
    // oracle orbit counts 1, 1, 3, 7, 28, 104 from n = 2: at n = 4 the
    // quadrilateral contributes one vertex orbit and the chorded
    // quadrilateral two, so v_4 = 3
    for (int n = 3; n <= N; ++n) {
        DissectionOracle orc(n);
        CHECK(as_long(v[n]) == orc.vertex_rooted());
    }
    CHECK(vertex_rooted_cis(PowerSeries::zero(N), PowerSeries::zero(N)).is_zero());
    CHECK_THROWS_AS(vertex_rooted_cis(PowerSeries::constant(N, Rational(1)), x), usage_error);

    // rooting identity: Z(V) = s1 * d/ds1 Z(D), realized by the derivative
    // evaluator, agrees with the Corollary closed form
    auto args = plain_args(x);
    DissectionEval<PowerSeries> ev(args);
    CHECK(ev.vertex_rooted(false) == ev.vertex_rooted(true));
    CHECK(ev.vertex_rooted(false) == v);
}

TEST_CASE("edge-marked printed closed forms") {
    // the printed oriented form (s1/(2(1+y)))(s1 y + 1 - sqrt((s1 y - 1)^2 - 4 s1 y^2))
    const int N = 7;
    auto args = edge_args(YSeries::identity(N));
    DissectionEval<YSeries> ev(args);
    YSeries s1 = args.s1;
    YSeries y = args.y(1);
    YSeries one = YSeries::constant(N, YPoly(Rational(1)));
    YSeries sy = s1 * y;
    YSeries rad = (sy - one) * (sy - one) - (s1 * y * y).scaled(Rational(4));
    YSeries printed = div_exact((s1 * (sy + one - sqrt1(rad))),
                                (one + y).scaled(Rational(2)));
    CHECK(printed == ev.oed_oriented());

    // printed reflective forms, denominators have constant term 2(y-1)
    YSeries y2 = y * y, y3 = y2 * y, y4 = y2 * y2;
    YSeries s1sq = s1 * s1;
    {
        YSeries num = s1 * ((sy - one) * (s1sq * y2 - (s1 * y2).scaled(Rational(2)) - one) -
                            (one + sy) * sqrt1((s1sq * y2 - one) * (s1sq * y2 - one) -
                                               (s1sq * y4).scaled(Rational(4))));
        YSeries den = (s1sq * y3 + s1sq * y2 + y - one).scaled(Rational(2));
        CHECK(div_exact(num, den) == ev.oed_reflective().plus);
    }
    {
        YSeries s2 = args.s2;
        YSeries num = s2 * (y2.scaled(Rational(2)) + s2 * y3 - y) -
                      s1 * (s2 * y2 + (s2 * y3).scaled(Rational(2)) - one) -
                      (s1 + s2 * y) * sqrt1((s2 * y2 - one) * (s2 * y2 - one) -
                                            (s2 * y4).scaled(Rational(4)));
        YSeries den = (y + s2 * y2 + s2 * y3 - one).scaled(Rational(2));
        CHECK(div_exact(num, den) == ev.oed_reflective().minus);
    }
}

TEST_CASE("edge-marked dissection support bounds") {
    const int N = 9;
    auto args = edge_args(YSeries::identity(N));
    YSeries dxy = assemble_dissection_via_dissimilarity(args);
    for (int n = 3; n <= N; ++n) {
        const YPoly& p = dxy[n];
        CHECK(p.degree() <= 2 * n - 3);
        for (int mm = 0; mm < n - 1; ++mm) CHECK(p.coeff(mm).is_zero());
        CHECK(!p.coeff(n).is_zero()); // the bare polygon has n edges
    }
    // edge-refined cells match the polygon oracle
    for (int n = 3; n <= 8; ++n) {
        DissectionOracle orc(n);
        auto bym = orc.count_by_edges();
        Rational total;
        for (auto [mm, cnt] : bym) {
            CHECK(dxy[n].coeff(mm) == Rational(cnt));
            total += Rational(cnt);
        }
        CHECK(dxy[n].eval_one() == total);
    }
}

TEST_CASE("bipartite dissection evaluators against the polygon oracle") {
    const int N = 10;
    auto args = plain_args(PowerSeries::identity(N));
    DissectionEval<PowerSeries> ev(args);
    PowerSeries db = ev.even_dissection();
    PowerSeries eb = ev.even_oed_oriented();
    PowerSeries vb = ev.even_vertex_rooted();
    CHECK(as_long(db[2]) == 1);
    CHECK(as_long(db[3]) == 0); // triangles are odd
    CHECK(as_long(db[4]) == 1); // the quadrilateral
    for (int n = 3; n <= N; ++n) {
        DissectionOracle orc(n);
        CHECK(as_long(db[n]) == orc.count_even());
        CHECK(as_long(eb[n]) == orc.oriented_outer_edge_rooted_even());
        CHECK(as_long(vb[n]) == orc.vertex_rooted(true));
    }
}
