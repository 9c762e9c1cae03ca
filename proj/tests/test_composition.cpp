#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "outercount/composition.hpp"

using namespace outercount;

namespace {
long as_long(const Rational& r) { return static_cast<long>(r.to_integer().get_si()); }
}

TEST_CASE("vertex-rooted connected outerplanar graphs") {
    PowerSeries chat = chat_series(12);
    long expect[] = {0, 1, 1, 3, 10, 40, 181, 918, 5039, 29313, 177773, 1110517, 7093110};
    for (int n = 0; n <= 12; ++n) CHECK(as_long(chat[n]) == expect[n]);
    // truncation coherence of the fixed point
    CHECK(chat_series(7) == chat.at_order(7));
    CHECK_THROWS_AS(chat_series(0), usage_error);
}

TEST_CASE("connected and general outerplanar graphs") {
    auto t = build_tables(12, false);
    long cexp[] = {0, 1, 1, 2, 5, 13, 46, 172, 777, 3783, 20074, 111604, 646409};
    long gexp[] = {1, 1, 2, 4, 10, 25, 80, 277, 1150, 5291, 26918, 145744, 828856};
    for (int n = 0; n <= 12; ++n) {
        CHECK(as_long(t.c[n]) == cexp[n]);
        CHECK(as_long(t.g[n]) == gexp[n]);
    }
    CHECK(t.g[0].is_one()); // the empty graph
    for (int n = 1; n <= 12; ++n) {
        CHECK(t.c[n] <= t.chat[n]);                        // rooting yields >= 1 class
        CHECK(t.chat[n] <= t.c[n] * Rational(n));          // at most n orbits
        CHECK(t.c[n] <= t.g[n]);
    }
}

TEST_CASE("composition consistency: C = Chat + Z(D; Chat) - Z(V; Chat)") {
    const int N = 10;
    PowerSeries chat = chat_series(N);
    auto args = plain_args(chat);
    PowerSeries zd = dissection_cis(args);
    PowerSeries zv = vertex_rooted_cis(chat, args.s2);
    PowerSeries c = chat + zd - zv;
    CHECK(c == c_series_from(chat));
}

TEST_CASE("multiset exponential") {
    PowerSeries x = PowerSeries::identity(6);
    PowerSeries ones = PowerSeries::constant(6, Rational(1));
    for (int k = 1; k <= 6; ++k) ones.coeff_ref(k) = Rational(1);
    CHECK(multiset_exp(x) == ones); // multisets of a single atom: 1/(1-x)
    CHECK(multiset_exp(PowerSeries::zero(6)) == PowerSeries::constant(6, Rational(1)));
    auto t = build_tables(10, false);
    CHECK(multiset_exp(t.c) == t.g);
    CHECK_THROWS_AS(multiset_exp(PowerSeries::constant(4, Rational(2))), domain_error);
}

TEST_CASE("expected number of components, exact") {
    auto t = build_tables(12, false);
    CHECK(expected_components_exact(t, 1) == Rational(1));
    // the four 3-vertex graphs have 3, 2, 1, 1 components
    CHECK(expected_components_exact(t, 3) == Rational(7, 4));
    Rational e10 = expected_components_exact(t, 10);
    CHECK(e10 > Rational(1));
    CHECK(e10 < Rational(2));
    CHECK_THROWS_AS(expected_components_exact(t, 13), usage_error);
}

TEST_CASE("component count distributions, exact") {
    auto t = build_tables(10, false);
    // isolated vertices on two vertices: the single edge has none, the empty
    // graph has two
    PowerSeries x = PowerSeries::identity(10);
    auto dist = components_distribution_exact(t, x, 2);
    REQUIRE(dist.size() == 3);
    CHECK(dist[0] == 1);
    CHECK(dist[1] == 0);
    CHECK(dist[2] == 1);

    // A = C: the distribution refines g_n and its mean is the expectation
    for (int n : {4, 7, 10}) {
        auto full = components_distribution_exact(t, t.c, n);
        BigInt sum = 0, weighted = 0;
        for (int k = 0; k < static_cast<int>(full.size()); ++k) {
            sum += full[k];
            weighted += BigInt(k) * full[k];
        }
        CHECK(Rational(sum) == t.g[n]);
        CHECK(Rational(weighted, t.g[n].to_integer()) == expected_components_exact(t, n));
    }

    // preconditions
    PowerSeries too_big = t.c + x; // exceeds C at x^1
    CHECK_THROWS_AS(components_distribution_exact(t, too_big, 4), usage_error);
    CHECK_THROWS_AS(components_distribution_exact(t, PowerSeries::constant(10, Rational(1)), 4),
                    usage_error);
}

TEST_CASE("edge-marked tables marginalize to the plain tables") {
    auto t = build_tables(20, true);
    PowerSeries m = t.g_xy.eval_y1();
    CHECK(m == t.g); // sum over m of g_{n,m} equals g_n for n <= 20
    CHECK(t.c_xy.eval_y1() == t.c);
    CHECK(t.chat_xy.eval_y1() == t.chat);
    // support bounds on the general table
    for (int n = 3; n <= 20; ++n) {
        bool within = t.g_xy[n].degree() <= 2 * n - 3;
        CHECK(within);
    }
}

TEST_CASE("edge-marked fixed point agrees with known small cells") {
    auto t = build_tables(7, true);
    // n = 3: the four graphs have 0..3 edges; triangle is the only one with 3
    CHECK(as_long(t.g_xy.coeff(3, 0)) == 1);
    CHECK(as_long(t.g_xy.coeff(3, 1)) == 1);
    CHECK(as_long(t.g_xy.coeff(3, 2)) == 1);
    CHECK(as_long(t.g_xy.coeff(3, 3)) == 1);
    // n = 4, m = 3: paths, star, triangle + isolated vertex
    CHECK(as_long(t.g_xy.coeff(4, 3)) == 3);
}
