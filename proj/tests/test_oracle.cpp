#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "outercount/bipartite.hpp"
#include "outercount/composition.hpp"
#include "outercount/oracle.hpp"

#include <cstdint>

using namespace outercount;

namespace {

SmallGraph cycle(int n) {
    SmallGraph g{n, 0};
    for (int i = 0; i < n; ++i)
        g.edges |= uint64_t(1) << SmallGraph::pair_index(i, (i + 1) % n, n);
    return g;
}
SmallGraph complete(int n) {
    SmallGraph g{n, 0};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.edges |= uint64_t(1) << SmallGraph::pair_index(i, j, n);
    return g;
}
SmallGraph biclique(int a, int b) {
    SmallGraph g{a + b, 0};
    for (int i = 0; i < a; ++i)
        for (int j = a; j < a + b; ++j)
            g.edges |= uint64_t(1) << SmallGraph::pair_index(i, j, a + b);
    return g;
}

long as_long(const Rational& r) { return static_cast<long>(r.to_integer().get_si()); }

struct Rng {
    uint64_t s = 0xdecafbad1ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

} // namespace

TEST_CASE("forbidden minors") {
    CHECK(is_outerplanar(cycle(5)));
    CHECK(!is_outerplanar(complete(4)));
    CHECK(!is_outerplanar(biclique(2, 3)));
    CHECK(is_outerplanar(complete(3)));
    CHECK(!is_outerplanar(complete(5)));
    // K4 with one subdivided edge still has a K4 minor
    SmallGraph sub{5, 0};
    auto add = [&](int i, int j) { sub.edges |= uint64_t(1) << SmallGraph::pair_index(i, j, 5); };
    add(0, 1); add(0, 2); add(1, 2); add(0, 4); add(4, 3); add(1, 3); add(2, 3);
    CHECK(!is_outerplanar(sub));
}

TEST_CASE("census counts match the generating functions") {
    auto t = build_tables(8, false);
    auto bt = bipartite_tables(8);
    PowerSeries d = dissection_cis(plain_args(PowerSeries::identity(8)));
    auto txy = build_tables(6, true);
    for (int n = 1; n <= 6; ++n) {
        auto r = census(n);
        CHECK(r.census.total() == as_long(t.g[n]));
        CHECK(r.census.count_if([](const CensusKey& k) { return k.connected; }) == as_long(t.c[n]));
        CHECK(r.census.count_if([](const CensusKey& k) { return k.two_connected_or_edge; }) ==
              as_long(d[n]));
        CHECK(r.census.count_if([](const CensusKey& k) { return k.bipartite; }) ==
              as_long(bt.g_b[n]));
        CHECK(r.census.count_if([](const CensusKey& k) { return k.bipartite && k.connected; }) ==
              as_long(bt.c_b[n]));
        CHECK(r.rooted_connected == as_long(t.chat[n]));
        CHECK(r.rooted_connected_bipartite == as_long(bt.chat_b[n]));

        // every (n, m) edge-refined cell
        std::map<int, long> bym;
        for (const auto& [k, c] : r.census.entries) bym[k.m] += c;
        Rational total;
        for (const auto& [m, c] : bym) {
            CHECK(txy.g_xy.coeff(n, m) == Rational(c));
            total += Rational(c);
        }
        CHECK(total == t.g[n]);
    }
}

TEST_CASE("census examples") {
    CHECK(census(1).census.total() == 1);
    CHECK(census(4).census.total() == 10);
    auto r5 = census(5);
    CHECK(r5.census.count_if([](const CensusKey& k) { return k.connected; }) == 13);
    CHECK(rooted_census(2).connected == 1); // the edge: both ends equivalent
    CHECK(rooted_census(3).connected == 3); // path has 2 orbits, triangle 1
    CHECK_THROWS_AS(census(9, CensusOptions{true, 1}), usage_error);
    CHECK_THROWS_AS(census(8), usage_error); // needs allow_slow
}

TEST_CASE("component distributions against the library") {
    auto t = build_tables(6, false);
    PowerSeries d = dissection_cis(plain_args(PowerSeries::identity(6)));
    PowerSeries x = PowerSeries::identity(6);
    for (int n = 2; n <= 6; ++n) {
        auto r = census(n);
        auto lib_d = components_distribution_exact(t, d, n);
        auto lib_x = components_distribution_exact(t, x, n);
        for (int k = 0; k <= n; ++k) {
            CHECK(lib_d[k] == BigInt(r.dissection_component_dist[k]));
            CHECK(lib_x[k] == BigInt(r.isolated_vertex_dist[k]));
        }
    }
}

TEST_CASE("outerplanarity cross-validates against apex planarity") {
    for (int n = 1; n <= 6; ++n) {
        uint64_t total = uint64_t(1) << SmallGraph::pair_count(n);
        for (uint64_t mask = 0; mask < total; ++mask) {
            SmallGraph g{n, mask};
            REQUIRE(is_outerplanar(g) == is_planar(with_apex(g)));
        }
    }
}

TEST_CASE("canonical labeling is an isomorphism invariant") {
    Rng rng;
    for (int n : {5, 6, 7}) {
        uint64_t total = uint64_t(1) << SmallGraph::pair_count(n);
        for (int trial = 0; trial < 60; ++trial) {
            SmallGraph g{n, rng.next() % total};
            uint64_t canon = canonical_form(g);
            // random relabeling
            std::array<int, 8> perm{};
            for (int i = 0; i < n; ++i) perm[i] = i;
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.next() % uint64_t(i + 1)]);
            SmallGraph h{n, 0};
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (g.has_edge(i, j))
                        h.edges |= uint64_t(1) << SmallGraph::pair_index(perm[i], perm[j], n);
            CHECK(canonical_form(h) == canon);
        }
    }
}

TEST_CASE("census is deterministic under parallel scans") {
    auto a = census(5, CensusOptions{false, 1});
    auto b = census(5, CensusOptions{false, 3});
    CHECK(a.census.entries == b.census.entries);
    CHECK(a.rooted_connected == b.rooted_connected);
    CHECK(a.dissection_component_dist == b.dissection_component_dist);
}

TEST_CASE("csv export shape") {
    auto r = census(3);
    std::string csv = census_csv(r);
    CHECK(csv.rfind("n,m,connected,two_connected,bipartite,count\n", 0) == 0);
    // 3 vertices: empty, one edge, path, triangle -> four rows
    int rows = 0;
    for (char ch : csv) rows += ch == '\n';
    CHECK(rows == 5);
    CHECK(csv.find("3,3,1,1,0,1") != std::string::npos); // the triangle cell
}

TEST_CASE("seven vertex census totals") {
    auto r = census(7);
    CHECK(r.census.total() == 277);
    CHECK(r.census.count_if([](const CensusKey& k) { return k.connected; }) == 172);
    CHECK(r.rooted_connected == 918);
}
