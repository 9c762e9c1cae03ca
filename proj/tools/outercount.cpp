// Command line surface: exact counting tables, asymptotic constants, and the
// brute-force census, with CSV or JSON output. Exact counts are emitted as
// decimal strings (they overflow 64-bit integers near n = 25).
//
// Exit codes: 0 success, 2 usage error, 3 solver/consistency error.

#include "outercount/asymptotics.hpp"
#include "outercount/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

using namespace outercount;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kMaxPlainOrder = 200;
constexpr int kMaxEdgeOrder = 40;

struct FamilyTables {
    PowerSeries plain;
    bool has_edges = false;
    EdgeSeries edges;
    int first_n = 0; // smallest n with a meaningful entry
};

FamilyTables family_tables(const std::string& family, int n, bool with_edges) {
    FamilyTables out;
    if (family == "dissections") {
        auto args = plain_args(PowerSeries::identity(n));
        out.plain = dissection_cis(args);
        if (with_edges) out.edges = EdgeSeries(assemble_dissection_via_dissimilarity(
            edge_args(YSeries::identity(n))));
        out.has_edges = with_edges;
        out.first_n = 2;
    } else if (family == "connected" || family == "general") {
        auto t = build_tables(n, with_edges);
        out.plain = family == "connected" ? t.c : t.g;
        if (with_edges) out.edges = family == "connected" ? t.c_xy : t.g_xy;
        out.has_edges = with_edges;
        out.first_n = family == "connected" ? 1 : 0;
    } else if (family == "bipartite-dissections") {
        out.plain = bipartite_dissection_series(std::max(2, n));
        out.first_n = 2;
    } else if (family == "bipartite-connected" || family == "bipartite-general") {
        auto bt = bipartite_tables(n);
        out.plain = family == "bipartite-connected" ? bt.c_b : bt.g_b;
        out.first_n = family == "bipartite-connected" ? 1 : 0;
    } else {
        throw usage_error("unknown family: " + family);
    }
    return out;
}

int cmd_count(const std::string& family, int n, bool edges, const std::string& format) {
    if (n < 0) throw usage_error("--n must be non-negative");
    if (edges && family.rfind("bipartite", 0) == 0)
        throw usage_error("edge-refined tables are not provided for bipartite families");
    if (n > (edges ? kMaxEdgeOrder : kMaxPlainOrder))
        throw usage_error("--n exceeds the supported limit (" +
                          std::to_string(edges ? kMaxEdgeOrder : kMaxPlainOrder) + ")");
    FamilyTables t = family_tables(family, std::max(n, 1), edges);

    if (format == "csv") {
        if (edges) {
            std::cout << "n,m,count\n";
            for (int k = t.first_n; k <= n; ++k)
                for (int m = 0; m <= t.edges[k].degree(); ++m)
                    if (!t.edges.coeff(k, m).is_zero())
                        std::cout << k << "," << m << "," << t.edges.coeff(k, m).str() << "\n";
        } else {
            std::cout << "n,count\n";
            for (int k = t.first_n; k <= n; ++k) std::cout << k << "," << t.plain[k].str() << "\n";
        }
        return 0;
    }
    json payload = json::array();
    if (edges) {
        for (int k = t.first_n; k <= n; ++k)
            for (int m = 0; m <= t.edges[k].degree(); ++m)
                if (!t.edges.coeff(k, m).is_zero())
                    payload.push_back({{"n", k}, {"m", m}, {"count", t.edges.coeff(k, m).str()}});
    } else {
        for (int k = t.first_n; k <= n; ++k)
            payload.push_back({{"n", k}, {"count", t.plain[k].str()}});
    }
    json doc = {{"schema_version", kSchemaVersion},
                {"command", "count"},
                {"family", family},
                {"n_max", n},
                {"edges", edges},
                {"counts", payload}};
    std::cout << doc.dump(2) << "\n";
    return 0;
}

json constant(const MPFloat& v, int claimed_digits, const json& method) {
    return {{"value", v.str(std::min(claimed_digits + 5, 40))},
            {"claimed_digits", claimed_digits},
            {"method", method}};
}

int cmd_asym(int m, int digits, double h) {
    if (m < 1) throw usage_error("--m must be at least 1");
    if (digits < 30) throw usage_error("--digits must be at least 30");
    const int order = std::max(30, m);
    auto tables = build_tables(order, false);
    auto btables = bipartite_tables(order);
    auto sd = singular_data(tables, m, digits);
    auto ac = asymptotic_constants(sd);
    auto st = statistics(sd, tables, btables);
    auto dlaw = edge_law_dissections(digits);
    auto xytables = build_tables(std::min(m, 25), true);
    auto olaw = edge_law_outerplanar(xytables.chat_xy, std::min(m, 25), digits, h);

    json meth = {{"m", m}, {"digits", digits}};
    json meth_h = {{"m", std::min(m, 25)}, {"digits", digits}, {"h", h}};
    // claimed digits: the truncation order m dominates (roughly one digit
    // per unit of m), capped by the working precision
    int cd = std::max(2, std::min({m, digits - 25, 30}));
    int cds = std::min(cd, 10);

    json doc = {
        {"schema_version", kSchemaVersion},
        {"command", "asym"},
        {"parameters", {{"m", m}, {"digits", digits}, {"h", h}}},
        {"singular_system",
         {{"rho", constant(sd.rho, cd, meth)},
          {"tau", constant(sd.tau, cd, meth)},
          {"residual", sd.residual.str(3)},
          {"rho_inv", constant(ac.rho_inv, cd, meth)},
          {"delta", constant(ac.delta, digits - 5, meth)},
          {"delta_inv", constant(ac.delta_inv, digits - 5, meth)},
          {"rho_b", constant(st.rho_b, cd, meth)},
          {"rho_b_inv", constant(MPFloat::of(1L, st.rho_b.prec()) / st.rho_b, cd, meth)}}},
        {"singular_expansion",
         {{"chat1", constant(sd.chat1, cd, meth)},
          {"chat2", constant(sd.chat2, cd, meth)},
          {"chat3", constant(sd.chat3, cd, meth)},
          {"c_at_rho", constant(sd.c_at_rho, cd, meth)},
          {"c1", sd.c1.str(3)},
          {"c2", constant(sd.c2, cd, meth)},
          {"c3", constant(sd.c3, cd, meth)},
          {"g_at_rho", constant(sd.g_at_rho, cd, meth)},
          {"g2", constant(sd.g2, cd, meth)},
          {"g3", constant(sd.g3, cd, meth)}}},
        {"asymptotic_constants",
         {{"d", constant(ac.d, digits - 5, meth)},
          {"c", constant(ac.c, cd, meth)},
          {"g", constant(ac.g, cd, meth)}}},
        {"statistics",
         {{"prob_connected", constant(st.prob_connected, cds, meth)},
          {"expected_components", constant(st.expected_components, cds, meth)},
          {"isolated_vertex_mean", constant(st.isolated_mean, cds, meth)},
          {"isolated_vertex_law", "geometric: P[k] = rho^k (1-rho)"},
          {"expected_two_connected_components", constant(st.expected_two_connected, cds, meth)},
          {"expected_bipartite_components", constant(st.expected_bipartite, cds, meth)},
          {"chromatic_ratio_rho_over_rho_b", constant(st.chromatic_ratio, cds, meth)}}},
        {"edge_law_dissections",
         {{"mu", constant(dlaw.mu, digits - 5, meth)},
          {"sigma2", constant(dlaw.sigma2, digits - 5, meth)},
          {"x0_at_1", constant(dlaw.x0_at_1, digits - 5, meth)}}},
        {"edge_law_outerplanar",
         {{"mu", constant(olaw.mu, 6, meth_h)},
          {"sigma2", constant(olaw.sigma2, 6, meth_h)},
          {"rho_prime_1", constant(olaw.x0_prime_1, 6, meth_h)},
          {"rho_doubleprime_1", constant(olaw.x0_doubleprime_1, 6, meth_h)}}},
    };
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_oracle(int n, const std::string& format, bool allow_slow, int threads) {
    CensusOptions opt;
    opt.allow_slow = allow_slow;
    opt.threads = threads;
    CensusResult r = census(n, opt); // throws usage_error over the limit
    if (format == "csv") {
        std::cout << census_csv(r);
        return 0;
    }
    json rows = json::array();
    for (const auto& [k, c] : r.census.entries)
        rows.push_back({{"n", n},
                        {"m", k.m},
                        {"connected", k.connected},
                        {"two_connected", k.two_connected_or_edge},
                        {"bipartite", k.bipartite},
                        {"count", c}});
    json doc = {{"schema_version", kSchemaVersion},
                {"command", "oracle"},
                {"n", n},
                {"total", r.census.total()},
                {"rooted_connected", r.rooted_connected},
                {"cells", rows}};
    std::cout << doc.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"outercount: exact and asymptotic enumeration of unlabeled outerplanar graphs"};
    app.require_subcommand(1);

    auto* count = app.add_subcommand("count", "exact counting tables");
    std::string family = "general";
    int n_max = 30;
    bool edges = false;
    std::string format = "csv";
    count->add_option("--family", family,
                      "dissections | connected | general | bipartite-dissections | "
                      "bipartite-connected | bipartite-general");
    count->add_option("--n", n_max, "largest vertex count");
    count->add_flag("--edges", edges, "edge-refined table (n, m) -> count");
    count->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* asym = app.add_subcommand("asym", "growth constants, singular expansions, limit laws");
    int m = 25, digits = 80;
    double h = 1e-6;
    asym->add_option("--m", m, "truncation order of the singular system (default 25)");
    asym->add_option("--digits", digits, "working precision in decimal digits (default 80, min 30)");
    asym->add_option("--h-step", h, "finite-difference step for the edge law (default 1e-6)");

    auto* oracle = app.add_subcommand("oracle", "brute-force census of small graphs");
    int oracle_n = 6;
    bool allow_slow = false;
    int threads = 0;
    std::string oformat = "csv";
    oracle->add_option("--n", oracle_n, "vertex count (<= 7; 8 with --allow-slow, slow)");
    oracle->add_flag("--allow-slow", allow_slow, "permit n = 8 (minutes of runtime)");
    oracle->add_option("--threads", threads, "worker threads (0 = hardware)");
    oracle->add_option("--format", oformat, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return cmd_count(family, n_max, edges, format);
        if (asym->parsed()) return cmd_asym(m, digits, h);
        if (oracle->parsed()) return cmd_oracle(oracle_n, oformat, allow_slow, threads);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const solver_error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const consistency_error& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
