#pragma once

// Brute-force census of unlabeled outerplanar graphs at small n: enumerate
// all labeled graphs, filter by outerplanarity (absence of K4 and K2,3
// minors, decided by branch-and-bound contraction search per block),
// canonicalize survivors (degree refinement plus backtracking over the
// refined cells) and classify. Independent of the series machinery; this is
// the ground truth the generating functions are tested against.

#include "rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace outercount {

// Adjacency as an upper-triangular edge bitmask over vertex pairs.
struct SmallGraph {
    int n = 0;
    uint64_t edges = 0;

    static int pair_count(int n) { return n * (n - 1) / 2; }
    static int pair_index(int i, int j, int n) {
        if (i > j) std::swap(i, j);
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }
    bool has_edge(int i, int j) const { return edges >> pair_index(i, j, n) & 1; }
    int edge_count() const { return __builtin_popcountll(edges); }
};

namespace oracle_detail {

// Working form: per-vertex neighbor bitmasks.
struct Rows {
    int n = 0;
    std::array<uint16_t, 12> adj{};

    int edge_count() const {
        int m = 0;
        for (int v = 0; v < n; ++v) m += __builtin_popcount(adj[v]);
        return m / 2;
    }
};

inline Rows rows_of(const SmallGraph& g) {
    Rows r;
    r.n = g.n;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(i, j)) {
                r.adj[i] |= uint16_t(1) << j;
                r.adj[j] |= uint16_t(1) << i;
            }
    return r;
}

inline uint64_t mask_of(const Rows& r) {
    uint64_t m = 0;
    for (int i = 0; i < r.n; ++i)
        for (int j = i + 1; j < r.n; ++j)
            if (r.adj[i] >> j & 1) m |= uint64_t(1) << SmallGraph::pair_index(i, j, r.n);
    return m;
}

inline std::vector<uint16_t> components(const Rows& g) {
    std::vector<uint16_t> out;
    uint16_t seen = 0;
    for (int v = 0; v < g.n; ++v) {
        if (seen >> v & 1) continue;
        uint16_t comp = uint16_t(1) << v, frontier = comp;
        while (frontier) {
            uint16_t next = 0;
            for (int u = 0; u < g.n; ++u)
                if (frontier >> u & 1) next |= g.adj[u];
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

inline bool is_bipartite(const Rows& g) {
    std::array<int, 12> color;
    color.fill(-1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < g.n; ++u)
                if (g.adj[v] >> u & 1) {
                    if (color[u] < 0) {
                        color[u] = color[v] ^ 1;
                        stack.push_back(u);
                    } else if (color[u] == color[v]) {
                        return false;
                    }
                }
        }
    }
    return true;
}

// Induced subgraph on a vertex mask, relabeled compactly.
inline Rows induced(const Rows& g, uint16_t vmask) {
    Rows r;
    std::array<int, 12> map{};
    for (int v = 0; v < g.n; ++v)
        if (vmask >> v & 1) map[v] = r.n++;
    for (int v = 0; v < g.n; ++v) {
        if (!(vmask >> v & 1)) continue;
        uint16_t nb = g.adj[v] & vmask;
        for (int u = 0; u < g.n; ++u)
            if (nb >> u & 1) r.adj[map[v]] |= uint16_t(1) << map[u];
    }
    return r;
}

// Blocks (maximal 2-connected subgraphs and bridges) as vertex masks.
inline std::vector<uint16_t> blocks(const Rows& g) {
    std::vector<uint16_t> out;
    std::array<int, 12> disc{}, low{};
    disc.fill(0);
    int timer = 0;
    std::vector<std::pair<int, int>> estack;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = ++timer;
        for (int u = 0; u < g.n; ++u) {
            if (!(g.adj[v] >> u & 1) || u == parent) continue;
            if (disc[u] && disc[u] < disc[v]) {
                estack.push_back({v, u});
                low[v] = std::min(low[v], disc[u]);
            } else if (!disc[u]) {
                estack.push_back({v, u});
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) {
                    uint16_t bm = 0;
                    while (true) {
                        auto [a, b] = estack.back();
                        estack.pop_back();
                        bm |= uint16_t(1) << a;
                        bm |= uint16_t(1) << b;
                        if (a == v && b == u) break;
                    }
                    out.push_back(bm);
                }
            }
        }
    };
    for (int v = 0; v < g.n; ++v)
        if (!disc[v]) dfs(v, -1);
    return out;
}

inline bool is_two_connected_or_edge(const Rows& g) {
    if (g.n == 2) return g.edge_count() == 1;
    if (g.n < 3) return false;
    if (components(g).size() != 1) return false;
    auto b = blocks(g);
    return b.size() == 1 && __builtin_popcount(b[0]) == g.n;
}

enum class MinorKind { K4, K23, K5, K33 };

inline bool has_subgraph(const Rows& g, MinorKind k) {
    switch (k) {
    case MinorKind::K4:
        for (int a = 0; a < g.n; ++a)
            for (int b = a + 1; b < g.n; ++b) {
                if (!(g.adj[a] >> b & 1)) continue;
                uint16_t common = g.adj[a] & g.adj[b] & uint16_t(~0u << b);
                for (int c = b + 1; c < g.n; ++c)
                    if (common >> c & 1 && __builtin_popcount(g.adj[a] & g.adj[b] & g.adj[c]) > 0)
                        return true;
            }
        return false;
    case MinorKind::K23:
        for (int a = 0; a < g.n; ++a)
            for (int b = a + 1; b < g.n; ++b) {
                uint16_t common = g.adj[a] & g.adj[b] & uint16_t(~((1u << a) | (1u << b)));
                if (__builtin_popcount(common) >= 3) return true;
            }
        return false;
    case MinorKind::K5:
        for (int a = 0; a < g.n; ++a)
            for (int b = a + 1; b < g.n; ++b) {
                if (!(g.adj[a] >> b & 1)) continue;
                for (int c = b + 1; c < g.n; ++c) {
                    if (!(g.adj[a] >> c & 1) || !(g.adj[b] >> c & 1)) continue;
                    uint16_t common = g.adj[a] & g.adj[b] & g.adj[c] & uint16_t(~0u << c);
                    for (int d = c + 1; d < g.n; ++d)
                        if (common >> d & 1 &&
                            __builtin_popcount(g.adj[a] & g.adj[b] & g.adj[c] & g.adj[d]) > 0)
                            return true;
                }
            }
        return false;
    case MinorKind::K33:
        for (int a = 0; a < g.n; ++a)
            for (int b = a + 1; b < g.n; ++b)
                for (int c = b + 1; c < g.n; ++c) {
                    uint16_t common = g.adj[a] & g.adj[b] & g.adj[c] &
                                      uint16_t(~((1u << a) | (1u << b) | (1u << c)));
                    if (__builtin_popcount(common) >= 3) return true;
                }
        return false;
    }
    return false;
}

inline int minor_vertices(MinorKind k) {
    switch (k) {
    case MinorKind::K4: return 4;
    case MinorKind::K23: return 5;
    case MinorKind::K5: return 5;
    case MinorKind::K33: return 6;
    }
    return 0;
}
inline int minor_edges(MinorKind k) {
    switch (k) {
    case MinorKind::K4: return 6;
    case MinorKind::K23: return 6;
    case MinorKind::K5: return 10;
    case MinorKind::K33: return 9;
    }
    return 0;
}

// Contract edge (u, v): merge v into u, drop v, simplify.
inline Rows contract(const Rows& g, int u, int v) {
    Rows t = g;
    t.adj[u] |= t.adj[v];
    for (int w = 0; w < g.n; ++w)
        if (t.adj[w] >> v & 1) t.adj[w] |= uint16_t(1) << u;
    t.adj[u] &= ~(uint16_t(1) << u);
    Rows r;
    r.n = g.n - 1;
    for (int w = 0, wn = 0; w < g.n; ++w) {
        if (w == v) continue;
        uint16_t nb = t.adj[w] & ~(uint16_t(1) << v);
        uint16_t low = nb & ((uint16_t(1) << v) - 1);
        uint16_t high = uint16_t(nb >> (v + 1)) << v;
        r.adj[wn++] = low | high;
    }
    return r;
}

// Branch-and-bound minor search: H <= G iff H is a subgraph of G or a minor
// of some single-edge contraction of G. Deletions are subsumed by the
// subgraph base case. Failed states are memoized per top-level query.
inline bool has_minor_rec(const Rows& g, MinorKind k, std::unordered_set<uint64_t>& failed) {
    if (g.n < minor_vertices(k) || g.edge_count() < minor_edges(k)) return false;
    uint64_t key = mask_of(g) | (uint64_t(g.n) << 58);
    if (failed.count(key)) return false;
    if (has_subgraph(g, k)) return true;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adj[u] >> v & 1)
                if (has_minor_rec(contract(g, u, v), k, failed)) return true;
    failed.insert(key);
    return false;
}

inline bool has_minor(const Rows& g, MinorKind k) {
    std::unordered_set<uint64_t> failed;
    return has_minor_rec(g, k, failed);
}

// Canonical labeling: iterated degree/neighbor-color refinement, then
// minimization of the edge mask over the permutations compatible with the
// refined cells. Optionally reports the automorphism group.
struct CanonResult {
    uint64_t canon = 0;
    std::vector<std::array<int8_t, 12>> auts; // vertex -> vertex maps
};

inline CanonResult canonical_form(const Rows& g, bool want_auts = false) {
    const int n = g.n;
    std::array<int, 12> color{};
    for (int v = 0; v < n; ++v) color[v] = __builtin_popcount(g.adj[v]);
    // refinement rounds
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (g.adj[v] >> u & 1) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sigs[v] = {std::move(s), v};
        }
        std::vector<std::vector<int>> uniq;
        for (const auto& s : sigs) uniq.push_back(s.first);
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::array<int, 12> nc{};
        for (int v = 0; v < n; ++v)
            nc[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sigs[v].first) -
                                     uniq.begin());
        bool changed = false;
        for (int v = 0; v < n; ++v) changed |= nc[v] != color[v];
        color = nc;
        if (!changed) break;
    }
    // vertices grouped by color, ascending
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
    std::vector<std::pair<int, int>> cells; // [begin, end) in order
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && color[order[j]] == color[order[i]]) ++j;
        cells.push_back({i, j});
        i = j;
    }

    std::vector<std::pair<int, int>> edge_list;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adj[u] >> v & 1) edge_list.push_back({u, v});

    CanonResult res;
    res.canon = ~uint64_t(0);
    std::array<int, 12> pos{};
    std::vector<std::array<int8_t, 12>> winners; // position -> vertex maps hitting the minimum
    std::vector<int> perm = order;

    std::function<void(std::size_t)> walk = [&](std::size_t ci) {
        if (ci == cells.size()) {
            for (int p = 0; p < n; ++p) pos[perm[p]] = p;
            uint64_t m = 0;
            for (auto [u, v] : edge_list)
                m |= uint64_t(1) << SmallGraph::pair_index(pos[u], pos[v], n);
            if (m < res.canon) {
                res.canon = m;
                winners.clear();
            }
            if (want_auts && m == res.canon) {
                std::array<int8_t, 12> w{};
                for (int p = 0; p < n; ++p) w[p] = static_cast<int8_t>(perm[p]);
                winners.push_back(w);
            }
            return;
        }
        auto [b, e] = cells[ci];
        std::sort(perm.begin() + b, perm.begin() + e);
        do {
            walk(ci + 1);
        } while (std::next_permutation(perm.begin() + b, perm.begin() + e));
    };
    walk(0);

    if (want_auts && !winners.empty()) {
        // automorphisms: compose each winner with the inverse of the first
        std::array<int8_t, 12> inv{};
        for (int p = 0; p < n; ++p) inv[winners[0][p]] = static_cast<int8_t>(p);
        for (const auto& w : winners) {
            std::array<int8_t, 12> sigma{};
            for (int v = 0; v < n; ++v) sigma[v] = w[inv[v]];
            res.auts.push_back(sigma);
        }
    }
    return res;
}

inline int vertex_orbit_count(const Rows& g, const std::vector<std::array<int8_t, 12>>& auts) {
    std::array<int, 12> parent{};
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& sigma : auts)
        for (int v = 0; v < g.n; ++v) {
            int a = find(v), b = find(sigma[v]);
            if (a != b) parent[a] = b;
        }
    int orbits = 0;
    for (int v = 0; v < g.n; ++v) orbits += find(v) == v;
    return orbits;
}

// Shared cache of outerplanarity verdicts for blocks, keyed by canonical form.
class BlockCache {
  public:
    bool outerplanar(const Rows& block) {
        if (block.n <= 3) return true;
        uint64_t key = canonical_form(block).canon | (uint64_t(block.n) << 58);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        bool ok = !has_minor(block, MinorKind::K4) && !has_minor(block, MinorKind::K23);
        cache_.emplace(key, ok);
        return ok;
    }

  private:
    std::unordered_map<uint64_t, bool> cache_;
};

} // namespace oracle_detail

// g is outerplanar iff it has neither a K4 nor a K2,3 minor. Both patterns
// are 2-connected, so the search runs per block.
inline bool is_outerplanar(const SmallGraph& g) {
    using namespace oracle_detail;
    if (g.n > 10) throw usage_error("is_outerplanar supports n <= 10");
    Rows r = rows_of(g);
    if (g.n >= 2 && r.edge_count() > 2 * g.n - 3) return false; // edge-count prune
    for (uint16_t bm : blocks(r)) {
        if (__builtin_popcount(bm) <= 3) continue;
        Rows b = induced(r, bm);
        if (has_minor(b, MinorKind::K4) || has_minor(b, MinorKind::K23)) return false;
    }
    return true;
}

// Wagner route for cross-validation: planar iff no K5 and no K3,3 minor.
inline bool is_planar(const SmallGraph& g) {
    using namespace oracle_detail;
    if (g.n > 10) throw usage_error("is_planar supports n <= 10");
    Rows r = rows_of(g);
    for (uint16_t bm : blocks(r)) {
        if (__builtin_popcount(bm) <= 4) continue;
        Rows b = induced(r, bm);
        if (has_minor(b, MinorKind::K5) || has_minor(b, MinorKind::K33)) return false;
    }
    return true;
}

// g plus a universal apex vertex, for the alternative outerplanarity test.
inline SmallGraph with_apex(const SmallGraph& g) {
    SmallGraph a;
    a.n = g.n + 1;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(i, j)) a.edges |= uint64_t(1) << SmallGraph::pair_index(i, j, a.n);
    for (int i = 0; i < g.n; ++i) a.edges |= uint64_t(1) << SmallGraph::pair_index(i, g.n, a.n);
    return a;
}

inline uint64_t canonical_form(const SmallGraph& g) {
    return oracle_detail::canonical_form(oracle_detail::rows_of(g)).canon;
}

struct CensusKey {
    int m = 0;
    bool connected = false;
    bool two_connected_or_edge = false;
    bool bipartite = false;
    bool operator<(const CensusKey& o) const {
        return std::tie(m, connected, two_connected_or_edge, bipartite) <
               std::tie(o.m, o.connected, o.two_connected_or_edge, o.bipartite);
    }
    bool operator==(const CensusKey& o) const {
        return std::tie(m, connected, two_connected_or_edge, bipartite) ==
               std::tie(o.m, o.connected, o.two_connected_or_edge, o.bipartite);
    }
};

struct GraphCensus {
    int n = 0;
    std::map<CensusKey, long> entries; // isomorphism class counts

    long total() const {
        long t = 0;
        for (const auto& [k, c] : entries) t += c;
        return t;
    }
    long count_if(std::function<bool(const CensusKey&)> pred) const {
        long t = 0;
        for (const auto& [k, c] : entries)
            if (pred(k)) t += c;
        return t;
    }
};

struct CensusResult {
    GraphCensus census;
    // rooted class counts (sum of vertex orbit counts per class)
    long rooted_all = 0;
    long rooted_connected = 0;
    long rooted_connected_bipartite = 0;
    // distribution of the number of components that are dissections
    // (two-connected or a single edge), and of isolated vertices
    std::vector<long> dissection_component_dist;
    std::vector<long> isolated_vertex_dist;
};

struct CensusOptions {
    bool allow_slow = false; // permit n = 8
    int threads = 0;         // 0: hardware_concurrency
};

inline CensusResult census(int n, CensusOptions opt = {}) {
    using namespace oracle_detail;
    if (n < 1 || n > (opt.allow_slow ? 8 : 7))
        throw usage_error("census limited to n <= 7 (n = 8 with allow_slow)");

    struct ClassData {
        CensusKey key;
        int vertex_orbits = 0;
        int dissection_components = 0;
        int isolated = 0;
    };

    const uint64_t total_masks = uint64_t(1) << SmallGraph::pair_count(n);
    const int max_edges = n >= 2 ? 2 * n - 3 : 0;
    int nthreads = opt.threads > 0 ? opt.threads
                                   : std::max(1u, std::thread::hardware_concurrency());
    if (total_masks < 4096) nthreads = 1;

    auto scan = [&](uint64_t lo, uint64_t hi, std::map<uint64_t, ClassData>& classes) {
        BlockCache cache;
        for (uint64_t mask = lo; mask < hi; ++mask) {
            if (__builtin_popcountll(mask) > max_edges) continue;
            SmallGraph g{n, mask};
            Rows r = rows_of(g);
            // cheap forbidden-subgraph rejections before block analysis
            if (has_subgraph(r, MinorKind::K4) || has_subgraph(r, MinorKind::K23)) continue;
            bool ok = true;
            auto blist = blocks(r);
            for (uint16_t bm : blist) {
                if (__builtin_popcount(bm) <= 3) continue;
                if (!cache.outerplanar(induced(r, bm))) { ok = false; break; }
            }
            if (!ok) continue;

            CanonResult canon = oracle_detail::canonical_form(r, true);
            if (classes.count(canon.canon)) continue;

            ClassData d;
            auto comps = components(r);
            d.key.m = static_cast<int>(__builtin_popcountll(mask));
            d.key.connected = comps.size() == 1;
            d.key.two_connected_or_edge = is_two_connected_or_edge(r);
            d.key.bipartite = is_bipartite(r);
            for (uint16_t cm : comps) {
                int cn = __builtin_popcount(cm);
                if (cn == 1) {
                    ++d.isolated;
                } else if (is_two_connected_or_edge(induced(r, cm))) {
                    ++d.dissection_components;
                }
            }
            d.vertex_orbits = vertex_orbit_count(r, canon.auts);
            classes.emplace(canon.canon, d);
        }
    };

    std::map<uint64_t, ClassData> merged;
    if (nthreads <= 1) {
        scan(0, total_masks, merged);
    } else {
        std::vector<std::map<uint64_t, ClassData>> parts(nthreads);
        std::vector<std::thread> pool;
        uint64_t chunk = (total_masks + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            uint64_t lo = t * chunk, hi = std::min(total_masks, lo + chunk);
            pool.emplace_back([&, lo, hi, t] { scan(lo, hi, parts[t]); });
        }
        for (auto& th : pool) th.join();
        for (auto& p : parts)
            for (auto& [k, v] : p) merged.emplace(k, v);
    }

    CensusResult res;
    res.census.n = n;
    res.dissection_component_dist.assign(n + 1, 0);
    res.isolated_vertex_dist.assign(n + 1, 0);
    for (const auto& [canon, d] : merged) {
        res.census.entries[d.key]++;
        res.rooted_all += d.vertex_orbits;
        if (d.key.connected) {
            res.rooted_connected += d.vertex_orbits;
            if (d.key.bipartite) res.rooted_connected_bipartite += d.vertex_orbits;
        }
        res.dissection_component_dist[d.dissection_components]++;
        res.isolated_vertex_dist[d.isolated]++;
    }
    return res;
}

// Vertex-rooted class counts: every unlabeled class contributes its number
// of vertex orbits.
struct RootedCounts {
    long all = 0;
    long connected = 0;
    long connected_bipartite = 0;
};

inline RootedCounts rooted_census(int n, CensusOptions opt = {}) {
    CensusResult r = census(n, opt);
    return {r.rooted_all, r.rooted_connected, r.rooted_connected_bipartite};
}

// CSV export: header then one row per (n, m, connected, two_connected,
// bipartite) cell.
inline std::string census_csv(const CensusResult& r) {
    std::string out = "n,m,connected,two_connected,bipartite,count\n";
    for (const auto& [k, c] : r.census.entries) {
        out += std::to_string(r.census.n) + "," + std::to_string(k.m) + "," +
               std::to_string(int(k.connected)) + "," + std::to_string(int(k.two_connected_or_edge)) +
               "," + std::to_string(int(k.bipartite)) + "," + std::to_string(c) + "\n";
    }
    return out;
}

} // namespace outercount
