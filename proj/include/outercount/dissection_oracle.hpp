#pragma once

// Brute-force ground truth for dissections of a convex polygon: enumerate
// all non-crossing chord subsets of the n-gon, deduplicate under the
// dihedral group, and read off every rooted/unrooted count the cycle index
// evaluators claim to produce. Two-connected outerplanar graphs on n >= 3
// vertices are exactly these classes; the single edge (n = 2) is added by
// convention where the series include it.

#include "rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace outercount {

struct DissectionClass {
    int n = 0;
    std::vector<std::pair<int, int>> chords;     // representative, pairs (a<b)
    std::vector<std::array<int, 2>> aut;         // dihedral maps (r, s): i -> s ? r-i : r+i (mod n)
    std::vector<std::vector<int>> faces;         // inner faces as vertex cycles
    bool all_faces_even = false;
    int symmetry_chord = -1;                     // index into chords, -1 if none
};

class DissectionOracle {
  public:
    explicit DissectionOracle(int n) : n_(n) {
        if (n < 3 || n > 12) throw usage_error("dissection oracle supports 3 <= n <= 12");
        build();
    }

    const std::vector<DissectionClass>& classes() const { return classes_; }

    // unrooted dissections d_n, and the even-face (bipartite) count
    long count() const { return static_cast<long>(classes_.size()); }
    long count_even() const {
        long c = 0;
        for (const auto& d : classes_) c += d.all_faces_even;
        return c;
    }
    // unrooted by edge count m = n + #chords
    std::map<int, long> count_by_edges() const {
        std::map<int, long> t;
        for (const auto& d : classes_) t[n_ + static_cast<int>(d.chords.size())]++;
        return t;
    }

    // vertex-rooted classes: sum of vertex orbit counts
    long vertex_rooted(bool even_only = false) const {
        long c = 0;
        for (const auto& d : classes_) {
            if (even_only && !d.all_faces_even) continue;
            c += orbit_count(d, vertex_ids());
        }
        return c;
    }
    // inner-edge rooted classes: chord orbit counts
    long inner_edge_rooted() const {
        long c = 0;
        for (const auto& d : classes_) c += chord_orbits(d);
        return c;
    }
    // classes possessing a symmetry edge (at most one each, asserted in build)
    long symmetry_edge_rooted() const {
        long c = 0;
        for (const auto& d : classes_) c += (d.symmetry_chord >= 0);
        return c;
    }
    // face-rooted classes (inner faces up to automorphism)
    long face_rooted() const {
        long c = 0;
        for (const auto& d : classes_) c += face_orbits(d, false);
        return c;
    }
    // oriented face-rooted classes: Burnside over each class's automorphisms,
    // reflections fix no (face, orientation) pair
    long oriented_face_rooted() const {
        long total = 0;
        for (const auto& d : classes_) {
            long fixes = 0;
            for (const auto& [r, s] : d.aut) {
                if (s) continue; // reflection
                for (const auto& f : d.faces) {
                    std::set<int> fs(f.begin(), f.end()), img;
                    for (int v : f) img.insert(((r + v) % n_ + n_) % n_);
                    fixes += 2 * (fs == img);
                }
            }
            total += fixes / static_cast<long>(d.aut.size());
        }
        return total;
    }
    // face-rooted with root face incident to the symmetry edge
    long face_rooted_at_symmetry() const {
        long c = 0;
        for (const auto& d : classes_) c += face_orbits(d, true);
        return c;
    }
    // oriented outer-edge rooted = all labeled non-crossing chord subsets
    long oriented_outer_edge_rooted() const { return labeled_count_; }
    long oriented_outer_edge_rooted_even() const { return labeled_even_count_; }
    // classes invariant under the reflection fixing an outer root edge
    long reflective_outer_edge_rooted(bool even_only = false) const {
        return even_only ? reflective_even_count_ : reflective_count_;
    }

  private:
    static int idx(int a, int b, int n) { return a * n + b; }

    void build() {
        // candidate chords (a < b, non-adjacent on the cycle)
        std::vector<std::pair<int, int>> all;
        for (int a = 0; a < n_; ++a)
            for (int b = a + 2; b < n_; ++b)
                if (!(a == 0 && b == n_ - 1)) all.push_back({a, b});
        const int nc = static_cast<int>(all.size());
        std::vector<std::vector<char>> cross(nc, std::vector<char>(nc, 0));
        for (int i = 0; i < nc; ++i)
            for (int j = 0; j < nc; ++j) {
                auto [a, b] = all[i];
                auto [c, d] = all[j];
                cross[i][j] = (a < c && c < b && b < d) || (c < a && a < d && d < b);
            }

        std::set<std::vector<std::pair<int, int>>> seen;
        std::vector<int> chosen;
        labeled_count_ = 0;
        labeled_even_count_ = 0;
        reflective_count_ = 0;
        reflective_even_count_ = 0;

        // depth-first over non-crossing subsets
        enumerate(all, cross, chosen, 0, seen);
    }

    void enumerate(const std::vector<std::pair<int, int>>& all,
                   const std::vector<std::vector<char>>& cross, std::vector<int>& chosen,
                   int next, std::set<std::vector<std::pair<int, int>>>& seen) {
        process(all, chosen, seen);
        for (int i = next; i < static_cast<int>(all.size()); ++i) {
            bool ok = true;
            for (int j : chosen)
                if (cross[i][j]) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(i);
            enumerate(all, cross, chosen, i + 1, seen);
            chosen.pop_back();
        }
    }

    // dihedral image of a chord set; maps are i -> (r + i) or (r - i) mod n
    std::vector<std::pair<int, int>> apply(const std::vector<std::pair<int, int>>& chords, int r,
                                           int s) const {
        std::vector<std::pair<int, int>> out;
        out.reserve(chords.size());
        for (auto [a, b] : chords) {
            int ia = ((s ? r - a : r + a) % n_ + n_) % n_;
            int ib = ((s ? r - b : r + b) % n_ + n_) % n_;
            if (ia > ib) std::swap(ia, ib);
            out.push_back({ia, ib});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void process(const std::vector<std::pair<int, int>>& all, const std::vector<int>& chosen,
                 std::set<std::vector<std::pair<int, int>>>& seen) {
        std::vector<std::pair<int, int>> chords;
        chords.reserve(chosen.size());
        for (int i : chosen) chords.push_back(all[i]);
        std::sort(chords.begin(), chords.end());

        DissectionClass d;
        d.n = n_;
        d.chords = chords;
        d.faces = compute_faces(chords);
        d.all_faces_even = true;
        for (const auto& f : d.faces)
            if (f.size() % 2) { d.all_faces_even = false; break; }

        ++labeled_count_;
        if (d.all_faces_even) ++labeled_even_count_;
        // reflective w.r.t. the root edge (0,1): invariance under i -> 1-i
        if (apply(chords, 1, 1) == chords) {
            ++reflective_count_;
            if (d.all_faces_even) ++reflective_even_count_;
        }

        // keep only the dihedral-canonical labeled representative
        for (int s = 0; s < 2; ++s)
            for (int r = 0; r < n_; ++r)
                if (apply(chords, r, s) < chords) return;
        seen.insert(chords);

        for (int s = 0; s < 2; ++s)
            for (int r = 0; r < n_; ++r)
                if (apply(chords, r, s) == chords) d.aut.push_back({r, s});

        find_symmetry_chord(d);
        classes_.push_back(std::move(d));
    }

    // split the polygon along chords, recursively
    std::vector<std::vector<int>> compute_faces(const std::vector<std::pair<int, int>>& chords) const {
        std::vector<int> cycle(n_);
        for (int i = 0; i < n_; ++i) cycle[i] = i;
        std::vector<std::vector<int>> out;
        split(cycle, chords, out);
        return out;
    }

    void split(const std::vector<int>& cycle, std::vector<std::pair<int, int>> chords,
               std::vector<std::vector<int>>& out) const {
        if (chords.empty()) {
            out.push_back(cycle);
            return;
        }
        auto [a, b] = chords.back();
        chords.pop_back();
        // positions of a and b in the cycle
        int pa = -1, pb = -1;
        for (int i = 0; i < static_cast<int>(cycle.size()); ++i) {
            if (cycle[i] == a) pa = i;
            if (cycle[i] == b) pb = i;
        }
        if (pa > pb) std::swap(pa, pb);
        std::vector<int> left(cycle.begin() + pa, cycle.begin() + pb + 1);
        std::vector<int> right(cycle.begin() + pb, cycle.end());
        right.insert(right.end(), cycle.begin(), cycle.begin() + pa + 1);
        auto side = [&](const std::vector<int>& part, std::vector<std::pair<int, int>>& dst) {
            std::set<int> s(part.begin(), part.end());
            for (auto& ch : chords)
                if (s.count(ch.first) && s.count(ch.second)) dst.push_back(ch);
        };
        std::vector<std::pair<int, int>> lc, rc;
        side(left, lc);
        side(right, rc);
        split(left, lc, out);
        split(right, rc, out);
    }

    // A symmetry edge is a chord mapped to itself by an automorphism that
    // exchanges its two sides. The dual tree argument makes it unique.
    void find_symmetry_chord(DissectionClass& d) const {
        for (std::size_t ci = 0; ci < d.chords.size(); ++ci) {
            auto [a, b] = d.chords[ci];
            for (const auto& [r, s] : d.aut) {
                if (r == 0 && s == 0) continue;
                int ia = ((s ? r - a : r + a) % n_ + n_) % n_;
                int ib = ((s ? r - b : r + b) % n_ + n_) % n_;
                if (!((ia == a && ib == b) || (ia == b && ib == a))) continue;
                // swapped sides iff some vertex strictly between a and b
                // (going a->b the short way chosen as a+1..b-1) maps outside
                bool swaps = false;
                for (int v = a + 1; v < b; ++v) {
                    int iv = ((s ? r - v : r + v) % n_ + n_) % n_;
                    if (!(a < iv && iv < b)) { swaps = true; break; }
                }
                if (swaps) {
                    if (d.symmetry_chord >= 0 && d.symmetry_chord != static_cast<int>(ci))
                        throw consistency_error("dissection with two symmetry edges");
                    d.symmetry_chord = static_cast<int>(ci);
                }
            }
        }
    }

    std::vector<int> vertex_ids() const {
        std::vector<int> v(n_);
        for (int i = 0; i < n_; ++i) v[i] = i;
        return v;
    }

    long orbit_count(const DissectionClass& d, const std::vector<int>& verts) const {
        std::vector<int> parent(n_);
        for (int i = 0; i < n_; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& [r, s] : d.aut)
            for (int v : verts) {
                int iv = ((s ? r - v : r + v) % n_ + n_) % n_;
                int x = find(v), y = find(iv);
                if (x != y) parent[x] = y;
            }
        std::set<int> roots;
        for (int v : verts) roots.insert(find(v));
        return static_cast<long>(roots.size());
    }

    long chord_orbits(const DissectionClass& d) const {
        std::set<std::vector<std::pair<int, int>>> reps;
        long orbits = 0;
        std::set<std::pair<int, int>> done;
        for (auto ch : d.chords) {
            if (done.count(ch)) continue;
            ++orbits;
            for (const auto& [r, s] : d.aut) {
                int ia = ((s ? r - ch.first : r + ch.first) % n_ + n_) % n_;
                int ib = ((s ? r - ch.second : r + ch.second) % n_ + n_) % n_;
                if (ia > ib) std::swap(ia, ib);
                done.insert({ia, ib});
            }
        }
        (void)reps;
        return orbits;
    }

    long face_orbits(const DissectionClass& d, bool at_symmetry_only) const {
        std::vector<std::set<int>> faces;
        for (const auto& f : d.faces) faces.emplace_back(f.begin(), f.end());
        std::set<int> wanted;
        for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
            if (at_symmetry_only) {
                if (d.symmetry_chord < 0) continue;
                auto [a, b] = d.chords[d.symmetry_chord];
                if (!(faces[i].count(a) && faces[i].count(b))) continue;
                // incident means the chord bounds the face
            }
            wanted.insert(i);
        }
        std::set<int> done;
        long orbits = 0;
        for (int i : wanted) {
            if (done.count(i)) continue;
            ++orbits;
            for (const auto& [r, s] : d.aut) {
                std::set<int> img;
                for (int v : faces[i]) img.insert(((s ? r - v : r + v) % n_ + n_) % n_);
                for (int j : wanted)
                    if (faces[j] == img) done.insert(j);
            }
        }
        return orbits;
    }

    int n_;
    std::vector<DissectionClass> classes_;
    long labeled_count_ = 0, labeled_even_count_ = 0;
    long reflective_count_ = 0, reflective_even_count_ = 0;
};

} // namespace outercount
