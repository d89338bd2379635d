#pragma once

// Independent reference implementations for the test suites.  Nothing here
// shares code with the search engine or the mask-based analysis layer: these
// work by literal definitions (permutation scans, union-find, label-level
// set algebra), so agreement is meaningful.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/graph6.hpp"

namespace oracle {

using raag::Graph;
using raag::VertexSet;

inline Graph mk(std::vector<std::string> vs,
                std::vector<std::pair<std::string, std::string>> es) {
    return Graph(std::move(vs), es);
}

// adjacency matrix in vertex order
inline std::vector<std::vector<bool>> matrix(const Graph& g) {
    std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : g.neighbors_idx(i)) a[i][j] = true;
    return a;
}

// --- automorphisms by permutation scan ------------------------------------

// Full next_permutation sweep; exact for any n but only sane for n <= 9.
inline std::uint64_t perm_scan_aut_count(const Graph& g) {
    std::size_t n = g.vertex_count();
    auto a = matrix(g);
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (a[i][j] != a[p[i]][p[j]]) {
                    ok = false;
                    break;
                }
        if (ok) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// Degree-pruned backtracking count; exact, usable into the mid-teens.
inline std::uint64_t backtrack_aut_count(const Graph& g) {
    std::size_t n = g.vertex_count();
    auto a = matrix(g);
    std::vector<std::size_t> deg(n);
    for (std::size_t i = 0; i < n; ++i)
        deg[i] = g.neighbors_idx(i).size();
    std::vector<std::size_t> p(n);
    std::vector<bool> used(n, false);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            ++count;
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || deg[j] != deg[i]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i; ++k)
                if (a[i][k] != a[j][p[k]]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            p[i] = j;
            used[j] = true;
            self(self, i + 1);
            used[j] = false;
        }
    };
    rec(rec, 0);
    return count;
}

// Exhaustive isomorphism search over all vertex bijections (n <= 8).
inline bool perm_scan_isomorphic(const Graph& g, const Graph& h) {
    std::size_t n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    auto a = matrix(g), b = matrix(h);
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (a[i][j] != b[p[i]][p[j]]) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return n == 0;
}

// --- graph6 re-encoder ----------------------------------------------------

// Builds the bit vector explicitly and chunks it; no shared code with the
// production codec.
inline std::string graph6_encode(const Graph& g) {
    std::size_t n = g.vertex_count();
    auto a = matrix(g);
    std::vector<bool> bits;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) bits.push_back(a[i][j]);
    while (bits.size() % 6) bits.push_back(false);
    std::string out(1, char(63 + n));
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + (bits[k + b] ? 1 : 0);
        out += char(63 + v);
    }
    return out;
}

// --- census orbit marking -------------------------------------------------

// Number of isomorphism classes on k vertices by sweeping all adjacency
// masks and marking whole orbits under the symmetric group.  No canonical
// forms involved.
inline std::uint64_t orbit_class_count(int k) {
    int m = k * (k - 1) / 2;
    std::uint64_t total = std::uint64_t(1) << m;
    // slot index of each vertex pair, graph6 bit order
    std::array<std::array<int, 8>, 8> slot{};
    {
        int t = 0;
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i, ++t) slot[i][j] = slot[j][i] = t;
    }
    // image of every slot under every vertex permutation
    std::vector<std::array<int, 28>> maps;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::array<int, 28> mp{};
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i) mp[slot[i][j]] = slot[p[i]][p[j]];
        maps.push_back(mp);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<bool> visited(total, false);
    std::uint64_t classes = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (visited[mask]) continue;
        ++classes;
        for (const auto& mp : maps) {
            std::uint64_t img = 0;
            std::uint64_t scan = mask;
            while (scan) {
                int t = std::countr_zero(scan);
                scan &= scan - 1;
                img |= std::uint64_t(1) << mp[t];
            }
            visited[img] = true;
        }
    }
    return classes;
}

// --- definition-level set algebra -----------------------------------------

inline std::set<std::string> to_set(const VertexSet& v) { return {v.begin(), v.end()}; }

// components of g minus a label set, straight through the public label API
inline std::vector<std::set<std::string>> comps_minus(const Graph& g, const VertexSet& cut) {
    std::vector<std::set<std::string>> out;
    for (const auto& comp : raag::components(raag::remove_set(g, cut))) out.push_back(to_set(comp));
    return out;
}

// the support-graph edge rule, re-derived literally from its definition
inline bool support_edge(const Graph& g, const VertexSet& a, const VertexSet& b) {
    auto is_comp_of = [&](const std::string& x, const VertexSet& target) {
        auto want = to_set(target);
        for (const auto& comp : comps_minus(g, raag::star(g, x)))
            if (comp == want) return true;
        return false;
    };
    for (const auto& v : b)
        if (is_comp_of(v, a)) return true;
    for (const auto& v : a)
        if (is_comp_of(v, b)) return true;
    return false;
}

// acyclicity by union-find over an explicit edge list
inline bool forest_by_union_find(std::size_t nodes,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [i, j] : edges) {
        std::size_t a = find(i), b = find(j);
        if (a == b) return false;  // joining two joined nodes closes a cycle
        parent[a] = b;
    }
    return true;
}

}  // namespace oracle
