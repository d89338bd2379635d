#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "raag/error.hpp"
#include "raag/graph.hpp"

// Dense adjacency for the search and analysis layers: one 64-bit row per
// vertex.  Everything downstream of this header is limited to 64 vertices.

namespace raag::detail {

inline constexpr int kMaxDense = 64;

inline std::uint64_t bit(int i) { return std::uint64_t(1) << i; }

struct Dense {
    int n = 0;
    std::uint64_t all = 0;  // mask of the n valid bits
    std::array<std::uint64_t, kMaxDense> row{};

    bool edge(int i, int j) const { return row[i] >> j & 1; }
    void add_edge(int i, int j) {
        row[i] |= bit(j);
        row[j] |= bit(i);
    }
    std::uint64_t st(int v) const { return row[v] | bit(v); }
};

inline Dense to_dense(const Graph& g, const char* who = "dense") {
    if (g.vertex_count() > std::size_t(kMaxDense))
        throw error(std::string(who) + ": " + std::to_string(g.vertex_count()) +
                    " vertices exceeds the 64-vertex limit");
    Dense d;
    d.n = int(g.vertex_count());
    d.all = d.n == 64 ? ~std::uint64_t(0) : bit(d.n) - 1;
    for (int i = 0; i < d.n; ++i)
        for (std::size_t j : g.neighbors_idx(i)) d.row[i] |= bit(int(j));
    return d;
}

// Connected components of the subgraph induced on `alive`, as bit masks in
// ascending order of lowest set bit.  Their union is `alive`.
inline std::vector<std::uint64_t> mask_components(const Dense& g, std::uint64_t alive) {
    std::vector<std::uint64_t> out;
    std::uint64_t left = alive;
    while (left) {
        std::uint64_t comp = left & -left;  // seed: lowest remaining vertex
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.row[v] & alive;
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

}  // namespace raag::detail
