#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "raag/graph.hpp"

// Seeded sampling for the randomized verification sweeps.  mt19937_64 output
// is pinned by the standard; the derived draws below are hand-rolled because
// std::uniform_int_distribution is implementation-defined and would break
// cross-toolchain determinism.

namespace raag {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next() { return eng(); }

    // uniform on [0, n); modulo bias is irrelevant at these ranges but
    // determinism across platforms is not
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    double unit() { return double(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }
};

// Erdős–Rényi-style graph on labels prefix1..prefixN with edge density p.
inline Graph random_graph(Rng& rng, std::size_t n, double p, const std::string& prefix = "v") {
    std::vector<std::string> verts;
    verts.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) verts.push_back(prefix + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.chance(p)) edges.emplace_back(verts[i], verts[j]);
    return Graph(std::move(verts), edges);
}

// Random defining graph: size uniform on [nmin, nmax], then density uniform
// on [0, 1] — covers sparse and dense shapes evenly.
inline Graph random_lambda(Rng& rng, std::size_t nmin, std::size_t nmax) {
    std::size_t n = nmin + rng.below(nmax - nmin + 1);
    return random_graph(rng, n, rng.unit());
}

inline constexpr std::uint64_t kDefaultSeed = 20250823;

}  // namespace raag
