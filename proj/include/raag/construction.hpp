#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/analysis.hpp"
#include "raag/bigint.hpp"
#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/iso.hpp"
#include "raag/sampling.hpp"

// The two constructions that realize a prescribed RAAG as PSO: for any
// defining graph Λ on n ≥ 3 vertices, Γ(Λ) satisfies PSO(A_Γ) ≅ A_Λ with
// Out(A_Γ)-index 2^|V| · |Aut(Γ)|, and the larger Γ′(Λ) additionally has
// trivial graph automorphisms, pinning the index to 2^(2n+9).  Three fixed
// graphs cover n ≤ 2.

namespace raag {

enum class ConstructionKind { gamma, gamma_prime, preset };

inline const char* to_string(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::gamma: return "gamma";
        case ConstructionKind::gamma_prime: return "gamma-prime";
        case ConstructionKind::preset: return "preset";
    }
    return "?";
}

namespace detail {

inline std::vector<std::string> construction_labels(std::size_t n, bool prime) {
    std::vector<std::string> add;
    for (int i = 1; i <= (prime ? 3 : 2); ++i) add.push_back("a" + std::to_string(i));
    for (int i = 1; i <= (prime ? 3 : 2); ++i) add.push_back("b" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) add.push_back("c" + std::to_string(i));
    for (int i = 1; i <= (prime ? 3 : 2); ++i) add.push_back("d" + std::to_string(i));
    return add;
}

inline std::vector<std::string> checked_vertex_list(const Graph& lambda, bool prime,
                                                    const char* who) {
    if (lambda.vertex_count() < 3)
        throw error(std::string(who) + ": defining graph needs at least 3 vertices (got " +
                    std::to_string(lambda.vertex_count()) + "); use the small-graph dispatch");
    std::vector<std::string> verts = lambda.vertices();
    for (const auto& lab : construction_labels(lambda.vertex_count(), prime)) {
        if (lambda.has_vertex(lab))
            throw error(std::string(who) + ": defining-graph label '" + lab +
                        "' collides with a construction vertex");
        verts.push_back(lab);
    }
    return verts;
}

}  // namespace detail

// Γ(Λ): Λ plus a1,a2,b1,b2,c1..cn,d1,d2.  Every v_j joins b1 and b2; c_i
// joins v_i, v_{i+1 (cyclically)}, d1, d2; d1 joins v1 and b1; d2 joins b2
// and every v_j with j ≥ 2; finally b1–a1, b2–a2, a1–a2.
inline Graph build_gamma(const Graph& lambda) {
    auto verts = detail::checked_vertex_list(lambda, false, "gamma");
    std::size_t n = lambda.vertex_count();
    auto v = [&](std::size_t i) { return lambda.vertex(i); };  // 0-based
    auto cs = [&](std::size_t i) { return "c" + std::to_string(i + 1); };
    std::vector<std::pair<std::string, std::string>> e = lambda.edges();
    for (std::size_t j = 0; j < n; ++j) {
        e.emplace_back(v(j), "b1");
        e.emplace_back(v(j), "b2");
    }
    for (std::size_t i = 0; i < n; ++i) {
        e.emplace_back(cs(i), v(i));
        e.emplace_back(cs(i), v((i + 1) % n));
        e.emplace_back(cs(i), "d1");
        e.emplace_back(cs(i), "d2");
    }
    e.emplace_back("d1", v(0));
    e.emplace_back("d1", "b1");
    e.emplace_back("d2", "b2");
    for (std::size_t j = 1; j < n; ++j) e.emplace_back("d2", v(j));
    e.emplace_back("b1", "a1");
    e.emplace_back("b2", "a2");
    e.emplace_back("a1", "a2");
    return Graph(std::move(verts), e);
}

// Γ′(Λ): Λ plus a1..a3, b1..b3, c1..cn, d1..d3.  Every v_k joins all three
// b's; c_j joins v_j, v_{j+1 (cyclically)} and all three d's; d1 joins v1
// and b1; d2 joins v2 and d3; d3 joins every v_k with k ≥ 3 and b3; each
// b_i joins a_i; the a's form a triangle.  Note d2 is *not* adjacent to b2 —
// the asymmetry that kills all graph automorphisms.
inline Graph build_gamma_prime(const Graph& lambda) {
    auto verts = detail::checked_vertex_list(lambda, true, "gamma-prime");
    std::size_t n = lambda.vertex_count();
    auto v = [&](std::size_t i) { return lambda.vertex(i); };
    auto cs = [&](std::size_t i) { return "c" + std::to_string(i + 1); };
    std::vector<std::pair<std::string, std::string>> e = lambda.edges();
    for (std::size_t k = 0; k < n; ++k)
        for (const char* b : {"b1", "b2", "b3"}) e.emplace_back(v(k), b);
    for (std::size_t j = 0; j < n; ++j) {
        e.emplace_back(cs(j), v(j));
        e.emplace_back(cs(j), v((j + 1) % n));
        for (const char* d : {"d1", "d2", "d3"}) e.emplace_back(cs(j), d);
    }
    e.emplace_back("d1", v(0));
    e.emplace_back("d1", "b1");
    e.emplace_back("d2", v(1));
    for (std::size_t k = 2; k < n; ++k) e.emplace_back("d3", v(k));
    e.emplace_back("d3", "b3");
    e.emplace_back("d2", "d3");
    e.emplace_back("b1", "a1");
    e.emplace_back("b2", "a2");
    e.emplace_back("b3", "a3");
    e.emplace_back("a1", "a2");
    e.emplace_back("a1", "a3");
    e.emplace_back("a2", "a3");
    return Graph(std::move(verts), e);
}

namespace detail {

// The three fixed answers for defining graphs with fewer than 3 vertices,
// frozen as edge lists.  preset_checksum() guards the transcription.
inline const std::vector<std::pair<int, int>>& preset_edges(int which) {
    static const std::vector<std::pair<int, int>> g1 = {
        {1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 6}, {2, 8}, {3, 4}, {3, 6},
        {3, 8}, {4, 9}, {4, 10}, {4, 11}, {5, 6}, {5, 9}, {5, 10}, {6, 7},
        {6, 9}, {7, 8}, {7, 9}, {7, 11}, {8, 9}, {8, 10}, {10, 11}};
    static const std::vector<std::pair<int, int>> g2 = {
        {1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 7}, {3, 6}, {3, 7},
        {3, 8}, {4, 6}, {4, 7}, {4, 8}, {4, 9}, {5, 6}, {5, 7}, {5, 9}, {8, 9}};
    static const std::vector<std::pair<int, int>> g3 = {
        {1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 7}, {3, 4},
        {3, 8}, {4, 5}, {4, 8}, {4, 9}, {4, 10}, {5, 6}, {5, 9}, {6, 8},
        {6, 9}, {6, 11}, {7, 8}, {7, 9}, {7, 11}, {8, 9}, {10, 11}};
    switch (which) {
        case 1: return g1;
        case 2: return g2;
        case 3: return g3;
    }
    throw error("preset: index must be 1, 2 or 3");
}

inline std::uint64_t preset_checksum() {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over (which, i, j)
    for (int which = 1; which <= 3; ++which)
        for (auto [i, j] : preset_edges(which))
            for (int byte : {which, i, j}) {
                h ^= std::uint64_t(byte);
                h *= 1099511628211ULL;
            }
    return h;
}

}  // namespace detail

// The fixed graph whose PSO is: free of rank 1 (which = 1), free of rank 2
// (which = 2), free abelian of rank 2 (which = 3).  Vertices v1..v11/v9.
inline Graph preset_graph(int which) {
    const auto& table = detail::preset_edges(which);
    int n = which == 2 ? 9 : 11;
    std::vector<std::string> verts;
    for (int i = 1; i <= n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> e;
    for (auto [i, j] : table)
        e.emplace_back("v" + std::to_string(i), "v" + std::to_string(j));
    return Graph(std::move(verts), e);
}

// Dispatch: n ≥ 3 uses the preferred construction; n = 1 and the two
// 2-vertex isomorphism classes map to the fixed preset graphs.
inline std::pair<Graph, ConstructionKind> build_for(const Graph& lambda, ConstructionKind prefer) {
    std::size_t n = lambda.vertex_count();
    if (n == 0) throw error("build: the defining graph is empty");
    if (n == 1) return {preset_graph(1), ConstructionKind::preset};
    if (n == 2)
        return {preset_graph(lambda.edge_count() ? 3 : 2), ConstructionKind::preset};
    if (prefer == ConstructionKind::gamma) return {build_gamma(lambda), ConstructionKind::gamma};
    return {build_gamma_prime(lambda), ConstructionKind::gamma_prime};
}

// --- instance verification ------------------------------------------------

struct VerificationResult {
    ConstructionKind kind = ConstructionKind::gamma;
    std::size_t lambda_vertices = 0;
    std::size_t gamma_vertices = 0;
    std::size_t gamma_edges = 0;
    bool forests_ok = false;
    bool theta_iso_ok = false;
    std::optional<Permutation> theta_bijection;  // Θ(Γ) -> Λ when theta_iso_ok
    bool finite_index_ok = false;
    std::optional<bool> aut_trivial_ok;  // only checked for rigid targets
    std::optional<bigint> quotient_order;

    bool passed() const {
        return forests_ok && theta_iso_ok && finite_index_ok &&
               (!aut_trivial_ok || *aut_trivial_ok);
    }
};

// Certifies the construction theorems on one instance: every support graph
// of gamma is a forest, Θ(gamma) ≅ lambda (with an explicit bijection),
// PSO has finite index in Out, and — when expect_aut_trivial — Aut(gamma)
// is trivial, so the index is exactly 2^|V(gamma)|.
inline VerificationResult verify_construction(const Graph& lambda, const Graph& gamma,
                                              bool expect_aut_trivial) {
    VerificationResult r;
    r.lambda_vertices = lambda.vertex_count();
    r.gamma_vertices = gamma.vertex_count();
    r.gamma_edges = gamma.edge_count();
    ForestCheck fc = all_support_graphs_are_forests(gamma);
    r.forests_ok = fc.ok;
    if (fc.ok) {
        ThetaGraph theta = theta_graph(gamma);
        if (auto bij = are_isomorphic(theta.graph, lambda)) {
            r.theta_iso_ok = is_isomorphism(theta.graph, lambda, *bij);
            if (r.theta_iso_ok) r.theta_bijection = std::move(*bij);
        }
    }
    r.finite_index_ok = legal_transvections(gamma).empty();
    std::optional<bigint> aut_order;
    auto aut = [&]() -> const bigint& {
        if (!aut_order) aut_order = automorphism_group(gamma).order;
        return *aut_order;
    };
    if (expect_aut_trivial) r.aut_trivial_ok = aut() == 1;
    if (r.finite_index_ok) r.quotient_order = pow2(gamma.vertex_count()) * aut();
    return r;
}

// --- randomized sweep (shared by the CLI and the acceptance suite) --------

struct SampleSweep {
    std::uint64_t seed = 0;
    ConstructionKind target = ConstructionKind::gamma;
    std::vector<Graph> lambdas;
    std::vector<VerificationResult> results;
    std::size_t passed = 0;
};

inline SampleSweep run_sample_sweep(std::uint64_t seed, std::size_t count, std::size_t nmin,
                                    std::size_t nmax, ConstructionKind target) {
    if (nmin < 3 || nmax < nmin) throw error("sweep: need 3 <= nmin <= nmax");
    SampleSweep sw;
    sw.seed = seed;
    sw.target = target;
    Rng rng(seed);
    for (std::size_t s = 0; s < count; ++s) {
        Graph lambda = random_lambda(rng, nmin, nmax);
        auto [gamma, kind] = build_for(lambda, target);
        VerificationResult r =
            verify_construction(lambda, gamma, kind != ConstructionKind::gamma);
        r.kind = kind;
        if (r.passed()) ++sw.passed;
        sw.lambdas.push_back(std::move(lambda));
        sw.results.push_back(std::move(r));
    }
    return sw;
}

}  // namespace raag
