#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raag/analysis.hpp"
#include "raag/bigint.hpp"
#include "raag/construction.hpp"
#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/iso.hpp"

// Exhaustive sweep over all isomorphism classes of graphs on k ≤ 7 vertices:
// enumeration by canonical deduplication of the 2^C(k,2) adjacency masks,
// classification of each class (is PSO a RAAG? finite index?), and the
// realization check that every small class occurs as a Θ-graph.

namespace raag {

namespace detail {

inline constexpr int kMaxCensus = 7;

// mask bit t <-> upper-triangle slot t in graph6 order (j outer, i inner)
inline Dense dense_from_mask(int k, std::uint64_t mask) {
    Dense d;
    d.n = k;
    d.all = bit(k) - 1;
    int t = 0;
    for (int j = 1; j < k; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (mask >> t & 1) d.add_edge(i, j);
    return d;
}

inline int census_threads(std::uint64_t work) {
    unsigned hw = std::thread::hardware_concurrency();
    int nt = int(hw ? hw : 1);
    if (nt > 8) nt = 8;
    while (nt > 1 && work / std::uint64_t(nt) < 4096) --nt;  // tiny jobs stay serial
    return nt;
}

inline void check_census_range(int k) {
    if (k < 1 || k > kMaxCensus)
        throw error("census: size must be between 1 and " + std::to_string(kMaxCensus) +
                    " (got " + std::to_string(k) + ")");
}

}  // namespace detail

// One representative per isomorphism class, on vertices "0".."k-1".  The
// representative is the class's smallest adjacency mask; the list is in
// ascending mask order.  Deterministic for any thread count: the per-thread
// partials merge through a min-reduction keyed on canonical bits.
inline std::vector<Graph> enumerate_graphs(int k) {
    detail::check_census_range(k);
    int m = k * (k - 1) / 2;
    std::uint64_t total = std::uint64_t(1) << m;
    int nt = detail::census_threads(total);

    using Partial = std::unordered_map<std::uint64_t, std::uint64_t>;  // canon -> min mask
    std::vector<Partial> parts(nt);
    auto worker = [&](int t) {
        Partial& mine = parts[t];
        std::uint64_t lo = total * t / nt, hi = total * (t + 1) / nt;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            detail::Dense d = detail::dense_from_mask(k, mask);
            std::uint64_t key = detail::canonical_bits_small(d);
            auto [it, fresh] = mine.try_emplace(key, mask);
            if (!fresh && mask < it->second) it->second = mask;
        }
    };
    if (nt == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    Partial all;
    for (const auto& part : parts)
        for (auto [key, mask] : part) {
            auto [it, fresh] = all.try_emplace(key, mask);
            if (!fresh && mask < it->second) it->second = mask;
        }
    std::vector<std::uint64_t> reps;
    reps.reserve(all.size());
    for (auto [key, mask] : all) reps.push_back(mask);
    std::sort(reps.begin(), reps.end());

    std::vector<std::string> verts;
    for (int i = 0; i < k; ++i) verts.push_back(std::to_string(i));
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (std::uint64_t mask : reps) {
        std::vector<std::pair<std::string, std::string>> e;
        int t = 0;
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if (mask >> t & 1) e.emplace_back(verts[i], verts[j]);
        out.emplace_back(verts, e);
    }
    return out;
}

struct CensusEntry {
    std::string canonical;  // canonical form of the class
    int n = 0;
    bool pso_is_raag = false;  // all support graphs are forests
    bool finite_index = false;
    std::optional<std::string> theta_canonical;  // present iff pso_is_raag
    std::optional<bigint> quotient_order;        // present iff finite_index
};

// Classify every isomorphism class on k vertices, in enumeration order.
inline std::vector<CensusEntry> classify(int k) {
    auto reps = enumerate_graphs(k);
    std::vector<CensusEntry> out(reps.size());
    auto work = [&](std::size_t i) {
        const Graph& g = reps[i];
        CensusEntry& e = out[i];
        e.canonical = canonical_form(g);
        e.n = k;
        e.pso_is_raag = all_support_graphs_are_forests(g).ok;
        if (e.pso_is_raag) e.theta_canonical = canonical_form(theta_graph(g).graph);
        e.finite_index = legal_transvections(g).empty();
        if (e.finite_index) e.quotient_order = pow2(k) * automorphism_group(g).order;
    };
    int nt = detail::census_threads(reps.size() * 64);
    if (nt == 1) {
        for (std::size_t i = 0; i < reps.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < reps.size(); i += nt) work(i);
            });
        for (auto& th : pool) th.join();
    }
    return out;
}

// --- realization coverage -------------------------------------------------

struct CoverageLevel {
    int n = 0;
    std::size_t classes = 0;
    std::size_t verified = 0;  // classes realized as Θ of their constructed graph
    std::size_t via_preset = 0;
    std::size_t via_gamma_prime = 0;
};

struct CoverageReport {
    int max_n = 0;
    std::vector<CoverageLevel> levels;
    std::vector<std::string> failures;  // canonical forms that did not verify
    bool all_verified = true;
};

// For every isomorphism class Λ with at most max_n vertices, build the
// rigid realization (preset for n ≤ 2, Γ′ otherwise) and certify
// Θ ≅ Λ with finite index and trivial automorphisms.
inline CoverageReport coverage_check(int max_n) {
    if (max_n < 1 || max_n > 4) throw error("coverage: size must be between 1 and 4");
    CoverageReport rep;
    rep.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        CoverageLevel lvl;
        lvl.n = n;
        for (const Graph& lambda : enumerate_graphs(n)) {
            ++lvl.classes;
            auto [gamma, kind] = build_for(lambda, ConstructionKind::gamma_prime);
            if (kind == ConstructionKind::preset)
                ++lvl.via_preset;
            else
                ++lvl.via_gamma_prime;
            if (verify_construction(lambda, gamma, true).passed())
                ++lvl.verified;
            else
                rep.failures.push_back(canonical_form(lambda));
        }
        if (lvl.verified != lvl.classes) rep.all_verified = false;
        rep.levels.push_back(lvl);
    }
    return rep;
}

}  // namespace raag
