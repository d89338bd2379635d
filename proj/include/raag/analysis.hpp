#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/bigint.hpp"
#include "raag/dense.hpp"
#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/iso.hpp"

// The group-theoretic reading of a graph Γ: support graphs, SIL pairs, the
// Θ-graph presenting the pure symmetric outer automorphism group PSO(A_Γ),
// the generators of Out(A_Γ) (inversions, graph permutations, legal
// transvections, partial conjugations), and the finite-index test with its
// witness table.

namespace raag {

namespace detail {

struct Ctx {
    const Graph* g = nullptr;
    Dense d;
    // per vertex x: the components of Γ − st(x), in ascending lowest-bit order
    std::vector<std::vector<std::uint64_t>> comps_of;

    const std::string& label(int v) const { return g->vertex(v); }

    // smallest label in a nonempty mask (label order, not bit order)
    const std::string* min_label(std::uint64_t m) const {
        const std::string* best = nullptr;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (!best || label(v) < *best) best = &label(v);
        }
        return best;
    }

    VertexSet mask_labels(std::uint64_t m) const {
        VertexSet out;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            out.push_back(label(v));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_component_of(int x, std::uint64_t a) const {
        for (std::uint64_t c : comps_of[x])
            if (c == a) return true;
        return false;
    }
};

inline Ctx make_ctx(const Graph& g) {
    Ctx c;
    c.g = &g;
    c.d = to_dense(g, "analysis");
    c.comps_of.resize(c.d.n);
    for (int x = 0; x < c.d.n; ++x)
        c.comps_of[x] = mask_components(c.d, c.d.all & ~c.d.st(x));
    return c;
}

inline void sort_by_min_label(const Ctx& c, std::vector<std::uint64_t>& masks) {
    std::sort(masks.begin(), masks.end(), [&](std::uint64_t a, std::uint64_t b) {
        return *c.min_label(a) < *c.min_label(b);
    });
}

// Support graph of v in mask form.  Nodes are the components of Γ − st(v)
// ordered by smallest label; {A, B} is an edge iff A is a component of
// Γ − st(b) for some b ∈ B, or B is a component of Γ − st(a) for some a ∈ A.
struct SgMask {
    std::vector<std::uint64_t> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, lexicographic
    std::size_t ncomp = 0;                                   // connected components

    bool is_forest() const { return edges.size() + ncomp == nodes.size(); }
};

inline bool sg_edge(const Ctx& c, std::uint64_t a, std::uint64_t b) {
    std::uint64_t scan = b;
    while (scan) {
        int x = std::countr_zero(scan);
        scan &= scan - 1;
        if (c.is_component_of(x, a)) return true;
    }
    scan = a;
    while (scan) {
        int x = std::countr_zero(scan);
        scan &= scan - 1;
        if (c.is_component_of(x, b)) return true;
    }
    return false;
}

inline SgMask sg_mask(const Ctx& c, int v) {
    SgMask sg;
    sg.nodes = c.comps_of[v];
    sort_by_min_label(c, sg.nodes);
    std::size_t k = sg.nodes.size();
    std::vector<std::size_t> parent(k);
    for (std::size_t i = 0; i < k; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (sg_edge(c, sg.nodes[i], sg.nodes[j])) {
                sg.edges.emplace_back(i, j);
                parent[find(i)] = find(j);
            }
    for (std::size_t i = 0; i < k; ++i)
        if (find(i) == i) ++sg.ncomp;
    return sg;
}

inline std::optional<std::uint64_t> sil_witness(const Ctx& c, int v, int w) {
    if (v == w || c.d.edge(v, w)) return std::nullopt;
    std::uint64_t common = c.d.row[v] & c.d.row[w];
    auto comps = mask_components(c.d, c.d.all & ~common);
    sort_by_min_label(c, comps);
    std::uint64_t vw = bit(v) | bit(w);
    for (std::uint64_t m : comps)
        if (!(m & vw)) return m;
    return std::nullopt;
}

}  // namespace detail

// --- support graphs and SIL pairs -----------------------------------------

struct SupportGraph {
    std::string base;
    std::vector<VertexSet> nodes;  // ordered by smallest element
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t component_count = 0;
    bool is_forest = true;
};

inline SupportGraph support_graph(const Graph& g, std::string_view v) {
    detail::Ctx c = detail::make_ctx(g);
    detail::SgMask sg = detail::sg_mask(c, int(g.require_index(v)));
    SupportGraph out;
    out.base = std::string(v);
    for (std::uint64_t m : sg.nodes) out.nodes.push_back(c.mask_labels(m));
    out.edges = sg.edges;
    out.component_count = sg.ncomp;
    out.is_forest = sg.is_forest();
    return out;
}

struct ForestCheck {
    bool ok = true;
    std::optional<std::string> witness;  // first vertex whose support graph has a cycle
};

inline ForestCheck all_support_graphs_are_forests(const Graph& g) {
    detail::Ctx c = detail::make_ctx(g);
    for (int v = 0; v < c.d.n; ++v)
        if (!detail::sg_mask(c, v).is_forest()) return {false, g.vertex(v)};
    return {};
}

struct SilPair {
    std::string v, w;
    VertexSet witness_component;  // avoids both, first in smallest-element order
};

// SIL: v ≠ w, v ≁ w, and Γ − (lk(v) ∩ lk(w)) has a component missing both.
inline std::optional<SilPair> is_sil_pair(const Graph& g, std::string_view v, std::string_view w) {
    detail::Ctx c = detail::make_ctx(g);
    int iv = int(g.require_index(v)), iw = int(g.require_index(w));
    auto m = detail::sil_witness(c, iv, iw);
    if (!m) return std::nullopt;
    return SilPair{std::string(v), std::string(w), c.mask_labels(*m)};
}

// --- the Θ-graph ----------------------------------------------------------

struct ThetaVertex {
    bool type_two = false;    // β-vertex (per extra support-graph component)
    std::string base;         // the Γ-vertex it is attached to
    VertexSet comp_a, comp_b; // α only: the support-graph edge, min(a) < min(b)
    std::size_t beta_index = 0;  // β only, 1-based

    // "a:<base>:<min a>:<min b>" / "b:<base>:<index>"
    std::string label() const {
        if (type_two) return "b:" + base + ":" + std::to_string(beta_index);
        return "a:" + base + ":" + comp_a.front() + ":" + comp_b.front();
    }
};

struct ThetaGraph {
    std::vector<ThetaVertex> vertices;  // base vertices in graph order
    Graph graph;                        // on the serialized labels
};

namespace detail {

struct ThetaSeed {
    bool beta;
    int base;
    std::uint64_t a = 0, b = 0;  // α: support-graph edge endpoints
    std::size_t bidx = 0;
};

inline ThetaGraph theta_from_ctx(const Ctx& c) {
    std::vector<ThetaSeed> seeds;
    for (int v = 0; v < c.d.n; ++v) {
        SgMask sg = sg_mask(c, v);
        if (!sg.is_forest())
            throw error("theta: support graph of '" + c.label(v) +
                        "' has a cycle; PSO is not a RAAG on this graph");
        for (auto [i, j] : sg.edges) seeds.push_back({false, v, sg.nodes[i], sg.nodes[j], 0});
        for (std::size_t t = 1; t < sg.ncomp; ++t) seeds.push_back({true, v, 0, 0, t});
    }

    // SIL cache over the base vertices that occur
    std::map<std::pair<int, int>, bool> sil;
    auto is_sil = [&](int v, int w) {
        auto key = std::minmax(v, w);
        auto it = sil.find(key);
        if (it == sil.end()) it = sil.emplace(key, sil_witness(c, v, w).has_value()).first;
        return it->second;
    };
    auto comp_containing = [&](int v, int w) {  // [w]_v, requires w ∉ st(v)
        for (std::uint64_t m : c.comps_of[v])
            if (m >> w & 1) return m;
        throw error("theta: internal: no component contains the counterpart");
    };

    std::vector<std::pair<std::string, std::string>> edges;
    ThetaGraph out;
    for (const auto& s : seeds) {
        ThetaVertex tv;
        tv.type_two = s.beta;
        tv.base = c.label(s.base);
        if (s.beta) {
            tv.beta_index = s.bidx;
        } else {
            tv.comp_a = c.mask_labels(s.a);
            tv.comp_b = c.mask_labels(s.b);
            if (tv.comp_b.front() < tv.comp_a.front()) {
                std::swap(tv.comp_a, tv.comp_b);
            }
        }
        out.vertices.push_back(std::move(tv));
    }
    for (std::size_t x = 0; x < seeds.size(); ++x) {
        for (std::size_t y = x + 1; y < seeds.size(); ++y) {
            const auto& sx = seeds[x];
            const auto& sy = seeds[y];
            bool adjacent = true;
            // α–α across distinct non-adjacent bases is the only place a
            // non-edge can appear: a SIL pair whose edges point at each other
            // through a shared component
            if (!sx.beta && !sy.beta && sx.base != sy.base && is_sil(sx.base, sy.base)) {
                std::uint64_t wv = comp_containing(sx.base, sy.base);
                std::uint64_t fwd = wv == sx.a ? sx.b : wv == sx.b ? sx.a : 0;
                if (fwd) {
                    std::uint64_t vw = comp_containing(sy.base, sx.base);
                    std::uint64_t back = vw == sy.a ? sy.b : vw == sy.b ? sy.a : 0;
                    if (back == fwd) adjacent = false;
                }
            }
            if (adjacent)
                edges.emplace_back(out.vertices[x].label(), out.vertices[y].label());
        }
    }
    std::vector<std::string> labels;
    labels.reserve(out.vertices.size());
    for (const auto& tv : out.vertices) labels.push_back(tv.label());
    out.graph = Graph(std::move(labels), edges);
    return out;
}

}  // namespace detail

// Θ(Γ): one α-vertex per support-graph edge, max(N(v) − 1, 0) β-vertices per
// base vertex v (N(v) = components of its support graph).  β-vertices are
// adjacent to everything; α-vertices of a common base are adjacent; α's of
// different bases are non-adjacent exactly for SIL pairs matched through a
// common component.  Requires every support graph to be a forest.
inline ThetaGraph theta_graph(const Graph& g) {
    return detail::theta_from_ctx(detail::make_ctx(g));
}

// --- Out(A_Γ) generators and the finite-index test ------------------------

struct Transvection {
    std::string source, target;  // lk(source) ⊆ st(target), source ≠ target
    friend bool operator==(const Transvection& a, const Transvection& b) {
        return a.source == b.source && a.target == b.target;
    }
};

// All Γ-legal transvections, in (source, target) graph order.
inline std::vector<Transvection> legal_transvections(const Graph& g) {
    detail::Dense d = detail::to_dense(g, "analysis");
    std::vector<Transvection> out;
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j)
            if (i != j && !(d.row[i] & ~d.st(j)))
                out.push_back({g.vertex(i), g.vertex(j)});
    return out;
}

struct PartialConjugation {
    std::string acting;   // the vertex whose star is removed
    VertexSet component;  // one component of Γ − st(acting)
};

// One entry per (vertex, component of Γ − st(vertex)); acting vertices in
// graph order, components by smallest element.
inline std::vector<PartialConjugation> partial_conjugations(const Graph& g) {
    detail::Ctx c = detail::make_ctx(g);
    std::vector<PartialConjugation> out;
    for (int v = 0; v < c.d.n; ++v) {
        auto comps = c.comps_of[v];
        detail::sort_by_min_label(c, comps);
        for (std::uint64_t m : comps) out.push_back({c.label(v), c.mask_labels(m)});
    }
    return out;
}

// Ordered containment table: cell (u, w) answers lk(u) ⊆ st(w), and when the
// answer is no, carries the lexicographically smallest witness of failure.
struct WitnessTable {
    std::vector<std::string> order;  // graph vertex order; rows lk(u), columns st(w)
    std::vector<std::vector<std::optional<std::string>>> cells;  // nullopt = contained

    bool contained(std::size_t i, std::size_t j) const { return !cells[i][j].has_value(); }
};

struct FiniteIndexReport {
    WitnessTable table;
    std::vector<Transvection> transvections;
    bool finite_index = true;  // no off-diagonal containment
};

inline FiniteIndexReport finite_index_report(const Graph& g) {
    detail::Dense d = detail::to_dense(g, "analysis");
    FiniteIndexReport rep;
    rep.table.order = g.vertices();
    rep.table.cells.assign(d.n, std::vector<std::optional<std::string>>(d.n));
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) {
            std::uint64_t extra = d.row[i] & ~d.st(j);
            if (!extra) {
                if (i != j) {
                    rep.finite_index = false;
                    rep.transvections.push_back({g.vertex(i), g.vertex(j)});
                }
                continue;
            }
            const std::string* best = nullptr;
            while (extra) {
                int v = std::countr_zero(extra);
                extra &= extra - 1;
                if (!best || g.vertex(v) < *best) best = &g.vertex(v);
            }
            rep.table.cells[i][j] = *best;
        }
    return rep;
}

// |Out(A_Γ) : PSO(A_Γ)| = 2^|V| · |Aut(Γ)| when the finite-index condition
// holds, and nothing otherwise (the index is infinite).
inline std::optional<bigint> quotient_order(const Graph& g) {
    if (!legal_transvections(g).empty()) return std::nullopt;
    return pow2(g.vertex_count()) * automorphism_group(g).order;
}

// --- the full report ------------------------------------------------------

struct AnalysisReport {
    bool forests_ok = true;
    bool finite_index = true;
    std::vector<Transvection> transvections;
    WitnessTable witness_table;
    std::optional<ThetaGraph> theta;  // present iff forests_ok
    std::size_t partial_conjugation_count = 0;
    std::size_t inversion_count = 0;
    bigint aut_order = 1;
    std::optional<bigint> quotient_order;  // present iff finite_index
};

inline AnalysisReport analyze(const Graph& g) {
    if (g.vertex_count() == 0)
        throw error("analyze: the graph is empty; defining graphs here are non-empty");
    detail::Ctx c = detail::make_ctx(g);
    AnalysisReport rep;
    for (int v = 0; v < c.d.n && rep.forests_ok; ++v)
        rep.forests_ok = detail::sg_mask(c, v).is_forest();
    if (rep.forests_ok) rep.theta = detail::theta_from_ctx(c);
    FiniteIndexReport fir = finite_index_report(g);
    rep.finite_index = fir.finite_index;
    rep.transvections = std::move(fir.transvections);
    rep.witness_table = std::move(fir.table);
    for (int v = 0; v < c.d.n; ++v) rep.partial_conjugation_count += c.comps_of[v].size();
    rep.inversion_count = g.vertex_count();
    rep.aut_order = automorphism_group(g).order;
    if (rep.finite_index) rep.quotient_order = pow2(g.vertex_count()) * rep.aut_order;
    return rep;
}

}  // namespace raag
