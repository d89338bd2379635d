#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raag/error.hpp"

namespace raag {

// A set of vertex labels, kept sorted lexicographically and duplicate-free.
using VertexSet = std::vector<std::string>;

inline VertexSet make_vertex_set(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

// Finite simple graph with string-labeled vertices.  Vertex order is the
// construction order and is part of the value (serialization and all
// "deterministic order" guarantees refer to it); the edge relation is
// symmetric and irreflexive.  Immutable after construction.
class Graph {
  public:
    Graph() = default;

    Graph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges)
        : labels_(std::move(vertices)) {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i].empty()) throw error("graph: empty vertex label");
            if (!index_.emplace(labels_[i], i).second)
                throw error("graph: duplicate vertex label '" + labels_[i] + "'");
        }
        adj_.assign(labels_.size(), {});
        for (const auto& [u, v] : edges) {
            std::size_t i = require_index(u), j = require_index(v);
            if (i == j) throw error("graph: self-loop at '" + u + "'");
            adj_[i].push_back(j);
            adj_[j].push_back(i);
        }
        // normalize: sorted neighbor lists, duplicate edges collapse
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            edge_count_ += nb.size();
        }
        edge_count_ /= 2;
    }

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<std::string>& vertices() const { return labels_; }
    const std::string& vertex(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> index_of(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t require_index(std::string_view label) const {
        auto idx = index_of(label);
        if (!idx) throw error("graph: unknown vertex '" + std::string(label) + "'");
        return *idx;
    }

    bool has_vertex(std::string_view label) const { return index_of(label).has_value(); }

    const std::vector<std::size_t>& neighbors_idx(std::size_t i) const { return adj_.at(i); }

    bool adjacent_idx(std::size_t i, std::size_t j) const {
        const auto& nb = adj_.at(i);
        return std::binary_search(nb.begin(), nb.end(), j);
    }

    bool adjacent(std::string_view u, std::string_view v) const {
        return adjacent_idx(require_index(u), require_index(v));
    }

    std::size_t degree(std::string_view v) const { return adj_.at(require_index(v)).size(); }

    // Edges as label pairs, one per edge, in (i, j) index order with i < j.
    std::vector<std::pair<std::string, std::string>> edges() const {
        std::vector<std::pair<std::string, std::string>> out;
        out.reserve(edge_count_);
        for (std::size_t i = 0; i < labels_.size(); ++i)
            for (std::size_t j : adj_[i])
                if (i < j) out.emplace_back(labels_[i], labels_[j]);
        return out;
    }

    // Equality is label-order plus edge-set equality, not isomorphism.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }

  private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adj_;
    std::size_t edge_count_ = 0;
};

// lk(v): open neighborhood, sorted lexicographically.
inline VertexSet link(const Graph& g, std::string_view v) {
    std::vector<std::string> out;
    for (std::size_t j : g.neighbors_idx(g.require_index(v))) out.push_back(g.vertex(j));
    std::sort(out.begin(), out.end());
    return out;
}

// st(v) = lk(v) ∪ {v}.
inline VertexSet star(const Graph& g, std::string_view v) {
    VertexSet out = link(g, v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), std::string(v));
    return out;
}

// Induced subgraph on V(g) ∖ s.  Surviving vertices keep their relative
// order.  Unknown labels in s are an error.
inline Graph remove_set(const Graph& g, const VertexSet& s) {
    std::vector<char> drop(g.vertex_count(), 0);
    for (const auto& lab : s) drop[g.require_index(lab)] = 1;
    std::vector<std::string> verts;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (!drop[i]) verts.push_back(g.vertex(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (drop[i]) continue;
        for (std::size_t j : g.neighbors_idx(i))
            if (i < j && !drop[j]) edges.emplace_back(g.vertex(i), g.vertex(j));
    }
    return Graph(std::move(verts), edges);
}

// Connected components.  Each component is a sorted VertexSet; the list is
// ordered by smallest element.  The components partition V(g).
inline std::vector<VertexSet> components(const Graph& g) {
    std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        std::vector<std::string> comp;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            comp.push_back(g.vertex(x));
            for (std::size_t y : g.neighbors_idx(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace raag
