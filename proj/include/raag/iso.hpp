#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "raag/bigint.hpp"
#include "raag/dense.hpp"
#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/graph6.hpp"

// Isomorphism machinery: one search engine (iterated equitable refinement
// plus individualization backtracking) behind three drivers — canonical
// form, isomorphism search, automorphism group.

namespace raag {

namespace detail {

// --- equitable refinement -------------------------------------------------
//
// Colors are ranks < n; a refinement step ranks vertices by the signature
// (own color, sorted neighbor colors) and repeats until the number of colors
// stops growing.  Ranking by signature *value* keeps the result invariant
// under relabeling, which the canonical-form driver relies on.  Signatures
// are fixed 65-byte arrays padded with 0xFF so that lexicographic array
// comparison orders them; real colors stay below 0xFF.

using Sig = std::array<std::uint8_t, kMaxDense + 1>;

inline void fill_sig(const Dense& g, const std::vector<std::uint8_t>& cols, int v, Sig& s) {
    s.fill(0xFF);
    s[0] = cols[v];
    int k = 1;
    std::uint64_t nb = g.row[v];
    while (nb) {
        s[k++] = cols[std::countr_zero(nb)];
        nb &= nb - 1;
    }
    std::sort(s.begin() + 1, s.begin() + k);
}

// Refine `cols` in place (single graph).
inline void wl_refine(const Dense& g, std::vector<std::uint8_t>& cols) {
    int n = g.n;
    if (n == 0) return;
    std::vector<std::pair<Sig, int>> sigs(n);
    int ncols = -1;
    for (;;) {
        for (int v = 0; v < n; ++v) {
            fill_sig(g, cols, v, sigs[v].first);
            sigs[v].second = v;
        }
        std::sort(sigs.begin(), sigs.end());
        int rank = 0;
        cols[sigs[0].second] = 0;
        for (int i = 1; i < n; ++i) {
            if (sigs[i].first != sigs[i - 1].first) ++rank;
            cols[sigs[i].second] = std::uint8_t(rank);
        }
        if (rank + 1 == ncols) return;  // partition stable
        ncols = rank + 1;
        if (ncols == n) return;  // discrete
    }
}

// Joint refinement of two colorings over a shared color space.  Returns
// false as soon as the per-color counts of the two sides disagree — then no
// color-preserving isomorphism exists.
inline bool wl_refine_pair(const Dense& g, std::vector<std::uint8_t>& cg, const Dense& h,
                           std::vector<std::uint8_t>& ch) {
    int n = g.n, m = h.n;
    if (n != m) return false;
    std::vector<std::pair<Sig, int>> sigs(n + m);  // side encoded as index offset
    int ncols = -1;
    for (;;) {
        for (int v = 0; v < n; ++v) {
            fill_sig(g, cg, v, sigs[v].first);
            sigs[v].second = v;
        }
        for (int v = 0; v < m; ++v) {
            fill_sig(h, ch, v, sigs[n + v].first);
            sigs[n + v].second = n + v;
        }
        std::sort(sigs.begin(), sigs.end());
        // ranks plus per-side counts in one pass
        int rank = 0;
        std::array<int, 2 * kMaxDense> cnt{};  // per color: g-count - h-count
        auto put = [&](int tagged, int r) {
            if (tagged < n) {
                cg[tagged] = std::uint8_t(r);
                ++cnt[r];
            } else {
                ch[tagged - n] = std::uint8_t(r);
                --cnt[r];
            }
        };
        put(sigs[0].second, 0);
        for (int i = 1; i < n + m; ++i) {
            if (sigs[i].first != sigs[i - 1].first) ++rank;
            put(sigs[i].second, rank);
        }
        for (int r = 0; r <= rank; ++r)
            if (cnt[r] != 0) return false;
        if (rank + 1 == ncols) return true;
        ncols = rank + 1;
        if (ncols == n) return true;  // both sides discrete
    }
}

// Smallest color that appears on at least two vertices; -1 if discrete.
inline int first_split_color(const std::vector<std::uint8_t>& cols) {
    std::array<int, kMaxDense + 1> cnt{};
    int best = -1;
    for (std::uint8_t c : cols) ++cnt[c];
    for (int c = 0; c <= kMaxDense; ++c)
        if (cnt[c] >= 2) {
            best = c;
            break;
        }
    return best;
}

inline constexpr std::uint8_t kPinColor = 0xFE;  // fresh color for one individualization

// --- color-preserving isomorphism search ----------------------------------

inline bool iso_rec(const Dense& g, std::vector<std::uint8_t> cg, const Dense& h,
                    std::vector<std::uint8_t> ch, std::vector<int>& out) {
    if (!wl_refine_pair(g, cg, h, ch)) return false;
    int c = first_split_color(cg);
    if (c < 0) {
        // discrete on both sides: match colors, then verify edges for real
        std::array<int, kMaxDense> of_color{};
        for (int v = 0; v < h.n; ++v) of_color[ch[v]] = v;
        for (int v = 0; v < g.n; ++v) out[v] = of_color[cg[v]];
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                if (g.edge(i, j) != h.edge(out[i], out[j])) return false;
        return true;
    }
    int u = -1;
    for (int v = 0; v < g.n; ++v)
        if (cg[v] == c) {
            u = v;
            break;
        }
    for (int w = 0; w < h.n; ++w) {
        if (ch[w] != c) continue;
        auto cg2 = cg;
        auto ch2 = ch;
        cg2[u] = kPinColor;
        ch2[w] = kPinColor;
        if (iso_rec(g, std::move(cg2), h, std::move(ch2), out)) return true;
    }
    return false;
}

// Color-preserving isomorphism g -> h, or nullopt.  Deterministic: vertices
// are tried in ascending index order.
inline std::optional<std::vector<int>> find_color_iso(const Dense& g,
                                                      std::vector<std::uint8_t> cg,
                                                      const Dense& h,
                                                      std::vector<std::uint8_t> ch) {
    if (g.n != h.n) return std::nullopt;
    std::vector<int> out(g.n);
    if (g.n == 0) return out;
    if (!iso_rec(g, std::move(cg), h, std::move(ch), out)) return std::nullopt;
    return out;
}

// --- canonical ordering ---------------------------------------------------

// Leaf certificate: upper-triangle bits of the adjacency matrix under the
// candidate ordering, packed 6 per byte in graph6 bit order.
inline void pack_order(const Dense& g, const std::vector<int>& order, std::vector<std::uint8_t>& out) {
    out.assign(graph6_body_len(g.n), 0);
    std::size_t k = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.edge(order[i], order[j])) out[k / 6] |= std::uint8_t(1 << (5 - k % 6));
}

inline bool is_dense_automorphism(const Dense& g, const std::vector<int>& p) {
    for (int i = 0; i < g.n; ++i) {
        std::uint64_t mapped = 0;
        std::uint64_t nb = g.row[i];
        while (nb) {
            mapped |= bit(p[std::countr_zero(nb)]);
            nb &= nb - 1;
        }
        if (mapped != g.row[p[i]]) return false;
    }
    return true;
}

struct CanonSearch {
    const Dense& g;
    bool have_best = false;
    std::vector<std::uint8_t> best;        // certificate of the champion leaf
    std::vector<int> best_order;           // position -> vertex
    std::vector<std::vector<int>> auts;    // discovered automorphisms (with inverses)
    std::vector<int> indiv;                // individualized vertices on the path
    std::vector<std::uint8_t> leaf_buf;

    static constexpr std::size_t kMaxStoredAuts = 256;

    explicit CanonSearch(const Dense& graph) : g(graph) {}

    void store_aut(const std::vector<int>& p) {
        if (auts.size() + 2 > kMaxStoredAuts || !is_dense_automorphism(g, p)) return;
        std::vector<int> inv(g.n);
        for (int i = 0; i < g.n; ++i) inv[p[i]] = i;
        auts.push_back(p);
        auts.push_back(std::move(inv));
    }

    void leaf(const std::vector<std::uint8_t>& cols) {
        std::vector<int> order(g.n);
        for (int v = 0; v < g.n; ++v) order[cols[v]] = v;
        pack_order(g, order, leaf_buf);
        if (!have_best || leaf_buf < best) {
            best = leaf_buf;
            best_order = order;
            have_best = true;
        } else if (leaf_buf == best) {
            // two orderings with identical matrices differ by an automorphism
            std::vector<int> p(g.n);
            for (int pos = 0; pos < g.n; ++pos) p[best_order[pos]] = order[pos];
            store_aut(p);
        }
    }

    // u is redundant if a discovered automorphism fixing every individualized
    // vertex maps it onto an already-explored sibling: the subtrees coincide.
    bool prunable(int u, std::uint64_t tried) const {
        for (const auto& p : auts) {
            bool fixes = true;
            for (int x : indiv)
                if (p[x] != x) {
                    fixes = false;
                    break;
                }
            if (fixes && (tried >> p[u] & 1)) return true;
        }
        return false;
    }

    void rec(std::vector<std::uint8_t> cols) {
        wl_refine(g, cols);
        int c = first_split_color(cols);
        if (c < 0) {
            leaf(cols);
            return;
        }
        std::uint64_t tried = 0;
        for (int u = 0; u < g.n; ++u) {
            if (cols[u] != c) continue;
            if (prunable(u, tried)) continue;
            auto cols2 = cols;
            cols2[u] = kPinColor;
            indiv.push_back(u);
            rec(std::move(cols2));
            indiv.pop_back();
            tried |= bit(u);
        }
    }
};

// Canonical vertex ordering (position -> vertex): the lexicographically
// smallest adjacency bit string over all orderings the search explores.
// Invariant under relabeling, so equal canonical matrices <=> isomorphic.
inline std::vector<int> canonical_order(const Dense& g) {
    if (g.n == 0) return {};
    CanonSearch s(g);
    s.rec(std::vector<std::uint8_t>(g.n, 0));
    return s.best_order;
}

// Canonical adjacency bits packed into one word; needs n <= 11 (55 bits).
inline std::uint64_t canonical_bits_small(const Dense& g) {
    auto ord = canonical_order(g);
    std::uint64_t bits = 0;
    int k = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.edge(ord[i], ord[j])) bits |= bit(k);
    return bits;
}

// --- automorphism group (stabilizer chain) --------------------------------

struct DenseAut {
    bigint order = 1;
    std::vector<std::vector<int>> gens;
};

inline DenseAut dense_aut(const Dense& g) {
    DenseAut res;
    if (g.n == 0) return res;
    std::vector<std::uint8_t> base(g.n, 0);  // pins accumulate here
    int pins = 0;
    for (;;) {
        auto cols = base;
        wl_refine(g, cols);
        int c = first_split_color(cols);
        if (c < 0) break;  // pointwise stabilizer is trivial
        std::vector<int> cell;
        for (int v = 0; v < g.n; ++v)
            if (cols[v] == c) cell.push_back(v);
        int b = cell[0];

        // orbit of b under the stabilizer of the pinned prefix; every found
        // generator fixes the prefix, so closure under them is sound
        std::vector<std::vector<int>> level;
        std::uint64_t orb = bit(b);
        auto close = [&] {
            for (bool grew = true; grew;) {
                grew = false;
                for (const auto& p : level) {
                    std::uint64_t scan = orb;
                    while (scan) {
                        int v = std::countr_zero(scan);
                        scan &= scan - 1;
                        if (!(orb >> p[v] & 1)) {
                            orb |= bit(p[v]);
                            grew = true;
                        }
                    }
                }
            }
        };
        for (std::size_t i = 1; i < cell.size(); ++i) {
            int u = cell[i];
            if (orb >> u & 1) continue;  // witnessed already
            auto cg = base, ch = base;
            cg[b] = kPinColor;
            ch[u] = kPinColor;
            if (auto p = find_color_iso(g, std::move(cg), g, std::move(ch))) {
                level.push_back(*p);
                res.gens.push_back(std::move(*p));
                close();
            }
        }
        res.order *= int(std::popcount(orb));
        base[b] = std::uint8_t(64 + pins++);  // fix b, descend in the chain
    }
    return res;
}

}  // namespace detail

// --- label-level API ------------------------------------------------------

// A bijection between two label sets (possibly the same).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::map<std::string, std::string> m) : map_(std::move(m)) {
        std::vector<std::string> img;
        img.reserve(map_.size());
        for (const auto& [k, v] : map_) img.push_back(v);
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
            throw error("permutation: mapping is not injective");
    }

    const std::map<std::string, std::string>& mapping() const { return map_; }
    std::size_t size() const { return map_.size(); }

    const std::string& apply(const std::string& x) const {
        auto it = map_.find(x);
        if (it == map_.end()) throw error("permutation: '" + x + "' not in domain");
        return it->second;
    }

    Permutation inverse() const {
        std::map<std::string, std::string> inv;
        for (const auto& [k, v] : map_) inv.emplace(v, k);
        return Permutation(std::move(inv));
    }

    // x -> second(this(x)); this's image must lie in second's domain
    Permutation then(const Permutation& second) const {
        std::map<std::string, std::string> out;
        for (const auto& [k, v] : map_) out.emplace(k, second.apply(v));
        return Permutation(std::move(out));
    }

    bool is_identity() const {
        for (const auto& [k, v] : map_)
            if (k != v) return false;
        return true;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.map_ == b.map_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.map_ < b.map_;
    }

  private:
    std::map<std::string, std::string> map_;
};

// Certificate check: perm is a bijection V(g) -> V(h) with u~v iff perm(u)~perm(v).
inline bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& perm) {
    if (g.vertex_count() != h.vertex_count() || perm.size() != g.vertex_count()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    std::vector<std::size_t> img(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        auto it = perm.mapping().find(g.vertex(i));
        if (it == perm.mapping().end()) return false;
        auto j = h.index_of(it->second);
        if (!j) return false;
        img[i] = *j;
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j : g.neighbors_idx(i))
            if (i < j && !h.adjacent_idx(img[i], img[j])) return false;
    return true;  // edge counts equal, so preserving all edges suffices
}

// Isomorphism g -> h as a label bijection, or nullopt.  Deterministic.
inline std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    detail::Dense dg = detail::to_dense(g, "isomorphism");
    detail::Dense dh = detail::to_dense(h, "isomorphism");
    auto p = detail::find_color_iso(dg, std::vector<std::uint8_t>(dg.n, 0), dh,
                                    std::vector<std::uint8_t>(dh.n, 0));
    if (!p) return std::nullopt;
    std::map<std::string, std::string> m;
    for (int i = 0; i < dg.n; ++i) m.emplace(g.vertex(i), h.vertex((*p)[i]));
    return Permutation(std::move(m));
}

struct AutGroup {
    bigint order = 1;
    std::vector<Permutation> generators;  // empty iff the group is trivial
};

// Full automorphism group: exact order plus a generating set (a strong
// generating set from the stabilizer chain, identity omitted).
inline AutGroup automorphism_group(const Graph& g) {
    detail::Dense d = detail::to_dense(g, "automorphism");
    detail::DenseAut a = detail::dense_aut(d);
    AutGroup out;
    out.order = std::move(a.order);
    for (const auto& p : a.gens) {
        std::map<std::string, std::string> m;
        for (int i = 0; i < d.n; ++i) m.emplace(g.vertex(i), g.vertex(p[i]));
        out.generators.emplace_back(std::move(m));
    }
    return out;
}

// graph6 string of the canonical relabeling: equal across isomorphic graphs,
// distinct otherwise.  Needs n <= 62 like all graph6 output.
inline std::string canonical_form(const Graph& g) {
    if (g.vertex_count() > std::size_t(detail::kGraph6MaxN))
        throw error("canonical_form: " + std::to_string(g.vertex_count()) +
                    " vertices exceeds the 62-vertex limit");
    detail::Dense d = detail::to_dense(g, "canonical_form");
    auto ord = detail::canonical_order(d);
    std::vector<std::uint8_t> payload;
    detail::pack_order(d, ord, payload);
    std::string out(1 + payload.size(), char(63));
    out[0] = char(63 + d.n);
    for (std::size_t i = 0; i < payload.size(); ++i) out[1 + i] = char(63 + payload[i]);
    return out;
}

}  // namespace raag
