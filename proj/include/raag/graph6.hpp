#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "raag/error.hpp"
#include "raag/graph.hpp"

// graph6 codec (short form, n <= 62).  Bit k of the body encodes the
// upper-triangle entry x(i,j) in column-major order: x(0,1), x(0,2), x(1,2),
// x(0,3), ...; bits are packed 6 per byte, most significant first, each byte
// offset by 63.  Padding bits past n(n-1)/2 must be zero.

namespace raag {

namespace detail {

inline constexpr int kGraph6MaxN = 62;

// payload chars for an n-vertex graph
inline std::size_t graph6_body_len(std::size_t n) {
    return (n * (n - 1) / 2 + 5) / 6;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
    // tolerate the optional format tag and one trailing newline
    if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw error("graph6: empty input");

    unsigned char h = static_cast<unsigned char>(text[0]);
    if (h == 126)
        throw error("graph6: long-form header (n > 62) not supported");
    if (h < 63 || h > 125)
        throw error("graph6: malformed header byte " + std::to_string(int(h)));
    std::size_t n = h - 63;

    std::size_t bits = n * (n - 1) / 2;
    std::size_t body = detail::graph6_body_len(n);
    if (text.size() - 1 != body)
        throw error("graph6: body length " + std::to_string(text.size() - 1) + " for n=" +
                    std::to_string(n) + ", expected " + std::to_string(body));

    std::vector<std::string> verts;
    verts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) verts.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;

    std::size_t k = 0;  // bit cursor
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            unsigned char c = static_cast<unsigned char>(text[1 + k / 6]);
            if (c < 63 || c > 126)
                throw error("graph6: malformed body byte " + std::to_string(int(c)));
            if ((c - 63) >> (5 - k % 6) & 1) edges.emplace_back(verts[i], verts[j]);
        }
    // zero padding in the final byte
    for (; k < 6 * body; ++k) {
        unsigned char c = static_cast<unsigned char>(text[1 + k / 6]);
        if (c < 63 || c > 126)
            throw error("graph6: malformed body byte " + std::to_string(int(c)));
        if ((c - 63) >> (5 - k % 6) & 1) throw error("graph6: nonzero padding bits");
    }
    return Graph(std::move(verts), edges);
}

// Encodes g's adjacency in its current vertex order.
inline std::string write_graph6(const Graph& g) {
    std::size_t n = g.vertex_count();
    if (n > std::size_t(detail::kGraph6MaxN))
        throw error("graph6: " + std::to_string(n) + " vertices exceeds the 62-vertex limit");
    std::string out(1 + detail::graph6_body_len(n), char(63));
    out[0] = char(63 + n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if (g.adjacent_idx(i, j)) out[1 + k / 6] += char(1 << (5 - k % 6));
    return out;
}

}  // namespace raag
