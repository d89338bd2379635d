#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/graph6.hpp"

// Plain-text edge-list format: first line lists all vertex labels separated
// by spaces (in graph order), each further non-empty line is one edge "u v".
// Repeated edges collapse; self-loops and unknown endpoints are errors.

namespace raag {

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw error("edge-list: empty input");
    std::vector<std::string> verts;
    {
        std::istringstream head(line);
        std::string tok;
        while (head >> tok) verts.push_back(tok);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string u, v, extra;
        if (!(row >> u)) continue;  // blank line
        if (!(row >> v) || (row >> extra))
            throw error("edge-list: expected 'u v', got '" + line + "'");
        edges.emplace_back(u, v);
    }
    return Graph(std::move(verts), edges);
}

inline std::string write_edge_list(const Graph& g) {
    std::string out;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (i) out += ' ';
        out += g.vertex(i);
    }
    out += '\n';
    for (const auto& [u, v] : g.edges()) out += u + " " + v + "\n";
    return out;
}

// Auto-detect: single-line graph6 vs edge-list.  graph6 bodies never contain
// spaces and their first byte is in [63,126]; an edge-list's first line is
// whitespace-separated labels.  A one-line input that parses as graph6 wins.
inline Graph parse_any(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) t.remove_suffix(1);
    if (t.find('\n') == std::string_view::npos && t.find(' ') == std::string_view::npos) {
        try {
            return parse_graph6(t);
        } catch (const error&) {
            // fall through to edge-list (e.g. a single-vertex label line)
        }
    }
    return parse_edge_list(text);
}

}  // namespace raag
