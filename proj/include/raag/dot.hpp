#pragma once

#include <map>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

// Graphviz export.  With rank_hints, vertices whose labels look like the
// construction families (a1, b2, c10, d3, ...) are grouped on one rank per
// family and all remaining vertices (the Λ level) on another, which makes the
// layered structure of the constructed graphs visible in a rendering.
inline std::string write_dot(const Graph& g, bool rank_hints = false) {
    std::string out = "graph G {\n";
    for (const auto& v : g.vertices()) out += "  " + detail::dot_quote(v) + ";\n";
    if (rank_hints) {
        std::map<char, std::vector<std::string>> level;
        for (const auto& v : g.vertices()) {
            char fam = 'v';  // default level: the Λ vertices
            if (v.size() >= 2 && v[0] >= 'a' && v[0] <= 'd' &&
                v.find_first_not_of("0123456789", 1) == std::string::npos)
                fam = v[0];
            level[fam].push_back(v);
        }
        for (const auto& [fam, labs] : level) {
            if (labs.size() < 2) continue;
            out += "  { rank=same;";
            for (const auto& v : labs) out += " " + detail::dot_quote(v) + ";";
            out += " }\n";
        }
    }
    for (const auto& [u, v] : g.edges())
        out += "  " + detail::dot_quote(u) + " -- " + detail::dot_quote(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace raag
