#pragma once

// Graphviz DOT rendering of a mixed circulant graph. Skew connections
// become one directed edge per vertex; each symmetric connection pair
// {c, n-c} becomes one undirected edge (dir=none) per vertex pair,
// emitted once with the smaller endpoint first.

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "circulant/symbol_set.hpp"

namespace circulant {

inline std::string export_dot(const SymbolSet& c) {
    const std::int64_t n = c.n();
    const SymbolSplit parts = split(c);

    std::ostringstream os;
    os << "digraph circulant {\n";
    for (std::int64_t v = 0; v < n; ++v) os << "  " << v << ";\n";

    for (std::int64_t k : parts.skew.elements()) {
        for (std::int64_t a = 0; a < n; ++a) {
            os << "  " << a << " -> " << (a + k) % n << ";\n";
        }
    }

    std::set<std::pair<std::int64_t, std::int64_t>> undirected;
    for (std::int64_t k : parts.symmetric.elements()) {
        for (std::int64_t a = 0; a < n; ++a) {
            const std::int64_t b = (a + k) % n;
            undirected.emplace(std::min(a, b), std::max(a, b));
        }
    }
    for (const auto& [u, v] : undirected) {
        os << "  " << u << " -> " << v << " [dir=none];\n";
    }

    os << "}\n";
    return os.str();
}

}  // namespace circulant
