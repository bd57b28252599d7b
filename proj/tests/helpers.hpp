// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "graphgate/graph.hpp"
#include "graphgate/ket.hpp"
#include "graphgate/rng.hpp"

namespace graphgate::testing {

// Random valid graph for oracle property tests: even or odd vertex count,
// random dims, random colored edges with complex weights. All vertices are
// ancillas (roles are irrelevant to matchings and states).
inline Graph random_graph(SplitMix64& rng, int max_vertices = 8, int max_edges = 20,
                          bool force_even = false) {
    Graph g;
    int n = 2 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_vertices - 1));
    if (force_even && n % 2 != 0) n += n < max_vertices ? 1 : -1;
    for (int v = 0; v < n; ++v) {
        int dim = 2 + static_cast<int>(rng.next() % 3);
        g.vertices.push_back({v, VertexRole::ancilla(0), dim});
    }

    const int want = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_edges));
    std::set<std::tuple<int, int, Mode, Mode>> seen;
    for (int tries = 0; tries < want * 8 && static_cast<int>(g.edges.size()) < want; ++tries) {
        int a = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        int b = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        Mode ma = static_cast<Mode>(rng.next() % static_cast<std::uint64_t>(g.vertices[a].dim));
        Mode mb = static_cast<Mode>(rng.next() % static_cast<std::uint64_t>(g.vertices[b].dim));
        if (!seen.insert({a, b, ma, mb}).second) continue;
        Complex w{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        g.edges.push_back({a, b, ma, mb, w});
    }
    return g;
}

// 2k-vertex all-ancilla graph used by enumeration tests: complete, one color
inline Graph complete_single_color(int n) {
    Graph g;
    for (int v = 0; v < n; ++v) g.vertices.push_back({v, VertexRole::ancilla(0), 2});
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) g.edges.push_back({a, b, 0, 0, Complex{1.0, 0.0}});
    }
    return g;
}

} // namespace graphgate::testing
