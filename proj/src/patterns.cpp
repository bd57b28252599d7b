// SPDX-License-Identifier: Apache-2.0
#include "graphgate/patterns.hpp"

namespace graphgate {

namespace {

Graph skeleton(const std::vector<int>& io_dims, int ancillas) {
    Graph g;
    const int k = static_cast<int>(io_dims.size());
    for (int i = 0; i < k; ++i) {
        g.vertices.push_back({i, VertexRole::input(i), io_dims[static_cast<size_t>(i)]});
    }
    for (int i = 0; i < k; ++i) {
        g.vertices.push_back({k + i, VertexRole::output(i), io_dims[static_cast<size_t>(i)]});
    }
    for (int j = 0; j < ancillas; ++j) {
        g.vertices.push_back({2 * k + j, VertexRole::ancilla(0), 2});
    }
    return g;
}

void unit_edges(Graph& g, const std::vector<std::tuple<int, int, Mode, Mode>>& keys) {
    for (auto [a, b, ma, mb] : keys) {
        g.edges.push_back({a, b, ma, mb, Complex{1.0, 0.0}});
    }
}

} // namespace

Graph crossing_swap_graph(int d) {
    // in A=0, in B=1, out A=2, out B=3
    Graph g = skeleton({d, d}, 0);
    std::vector<std::tuple<int, int, Mode, Mode>> keys;
    for (Mode m = 0; m < d; ++m) keys.emplace_back(0, 3, m, m); // A -> out B
    for (Mode m = 0; m < d; ++m) keys.emplace_back(1, 2, m, m); // B -> out A
    unit_edges(g, keys);
    return g;
}

Graph teleport_identity_graph() {
    // in=0, out=1, ancillas 2,3; the two heralds absorb opposite halves, so
    // only one pairing survives per input mode and no in-out edge is needed
    Graph g = skeleton({2}, 2);
    unit_edges(g, {
                      {0, 2, 0, 0},
                      {1, 3, 0, 0},
                      {0, 3, 1, 0},
                      {1, 2, 1, 0},
                  });
    return g;
}

Graph double_teleport_swap_graph() {
    // in A=0, in B=1, out A=2, out B=3, ancillas 4..7; channel A->outB uses
    // heralds 4,5 and channel B->outA uses heralds 6,7
    Graph g = skeleton({2, 2}, 4);
    unit_edges(g, {
                      {0, 4, 0, 0},
                      {3, 5, 0, 0},
                      {0, 5, 1, 0},
                      {3, 4, 1, 0},
                      {1, 6, 0, 0},
                      {2, 7, 0, 0},
                      {1, 7, 1, 0},
                      {2, 6, 1, 0},
                  });
    return g;
}

Graph cnot22_graph() {
    // control in=0, target in=1, control out=2, target out=3, ancillas 4,5.
    // Control 0 heralds through both ancillas and leaves the target channel
    // alone; control 1 passes straight through and flips which target pairing
    // can complete the matching.
    Graph g = skeleton({2, 2}, 2);
    unit_edges(g, {
                      {0, 4, 0, 0},
                      {2, 5, 0, 0},
                      {0, 2, 1, 1},
                      {1, 3, 0, 0},
                      {1, 3, 1, 1},
                      {1, 4, 0, 0},
                      {3, 5, 1, 0},
                      {1, 5, 1, 0},
                      {3, 4, 0, 0},
                  });
    return g;
}

Graph toffoli2_graph() {
    // controls in 0,1, target in 2, outputs 3,4,5, ancillas 6..9
    Graph g = skeleton({2, 2, 2}, 4);
    unit_edges(g, {
                      {0, 3, 1, 1},
                      {1, 4, 1, 1},
                      {0, 6, 0, 0},
                      {3, 7, 0, 0},
                      {3, 8, 0, 0},
                      {1, 8, 0, 0},
                      {4, 9, 0, 0},
                      {1, 6, 0, 0},
                      {4, 8, 0, 0},
                      {2, 5, 0, 0},
                      {2, 5, 1, 1},
                      {2, 6, 0, 0},
                      {5, 8, 1, 0},
                      {2, 8, 1, 0},
                      {5, 6, 0, 0},
                      {7, 9, 0, 0},
                  });
    return g;
}

Graph fredkin2_graph() {
    // control in=0, targets in 1,2, outputs 3,4,5, ancillas 6..9
    Graph g = skeleton({2, 2, 2}, 4);
    unit_edges(g, {
                      {0, 3, 1, 1},
                      {0, 8, 0, 0},
                      {3, 9, 0, 0},
                      {1, 4, 0, 0},
                      {1, 4, 1, 1},
                      {2, 5, 0, 0},
                      {2, 5, 1, 1},
                      {1, 6, 0, 0},
                      {5, 7, 0, 0},
                      {1, 7, 1, 0},
                      {5, 6, 1, 0},
                      {2, 8, 0, 0},
                      {4, 9, 0, 0},
                      {2, 9, 1, 0},
                      {4, 8, 1, 0},
                      {6, 7, 0, 0},
                  });
    return g;
}

} // namespace graphgate
