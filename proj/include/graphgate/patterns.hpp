// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graphgate/graph.hpp"

namespace graphgate {

// Closed-form reference constructions, all unit weights. Each verifies at
// fidelity 1 against its gate and doubles as a regression anchor for the
// search. Vertex convention: inputs first, then outputs, then ancillas.

// photon exchange: input A wired to output B and vice versa, one edge per mode
Graph crossing_swap_graph(int d);

// identity channel through two heralded ancillas; no direct input-output edge
Graph teleport_identity_graph();

// two crossed identity channels realizing the photon swap end to end
Graph double_teleport_swap_graph();

// qubit controlled-add with two ancillas
Graph cnot22_graph();

// doubly-controlled qubit add with four ancillas
Graph toffoli2_graph();

// controlled exchange of two target qubits with four ancillas
Graph fredkin2_graph();

} // namespace graphgate
