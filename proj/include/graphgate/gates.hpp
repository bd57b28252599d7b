// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "graphgate/graph.hpp"
#include "graphgate/ket.hpp"

namespace graphgate {

// Basis-permutation gate: a total bijective map from input basis tuples to
// output basis tuples, plus the heralded modes of any ancilla photons.
struct GateSpec {
    std::string name;
    std::vector<int> input_dims;
    std::vector<int> output_dims; // equals input_dims elementwise
    std::vector<std::vector<int>> truth; // indexed by mixed-radix input code
    std::vector<Mode> ancilla_modes; // fixed heralding mode per ancilla

    int photon_count() const { return static_cast<int>(input_dims.size()); }
    int basis_size() const; // product of input dims
    bool is_bijection() const;
};

// Built-in constructors.
GateSpec swap_spec(int d);                 // |a,b> -> |b,a>
GateSpec cx_spec(int d_control, int d_target); // |c,t> -> |c,(t+c) mod d_target>
GateSpec ccx_spec(int d_target);           // qubit controls, |c1,c2,t> -> |c1,c2,(t + (c1 and c2)) mod d>
GateSpec cswap_spec();                     // |c,a,b> -> c == 1 ? |c,b,a> : |c,a,b>
GateSpec teleport_spec(int d);             // single-photon identity channel

// Text form used by the command line: "swap:2", "cx:2,3", "ccx:3", "cswap",
// "teleport:2". Throws ParseError naming the offending token.
GateSpec parse_gate_spec(const std::string& text);

// mixed-radix tuple coding, slot 0 most significant
int tuple_code(const std::vector<int>& dims, const std::vector<int>& tuple);
std::vector<int> tuple_decode(const std::vector<int>& dims, int code);

// truth(x); throws PreconditionError on out-of-range tuple entries
std::vector<int> apply_gate(const GateSpec& spec, const std::vector<int>& x);

// second after first; dims must match elementwise
GateSpec compose_specs(const GateSpec& first, const GateSpec& second);

// independent gates acting on disjoint photon groups, dims concatenated
GateSpec tensor_specs(const GateSpec& lhs, const GateSpec& rhs);

// Which vertex holds which tuple slot.
struct VertexLayout {
    std::vector<int> input_ids;   // slot i -> vertex id
    std::vector<int> output_ids;
    std::vector<int> ancilla_ids;
};

// inputs 0..k-1, outputs k..2k-1, ancillas 2k..
VertexLayout standard_layout(const GateSpec& spec);

// derived from vertex roles; throws PreconditionError when input/output
// counts or dims disagree with the spec
VertexLayout layout_for_graph(const GateSpec& spec, const Graph& g);

// Gate-as-state target: (1/sqrt(D)) sum_x |x>|truth(x)>|ancilla modes>,
// D = product of input dims. Norm is exactly 1.
struct TargetState {
    Ket ket;
    VertexLayout layout;
};

TargetState build_target(const GateSpec& spec); // standard layout, dim-2 ancillas
TargetState build_target(const GateSpec& spec, const Graph& g); // layout and dims from roles

} // namespace graphgate
