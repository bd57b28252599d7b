// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace graphgate {

using Complex = std::complex<double>;

// Photonic mode color, valid range [0, dim) of the vertex it sits on.
using Mode = int;

enum class RoleKind { Input, Output, Ancilla };

struct VertexRole {
    RoleKind kind = RoleKind::Ancilla;
    int position = -1;    // Input/Output: pairing slot, input i maps to output i
    Mode fixed_mode = -1; // Ancilla: heralded detection mode

    static VertexRole input(int position) { return {RoleKind::Input, position, -1}; }
    static VertexRole output(int position) { return {RoleKind::Output, position, -1}; }
    static VertexRole ancilla(Mode fixed_mode) { return {RoleKind::Ancilla, -1, fixed_mode}; }

    bool operator==(const VertexRole&) const = default;
};

struct Vertex {
    int id = 0;
    VertexRole role;
    int dim = 2; // local dimension, >= 2

    bool operator==(const Vertex&) const = default;
};

// Colored weighted edge. Canonical orientation is a < b; bi-colored edges
// (mode_a != mode_b) are allowed and required for mode-flipping pair sources.
struct Edge {
    int a = 0;
    int b = 0;
    Mode mode_a = 0;
    Mode mode_b = 0;
    Complex weight{0.0, 0.0};

    std::tuple<int, int, Mode, Mode> key() const { return {a, b, mode_a, mode_b}; }

    bool operator==(const Edge&) const = default;
};

struct Graph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    nlohmann::json meta = nlohmann::json::object(); // free-form, serialization only

    int dim(int vertex_id) const { return vertices[static_cast<size_t>(vertex_id)].dim; }

    bool operator==(const Graph&) const = default;
};

// Orders endpoints ascending, swapping modes consistently. Throws
// ValidationError on self-loops.
Edge canonicalize_edge(int a, int b, Mode mode_a, Mode mode_b, Complex weight);

enum class Severity { Error, Warning };

struct Violation {
    Severity severity;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const; // no error-level entries (warnings allowed)
    std::string to_string() const;
};

// Total: reports every violated invariant, never throws on structurally
// well-formed input. Odd vertex count is a warning (the state is just zero).
ValidationReport validate_graph(const Graph& g);

// Throws ValidationError listing all error-level violations.
void require_valid(const Graph& g);

// Role queries. Input/output ids come back ordered by pairing position.
std::vector<int> input_ids(const Graph& g);
std::vector<int> output_ids(const Graph& g);
std::vector<int> ancilla_ids(const Graph& g);
std::vector<int> vertex_dims(const Graph& g);

// True if any colored edge connects u and v.
bool has_edge_between(const Graph& g, int u, int v);

} // namespace graphgate
