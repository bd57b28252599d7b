// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "graphgate/graph.hpp"

namespace graphgate {

enum class BlueprintStyle { PathIdentity, PathErasure };

// one photon-pair source per edge
struct SourceEntry {
    int source_id; // canonical edge index
    int path_a;
    int path_b;
    Mode mode_a;
    Mode mode_b;
    double amplitude; // |w|
    double phase_deg; // arg(w) in [0, 360)
};

// one per vertex touched by more than one source
struct OverlapNote {
    int vertex;
    int degree;
    std::string stage; // overlap (path identity) or erasure stage wording
};

struct DetectorEntry {
    int vertex;
    Mode heralding_mode; // ancillas herald a fixed mode; outputs use -1
    bool ancilla;        // false: output detector for verification runs
};

struct BlueprintDoc {
    BlueprintStyle style;
    std::vector<SourceEntry> sources;
    std::vector<OverlapNote> overlaps;
    std::vector<DetectorEntry> detectors;

    std::string to_text() const;
    nlohmann::json to_json() const;
};

// Descriptive translation of a graph into bench language: sources, path
// overlaps (or erasure stages), detectors. No interferometric simulation.
BlueprintDoc graph_to_blueprint(const Graph& g, BlueprintStyle style);

// Deterministic DOT document; stable node and edge order, mode colors and
// weight magnitude/phase in the attributes.
std::string export_dot(const Graph& g);

} // namespace graphgate
