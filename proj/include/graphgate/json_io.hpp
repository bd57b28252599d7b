// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "graphgate/graph.hpp"

namespace graphgate {

// Document layout:
//   {"vertices":[{"id":0,"role":"input","position":0,"dim":2},
//                {"id":4,"role":"ancilla","fixed_mode":0,"dim":2}, ...],
//    "edges":[{"a":0,"b":4,"mode_a":0,"mode_b":0,"weight":[1.0,0.0]}, ...],
//    "meta":{...free-form...}}
// Unknown top-level keys are ignored on read; unknown keys inside vertex or
// edge objects are schema errors. Weights are [re, im] pairs.

nlohmann::json graph_to_json_value(const Graph& g);

// Canonical text: sorted keys, 2-space indent, trailing newline. Writing and
// re-reading a graph is the identity, including edge order.
std::string graph_to_json(const Graph& g);

Graph graph_from_json_value(const nlohmann::json& doc);
Graph graph_from_json(const std::string& text);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

} // namespace graphgate
