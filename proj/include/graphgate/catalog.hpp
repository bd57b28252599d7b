// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "graphgate/discovery.hpp"
#include "graphgate/gates.hpp"
#include "graphgate/graph.hpp"
#include "graphgate/objective.hpp"

namespace graphgate {

struct FixtureExpectation {
    double fidelity = 1.0;
    int ancilla_count = 0;
};

struct Fixture {
    std::string id;
    GateSpec spec;
    Graph graph;
    FixtureExpectation expected;
    nlohmann::json provenance;
    VerificationReport report; // from load-time verification
};

// The pinned regression anchors, in canonical order.
std::vector<std::string> list_fixtures();

// GRAPHGATE_FIXTURE_DIR env var, else the build-time fixtures directory.
std::string default_fixture_dir();

// Reads fixtures/<id>.json, re-runs verification at 1e-9 and fails loudly on
// drift (fidelity, ancilla count, or a missing teleportation witness).
Fixture load_fixture(const std::string& id);
Fixture load_fixture(const std::string& id, const std::string& dir);

// ids whose regeneration takes hours and sits outside the default test tier
bool fixture_is_long_running(const std::string& id);

// fixtures whose channel structure forbids direct input-output edges
bool fixture_has_teleport_witness(const std::string& id);

// The search configuration pinned for an id's regeneration recipe.
OptimizerConfig fixture_recipe(const std::string& id);

enum class RegenStatus { Ok, LongRunning, Failed };

struct RegenReport {
    RegenStatus status = RegenStatus::Failed;
    std::string message;
    double best_loss = 1.0;
    DiscoveryResult result; // populated when status == Ok
};

// Re-runs the pinned recipe and compares against the stored fixture: equal
// ancilla count, edge count at most stored + 2, fidelity at 1e-9. Graph
// isomorphism is deliberately not required. With the default budget,
// long-running ids return LongRunning untried.
RegenReport regenerate_fixture(const std::string& id);
RegenReport regenerate_fixture(const std::string& id, const OptimizerConfig& cfg,
                               const std::string& dir);

// Maintenance path behind the checked-in fixtures: verifies the graph,
// assembles the metadata block and writes fixtures/<id>.json.
Fixture pin_fixture(const std::string& id, const Graph& g, const std::string& dir,
                    nlohmann::json provenance);

} // namespace graphgate
