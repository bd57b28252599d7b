// SPDX-License-Identifier: Apache-2.0
#include "graphgate/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "graphgate/errors.hpp"
#include "graphgate/json_io.hpp"
#include "graphgate/patterns.hpp"

#ifndef GRAPHGATE_FIXTURE_DIR
#define GRAPHGATE_FIXTURE_DIR "fixtures"
#endif

namespace graphgate {

namespace {

constexpr double kFixtureTol = 1e-9;

struct Recipe {
    const char* id;
    const char* gate;
    int ancillas;
    std::vector<std::pair<int, int>> forbid;
    std::uint64_t seed;
    int restarts;
    int steps;
    bool real_only;
    bool snap;
    bool long_running;
    bool witness;      // channel fixtures must have no direct input-output edges
    Graph (*builder)(); // analytic construction instead of a search
};

// Pinned regeneration recipes. Seeds were chosen by running the recipe and
// keeping the first seed that converged; they are load-bearing for the
// determinism tests, do not bump them casually.
const std::vector<Recipe>& recipes() {
    static const std::vector<Recipe> table = {
        {"swap2-crossing", "swap:2", 0, {}, 1, 40, 1500, true, true, false, false, nullptr},
        {"teleport2-pi", "teleport:2", 2, {{0, 1}}, 3, 40, 1500, true, true, false, true, nullptr},
        {"swap2-double-teleport", "swap:2", 4, {}, 0, 0, 0, true, false, false, true,
         &double_teleport_swap_graph},
        {"cx-2-2", "cx:2,2", 2, {}, 7, 50, 1500, false, true, false, false, nullptr},
        {"cx-2-3", "cx:2,3", 2, {}, 51, 400, 2500, false, false, true, false, nullptr},
        {"cx-2-4", "cx:2,4", 2, {}, 52, 400, 2500, false, false, true, false, nullptr},
        {"cx-3-3", "cx:3,3", 4, {}, 11, 600, 2500, true, false, true, false, nullptr},
        {"ccx-2", "ccx:2", 4, {}, 53, 400, 2500, true, false, true, false, nullptr},
        {"ccx-3", "ccx:3", 4, {}, 31, 600, 2500, true, false, true, false, nullptr},
        {"cswap-2", "cswap", 4, {}, 54, 400, 2500, true, false, true, false, nullptr},
    };
    return table;
}

const Recipe& recipe_for(const std::string& id) {
    for (const auto& r : recipes()) {
        if (id == r.id) return r;
    }
    throw FixtureError("unknown fixture id: " + id);
}

bool has_direct_io_edge(const Graph& g) {
    const auto ins = input_ids(g);
    const auto outs = output_ids(g);
    for (int i : ins) {
        for (int o : outs) {
            if (has_edge_between(g, i, o)) return true;
        }
    }
    return false;
}

std::string fixture_path(const std::string& dir, const std::string& id) {
    return dir + "/" + id + ".json";
}

OptimizerConfig config_from(const Recipe& r) {
    OptimizerConfig cfg;
    cfg.seed = r.seed;
    cfg.max_restarts = r.restarts;
    cfg.steps_per_optimize = r.steps;
    cfg.real_only = r.real_only;
    cfg.snap_weights = r.snap;
    cfg.forbidden_pairs = r.forbid;
    return cfg;
}

} // namespace

std::vector<std::string> list_fixtures() {
    std::vector<std::string> ids;
    ids.reserve(recipes().size());
    for (const auto& r : recipes()) ids.push_back(r.id);
    return ids;
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("GRAPHGATE_FIXTURE_DIR")) {
        if (*env != '\0') return env;
    }
    return GRAPHGATE_FIXTURE_DIR;
}

bool fixture_is_long_running(const std::string& id) { return recipe_for(id).long_running; }

bool fixture_has_teleport_witness(const std::string& id) { return recipe_for(id).witness; }

OptimizerConfig fixture_recipe(const std::string& id) { return config_from(recipe_for(id)); }

Fixture load_fixture(const std::string& id) { return load_fixture(id, default_fixture_dir()); }

Fixture load_fixture(const std::string& id, const std::string& dir) {
    const Recipe& rec = recipe_for(id);
    Graph g = load_graph_file(fixture_path(dir, id));

    if (!g.meta.is_object() || !g.meta.contains("fixture") || !g.meta["fixture"].is_object()) {
        throw FixtureError(id + ": missing meta.fixture block");
    }
    const nlohmann::json& fx = g.meta["fixture"];
    for (const char* key : {"id", "gate", "expected_fidelity", "ancilla_count"}) {
        if (!fx.contains(key)) {
            throw FixtureError(id + ": meta.fixture lacks \"" + key + "\"");
        }
    }
    if (fx["id"].get<std::string>() != id) {
        throw FixtureError(id + ": file claims to be " + fx["id"].get<std::string>());
    }
    const std::string gate = fx["gate"].get<std::string>();
    if (gate != rec.gate) {
        throw FixtureError(id + ": pinned gate is " + std::string(rec.gate) + ", file says " + gate);
    }

    Fixture f;
    f.id = id;
    f.spec = parse_gate_spec(gate);
    f.expected.fidelity = fx["expected_fidelity"].get<double>();
    f.expected.ancilla_count = fx["ancilla_count"].get<int>();
    f.provenance = fx.contains("provenance") ? fx["provenance"] : nlohmann::json::object();
    f.report = verify_gate(g, f.spec, kFixtureTol);

    if (f.report.ancilla_count != f.expected.ancilla_count) {
        throw FixtureError(id + ": ancilla count drifted from " +
                           std::to_string(f.expected.ancilla_count) + " to " +
                           std::to_string(f.report.ancilla_count));
    }
    if (f.report.fidelity < 1.0 - kFixtureTol) {
        throw FixtureError(id + ": fidelity drifted to " + std::to_string(f.report.fidelity));
    }
    if (std::abs(f.report.fidelity - f.expected.fidelity) > kFixtureTol) {
        throw FixtureError(id + ": fidelity " + std::to_string(f.report.fidelity) +
                           " disagrees with the pinned value");
    }
    if (rec.witness && has_direct_io_edge(g)) {
        throw FixtureError(id + ": teleportation witness violated, direct input-output edge");
    }
    f.graph = std::move(g);
    return f;
}

RegenReport regenerate_fixture(const std::string& id) {
    const Recipe& rec = recipe_for(id);
    if (rec.long_running) {
        RegenReport rep;
        rep.status = RegenStatus::LongRunning;
        rep.message = id + ": regeneration runs for hours, invoke it explicitly with a budget";
        return rep;
    }
    return regenerate_fixture(id, config_from(rec), default_fixture_dir());
}

RegenReport regenerate_fixture(const std::string& id, const OptimizerConfig& cfg,
                               const std::string& dir) {
    const Recipe& rec = recipe_for(id);
    const Fixture stored = load_fixture(id, dir);
    RegenReport rep;

    DiscoveryResult found;
    if (rec.builder != nullptr) {
        found.graph = rec.builder();
        found.seed = cfg.seed;
        found.report = verify_gate(found.graph, stored.spec, cfg.polish_threshold);
        found.fidelity = found.report.fidelity;
    } else {
        try {
            found = discover(stored.spec, rec.ancillas, cfg);
        } catch (const DiscoveryError& e) {
            rep.status = RegenStatus::Failed;
            rep.best_loss = e.best_loss;
            rep.message = id + ": " + e.what();
            return rep;
        }
    }

    const int found_anc = static_cast<int>(ancilla_ids(found.graph).size());
    const std::size_t stored_edges = stored.graph.edges.size();
    const std::size_t found_edges = found.graph.edges.size();
    rep.best_loss = 1.0 - found.fidelity;

    if (found_anc != stored.expected.ancilla_count) {
        rep.status = RegenStatus::Failed;
        rep.message = id + ": found " + std::to_string(found_anc) + " ancillas, pinned " +
                      std::to_string(stored.expected.ancilla_count);
        return rep;
    }
    if (found.fidelity < 1.0 - kFixtureTol) {
        rep.status = RegenStatus::Failed;
        rep.message = id + ": regenerated fidelity " + std::to_string(found.fidelity) +
                      " misses the 1e-9 bar";
        return rep;
    }
    if (found_edges > stored_edges + 2) {
        rep.status = RegenStatus::Failed;
        rep.message = id + ": regenerated topology has " + std::to_string(found_edges) +
                      " edges, pinned " + std::to_string(stored_edges);
        return rep;
    }
    if (rec.witness && has_direct_io_edge(found.graph)) {
        rep.status = RegenStatus::Failed;
        rep.message = id + ": regenerated graph violates the teleportation witness";
        return rep;
    }

    rep.status = RegenStatus::Ok;
    rep.message = id + ": reproduced with " + std::to_string(found_edges) + " edges at fidelity " +
                  std::to_string(found.fidelity);
    rep.result = std::move(found);
    return rep;
}

Fixture pin_fixture(const std::string& id, const Graph& g, const std::string& dir,
                    nlohmann::json provenance) {
    const Recipe& rec = recipe_for(id);
    GateSpec spec = parse_gate_spec(rec.gate);
    VerificationReport report = verify_gate(g, spec, kFixtureTol);
    if (report.fidelity < 1.0 - kFixtureTol) {
        throw FixtureError(id + ": refusing to pin at fidelity " +
                           std::to_string(report.fidelity));
    }
    if (rec.ancillas != report.ancilla_count) {
        throw FixtureError(id + ": recipe wants " + std::to_string(rec.ancillas) +
                           " ancillas, graph has " + std::to_string(report.ancilla_count));
    }
    if (rec.witness && has_direct_io_edge(g)) {
        throw FixtureError(id + ": direct input-output edge breaks the teleportation witness");
    }

    Graph pinned = g;
    if (!pinned.meta.is_object()) pinned.meta = nlohmann::json::object();
    pinned.meta.erase("discovery");
    pinned.meta["fixture"] = {
        {"id", id},
        {"gate", rec.gate},
        {"expected_fidelity", report.fidelity},
        {"ancilla_count", report.ancilla_count},
        {"provenance", provenance.is_null() ? nlohmann::json::object() : provenance},
    };
    save_graph_file(pinned, fixture_path(dir, id));

    Fixture f;
    f.id = id;
    f.spec = std::move(spec);
    f.graph = std::move(pinned);
    f.expected.fidelity = report.fidelity;
    f.expected.ancilla_count = report.ancilla_count;
    f.provenance = std::move(provenance);
    f.report = std::move(report);
    return f;
}

} // namespace graphgate
