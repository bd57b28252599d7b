// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "graphgate/gates.hpp"
#include "graphgate/graph.hpp"
#include "graphgate/objective.hpp"

namespace graphgate {

struct OptimizerConfig;

// Replacement inner optimizer: minimize over the weight vector in place,
// return the final loss. Must be deterministic for reproducible runs.
using OptimizerHook =
    std::function<double(const LossEvaluator&, std::vector<Complex>&, const OptimizerConfig&)>;

struct OptimizerConfig {
    LossKind loss_kind = LossKind::Fidelity;
    double search_threshold = 1e-3; // a restart "found something" below this
    double polish_threshold = 1e-6; // final solutions are driven below this
    int max_restarts = 50;
    int steps_per_optimize = 1500;
    double init_scale = 1.0;
    bool real_only = false;
    std::uint64_t seed = 1;
    bool snap_weights = false;
    std::vector<std::pair<int, int>> forbidden_pairs; // vertex pairs kept edge-free
    OptimizerHook hook; // empty: built-in adaptive gradient descent
};

struct TracePoint {
    int edge_count = 0;
    double loss = 1.0;
    std::uint64_t restart = 0; // restart (or fresh-draw stream) the weights came from
    std::uint64_t seed = 0;
};

// "edge_count,loss,restart,seed" lines, one per accepted search state
std::string trace_csv(const std::vector<TracePoint>& trace);

struct DiscoveryResult {
    Graph graph;
    std::vector<TracePoint> loss_trace;
    double fidelity = 0.0;
    std::uint64_t seed = 0;
    VerificationReport report; // recomputed from the final graph
};

// Complete colored graph over the gate's vertices: k inputs, k outputs,
// ancilla_count dim-2 ancillas heralded on mode 0, every vertex pair except
// the forbidden ones, every color pair per edge, weights 0. Input-input and
// output-output pairs are included; pruning decides what survives.
Graph seed_topology(const GateSpec& spec, int ancilla_count);
Graph seed_topology(const GateSpec& spec, int ancilla_count,
                    const std::vector<std::pair<int, int>>& forbidden_pairs);

// One optimization run: weights drawn uniformly from [-init_scale, init_scale]
// (imaginary parts forced to 0 when real_only) out of the seeded stream, then
// adaptive gradient descent (step halves on an increase, grows 1.1x on a
// decrease) until steps_per_optimize trials or gradient norm < 1e-9.
std::pair<Graph, double> optimize_weights(const Graph& g, const TargetState& target,
                                          const OptimizerConfig& cfg);

// Topological pruning: repeatedly drop the smallest-|w| unprotected edge
// (ties to canonical edge order), re-optimize warm plus one fresh restart,
// keep the removal only while loss stays under search_threshold, protect the
// edge otherwise; stops when every remaining edge is protected, then polishes
// and optionally snaps weights to the interferometric grid
// {0, +-1, +-1/sqrt2, +-1/2, +-i, +-i/sqrt2, +-i/2}.
DiscoveryResult prune_topology(const Graph& g, const GateSpec& spec, const OptimizerConfig& cfg);

// seed_topology, then restarts of optimize_weights on decorrelated substreams
// until one lands under search_threshold, then prune_topology. Reproducible
// from (spec, ancilla_count, cfg.seed); throws DiscoveryError with the best
// loss when every restart misses.
DiscoveryResult discover(const GateSpec& spec, int ancilla_count, const OptimizerConfig& cfg);

// nearest grid value by complex distance (first wins on ties)
Complex snap_weight(Complex w);

// Per-vertex magnitude rescaling (a gauge move: every perfect matching covers
// each vertex once, so fidelity is unchanged) that least-squares-aligns
// |w| with the snap grid magnitudes.
std::vector<Complex> gauge_align(const Graph& g, const std::vector<Complex>& w);

} // namespace graphgate
