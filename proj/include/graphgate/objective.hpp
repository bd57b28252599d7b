// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphgate/gates.hpp"
#include "graphgate/graph.hpp"
#include "graphgate/ket.hpp"
#include "graphgate/matchings.hpp"

namespace graphgate {

// |<t|psi>|^2 / (<psi|psi> <t|t>), clamped into [0,1]. Invariant under global
// phase and positive scaling of either argument. Throws ZeroStateError when
// psi has zero norm.
double fidelity(const Ket& psi, const Ket& target);

// |<t_normalized|psi>|^2 without normalizing psi: rewards high success
// amplitude, not just purity. Zero psi gives 0.
double count_rate(const Ket& psi, const Ket& target);

struct TruthRow {
    std::vector<int> input;
    std::vector<int> expected;
    // dominant clean outcome: set only when one basis term carries >= 1-tol of
    // the conditional probability and the ancillas sit on the heralding modes
    std::optional<std::vector<int>> observed;
    double conditional_fidelity = 0.0;
    bool supported = true; // false when no term matches this input
    bool pass = false;
};

struct VerificationReport {
    double fidelity = 0.0;
    double count_rate = 0.0;
    std::vector<TruthRow> truth_table;
    bool feed_forwardable = false;
    int ancilla_count = 0;
    Complex global_phase{1.0, 0.0}; // phase of <t|psi>, diagnostics only
    double amplitude_spread = 1.0;  // 1 - min/max |amp| over the target support
    double tolerance = 0.0;

    bool all_rows_pass() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

// Full check of a graph against a gate: total fidelity, per-input conditional
// truth table (conditioned on the input slots, compared up to global phase),
// heralding flag, ancilla count. feed_forwardable demands the FULL state
// (inputs, outputs and ancillas) match, not just the post-selected block.
VerificationReport verify_gate(const Graph& g, const GateSpec& spec, double tol = 1e-6);

enum class LossKind { Fidelity, CountRate };

// Repeated evaluation on a fixed topology. Gradients are packed as complex
// numbers: real part = d loss / d Re(w), imag part = d loss / d Im(w).
class LossEvaluator {
public:
    LossEvaluator(const Graph& g, const TargetState& target, LossKind kind);

    size_t edge_count() const { return table_.edge_count(); }
    size_t matching_count() const { return table_.matching_count(); }

    double loss(const std::vector<Complex>& w) const;
    double loss_and_gradient(const std::vector<Complex>& w, std::vector<Complex>& grad) const;

private:
    MatchingTable table_;
    std::vector<Complex> target_; // dense, normalized
    LossKind kind_;
    mutable std::vector<Complex> psi_, t_ov_, s_ov_;
};

// loss = 1 - fidelity, or 1 - min(count_rate, 1)
double loss(const Graph& g, const TargetState& target, LossKind kind);
std::vector<Complex> loss_gradient(const Graph& g, const TargetState& target, LossKind kind);

} // namespace graphgate
