// SPDX-License-Identifier: Apache-2.0
#include "graphgate/objective.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graphgate/errors.hpp"

namespace graphgate {

double fidelity(const Ket& psi, const Ket& target) {
    const double pn = psi.norm2();
    if (pn <= 0.0) throw ZeroStateError("fidelity of a zero state is undefined");
    const double tn = target.norm2();
    if (tn <= 0.0) throw ZeroStateError("fidelity against a zero target is undefined");
    const double f = std::norm(target.overlap(psi)) / (pn * tn);
    return std::clamp(f, 0.0, 1.0);
}

double count_rate(const Ket& psi, const Ket& target) {
    const double tn = target.norm2();
    if (tn <= 0.0) throw ZeroStateError("count rate against a zero target is undefined");
    return std::norm(target.overlap(psi)) / tn;
}

bool VerificationReport::all_rows_pass() const {
    return std::all_of(truth_table.begin(), truth_table.end(),
                       [](const TruthRow& r) { return r.pass; });
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json doc;
    doc["fidelity"] = fidelity;
    doc["count_rate"] = count_rate;
    doc["feed_forwardable"] = feed_forwardable;
    doc["ancilla_count"] = ancilla_count;
    doc["global_phase"] = nlohmann::json::array({global_phase.real(), global_phase.imag()});
    doc["amplitude_spread"] = amplitude_spread;
    doc["tolerance"] = tolerance;
    nlohmann::json rows = nlohmann::json::array();
    for (const TruthRow& r : truth_table) {
        nlohmann::json jr;
        jr["input"] = r.input;
        jr["expected"] = r.expected;
        if (r.observed) {
            jr["observed"] = *r.observed;
        } else {
            jr["observed"] = r.supported ? "superposed" : "unsupported";
        }
        jr["conditional_fidelity"] = r.conditional_fidelity;
        jr["pass"] = r.pass;
        rows.push_back(std::move(jr));
    }
    doc["truth_table"] = std::move(rows);
    return doc;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os.precision(12);
    os << "fidelity          " << fidelity << "\n";
    os << "count rate        " << count_rate << "\n";
    os << "feed-forwardable  " << (feed_forwardable ? "yes" : "no") << "\n";
    os << "ancillas          " << ancilla_count << "\n";
    os << "amplitude spread  " << amplitude_spread << "\n";
    os << "truth table:\n";
    auto tuple_str = [](const std::vector<int>& t) {
        std::string s = "(";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(t[i]);
        }
        return s + ")";
    };
    for (const TruthRow& r : truth_table) {
        os << "  " << tuple_str(r.input) << " -> " << tuple_str(r.expected);
        if (r.observed) {
            os << "  got " << tuple_str(*r.observed);
        } else {
            os << "  got " << (r.supported ? "superposed" : "unsupported");
        }
        os << "  cond fid " << r.conditional_fidelity << (r.pass ? "  pass" : "  FAIL") << "\n";
    }
    return os.str();
}

VerificationReport verify_gate(const Graph& g, const GateSpec& spec, double tol) {
    require_valid(g);
    TargetState target = build_target(spec, g); // PreconditionError on arity mismatch
    const Ket psi = graph_state(g);

    VerificationReport rep;
    rep.tolerance = tol;
    rep.ancilla_count = static_cast<int>(target.layout.ancilla_ids.size());
    rep.fidelity = fidelity(psi, target.ket); // ZeroStateError for unmatchable graphs
    rep.count_rate = count_rate(psi, target.ket);
    const Complex ov = target.ket.overlap(psi);
    rep.global_phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : Complex{1.0, 0.0};

    // spread of the amplitudes the state puts on the target's support
    double amin = 0.0, amax = 0.0;
    bool first = true;
    for (const auto& [modes, amp] : target.ket.terms()) {
        const double a = std::abs(psi.amplitude(modes));
        amin = first ? a : std::min(amin, a);
        amax = first ? a : std::max(amax, a);
        first = false;
    }
    rep.amplitude_spread = amax > 0.0 ? 1.0 - amin / amax : 1.0;

    std::vector<Mode> anc_modes;
    for (int id : target.layout.ancilla_ids) {
        anc_modes.push_back(g.vertices[static_cast<size_t>(id)].role.fixed_mode);
    }

    const int D = spec.basis_size();
    for (int code = 0; code < D; ++code) {
        TruthRow row;
        row.input = tuple_decode(spec.input_dims, code);
        row.expected = spec.truth[static_cast<size_t>(code)];

        // condition on the input slots
        double cond_norm = 0.0;
        double best_prob = 0.0;
        Ket::Assignment best_modes;
        for (const auto& [modes, amp] : psi.terms()) {
            bool match = true;
            for (size_t i = 0; i < target.layout.input_ids.size(); ++i) {
                if (modes[static_cast<size_t>(target.layout.input_ids[i])] != row.input[i]) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            const double p = std::norm(amp);
            cond_norm += p;
            if (p > best_prob) {
                best_prob = p;
                best_modes = modes;
            }
        }

        Ket::Assignment want(g.vertices.size(), 0);
        for (size_t i = 0; i < target.layout.input_ids.size(); ++i) {
            want[static_cast<size_t>(target.layout.input_ids[i])] = row.input[i];
        }
        for (size_t i = 0; i < target.layout.output_ids.size(); ++i) {
            want[static_cast<size_t>(target.layout.output_ids[i])] = row.expected[i];
        }
        for (size_t i = 0; i < target.layout.ancilla_ids.size(); ++i) {
            want[static_cast<size_t>(target.layout.ancilla_ids[i])] = anc_modes[i];
        }

        if (cond_norm <= 0.0) {
            row.supported = false;
            row.conditional_fidelity = 0.0;
            row.pass = false;
        } else {
            row.conditional_fidelity = std::clamp(std::norm(psi.amplitude(want)) / cond_norm, 0.0, 1.0);
            row.pass = row.conditional_fidelity >= 1.0 - tol;
            if (best_prob / cond_norm >= 1.0 - tol) {
                bool herald_ok = true;
                for (size_t i = 0; i < target.layout.ancilla_ids.size(); ++i) {
                    if (best_modes[static_cast<size_t>(target.layout.ancilla_ids[i])] != anc_modes[i]) {
                        herald_ok = false;
                        break;
                    }
                }
                if (herald_ok) {
                    std::vector<int> observed;
                    for (int id : target.layout.output_ids) {
                        observed.push_back(best_modes[static_cast<size_t>(id)]);
                    }
                    row.observed = std::move(observed);
                }
            }
        }
        rep.truth_table.push_back(std::move(row));
    }

    rep.feed_forwardable = rep.fidelity >= 1.0 - tol && rep.all_rows_pass();
    return rep;
}

LossEvaluator::LossEvaluator(const Graph& g, const TargetState& target, LossKind kind)
    : table_(g), kind_(kind) {
    if (target.ket.dims() != vertex_dims(g)) {
        throw PreconditionError("target state dims do not match graph vertices");
    }
    const double tn = target.ket.norm2();
    if (tn <= 0.0) throw ZeroStateError("zero target state");
    target_.assign(table_.dense_size(), Complex{0.0, 0.0});
    const double scale = 1.0 / std::sqrt(tn);
    for (const auto& [modes, amp] : target.ket.terms()) {
        target_[table_.code(modes)] = amp * scale;
    }
}

double LossEvaluator::loss(const std::vector<Complex>& w) const {
    if (w.size() != table_.edge_count()) {
        throw PreconditionError("weight vector size does not match edge count");
    }
    table_.state(w, psi_);
    Complex ov{0.0, 0.0};
    double n = 0.0;
    for (size_t c = 0; c < psi_.size(); ++c) {
        ov += std::conj(target_[c]) * psi_[c];
        n += std::norm(psi_[c]);
    }
    if (kind_ == LossKind::Fidelity) {
        if (n <= 0.0) return 1.0; // zero state: maximal loss (public API throws instead)
        return 1.0 - std::norm(ov) / n;
    }
    return 1.0 - std::min(std::norm(ov), 1.0);
}

double LossEvaluator::loss_and_gradient(const std::vector<Complex>& w,
                                        std::vector<Complex>& grad) const {
    if (w.size() != table_.edge_count()) {
        throw PreconditionError("weight vector size does not match edge count");
    }
    table_.state(w, psi_);
    Complex ov{0.0, 0.0};
    double n = 0.0;
    for (size_t c = 0; c < psi_.size(); ++c) {
        ov += std::conj(target_[c]) * psi_[c];
        n += std::norm(psi_[c]);
    }
    grad.assign(table_.edge_count(), Complex{0.0, 0.0});

    if (kind_ == LossKind::Fidelity) {
        if (n <= 0.0) return 1.0;
        table_.overlaps(w, psi_, target_, t_ov_, s_ov_);
        const double f = std::norm(ov) / n;
        const Complex oc = std::conj(ov);
        for (size_t e = 0; e < grad.size(); ++e) {
            // d|<t|psi>|^2 and d<psi|psi> under w_e = u + iv
            const Complex num = oc * t_ov_[e];
            const double du = 2.0 * num.real() / n - f * 2.0 * s_ov_[e].real() / n;
            const double dv = -2.0 * num.imag() / n + f * 2.0 * s_ov_[e].imag() / n;
            grad[e] = Complex{-du, -dv}; // loss = 1 - f
        }
        return 1.0 - f;
    }

    const double c = std::norm(ov);
    if (c < 1.0) {
        table_.overlaps(w, psi_, target_, t_ov_, s_ov_);
        const Complex oc = std::conj(ov);
        for (size_t e = 0; e < grad.size(); ++e) {
            const Complex num = oc * t_ov_[e];
            grad[e] = Complex{-2.0 * num.real(), 2.0 * num.imag()};
        }
    }
    return 1.0 - std::min(c, 1.0);
}

namespace {

std::vector<Complex> edge_weights(const Graph& g) {
    std::vector<Complex> w;
    w.reserve(g.edges.size());
    for (const Edge& e : g.edges) w.push_back(e.weight);
    return w;
}

} // namespace

double loss(const Graph& g, const TargetState& target, LossKind kind) {
    if (kind == LossKind::Fidelity && graph_state(g).is_zero()) {
        throw ZeroStateError("loss of a zero state is undefined for the fidelity objective");
    }
    LossEvaluator eval(g, target, kind);
    return eval.loss(edge_weights(g));
}

std::vector<Complex> loss_gradient(const Graph& g, const TargetState& target, LossKind kind) {
    if (kind == LossKind::Fidelity && graph_state(g).is_zero()) {
        throw ZeroStateError("loss gradient of a zero state is undefined for the fidelity objective");
    }
    LossEvaluator eval(g, target, kind);
    std::vector<Complex> grad;
    eval.loss_and_gradient(edge_weights(g), grad);
    return grad;
}

} // namespace graphgate
