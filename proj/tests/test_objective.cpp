// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "graphgate/catalog.hpp"
#include "graphgate/errors.hpp"
#include "graphgate/gates.hpp"
#include "graphgate/graph.hpp"
#include "graphgate/ket.hpp"
#include "graphgate/matchings.hpp"
#include "graphgate/objective.hpp"
#include "graphgate/patterns.hpp"
#include "graphgate/rng.hpp"

#include "helpers.hpp"

namespace graphgate {
namespace {

Ket basis_ket(std::vector<int> dims, const Ket::Assignment& modes, Complex amp = {1.0, 0.0}) {
    Ket k(std::move(dims));
    k.set(modes, amp);
    return k;
}

Ket random_ket(std::vector<int> dims, SplitMix64& rng, int max_terms = 6) {
    Ket k(dims);
    const int want = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_terms));
    for (int t = 0; t < want; ++t) {
        Ket::Assignment modes(dims.size());
        for (size_t v = 0; v < dims.size(); ++v) {
            modes[v] = static_cast<Mode>(rng.next() % static_cast<std::uint64_t>(dims[v]));
        }
        k.set(modes, Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    }
    return k;
}

double grad_norm(const std::vector<Complex>& grad) {
    double s = 0.0;
    for (const Complex& gi : grad) s += std::norm(gi);
    return std::sqrt(s);
}

// identity channel graph that only carries mode 0: input 1 has no support
Graph half_identity_graph() {
    Graph g;
    g.vertices.push_back({0, VertexRole::input(0), 2});
    g.vertices.push_back({1, VertexRole::output(0), 2});
    g.edges.push_back({0, 1, 0, 0, Complex{1.0, 0.0}});
    return g;
}

} // namespace

TEST_SUITE("objective") {

TEST_CASE("fidelity matches hand-computed overlaps") {
    const std::vector<int> dims{2, 2};
    const Ket t = basis_ket(dims, {0, 0});

    Ket same = basis_ket(dims, {0, 0}, Complex{0.3, -0.4});
    CHECK(fidelity(same, t) == doctest::Approx(1.0).epsilon(1e-12));

    Ket ortho = basis_ket(dims, {1, 1});
    CHECK(fidelity(ortho, t) == doctest::Approx(0.0).epsilon(1e-12));

    Ket bell(dims);
    bell.set({0, 0}, Complex{1.0, 0.0});
    bell.set({1, 1}, Complex{1.0, 0.0});
    CHECK(fidelity(bell, t) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fidelity is invariant under global phase and positive scale") {
    SplitMix64 rng(2401u);
    const std::vector<int> dims{2, 3, 2};
    for (int trial = 0; trial < 10; ++trial) {
        Ket psi = random_ket(dims, rng);
        Ket target = random_ket(dims, rng);
        if (psi.norm2() <= 0.0 || target.norm2() <= 0.0) continue;
        const double f = fidelity(psi, target);

        const double theta = rng.uniform(0.0, 6.28318);
        const double alpha = std::exp(rng.uniform(-2.0, 2.0));
        Ket scaled = psi;
        scaled.scale(alpha * Complex{std::cos(theta), std::sin(theta)});
        CHECK(fidelity(scaled, target) == doctest::Approx(f).epsilon(1e-10));

        Ket target_scaled = target;
        target_scaled.scale(Complex{0.0, alpha});
        CHECK(fidelity(psi, target_scaled) == doctest::Approx(f).epsilon(1e-10));
    }
}

TEST_CASE("fidelity of a zero state is a distinct error") {
    const std::vector<int> dims{2, 2};
    const Ket t = basis_ket(dims, {0, 0});
    Ket zero(dims);
    CHECK_THROWS_AS(fidelity(zero, t), ZeroStateError);
    CHECK_THROWS_AS(fidelity(t, zero), ZeroStateError);
}

TEST_CASE("count rate rewards success amplitude, not just purity") {
    const std::vector<int> dims{2, 2};
    Ket bell(dims);
    bell.set({0, 0}, Complex{1.0, 0.0});
    bell.set({1, 1}, Complex{1.0, 0.0});
    const Ket bell_normalized = bell.normalized();

    CHECK(count_rate(bell_normalized, bell_normalized) == doctest::Approx(1.0).epsilon(1e-12));

    Ket twice = bell_normalized;
    twice.scale(Complex{2.0, 0.0});
    CHECK(count_rate(twice, bell_normalized) == doctest::Approx(4.0).epsilon(1e-12));

    // unnormalized |00>+|11> against the normalized Bell state
    CHECK(count_rate(bell, bell_normalized) == doctest::Approx(2.0).epsilon(1e-12));

    Ket zero(dims);
    CHECK(count_rate(zero, bell_normalized) == doctest::Approx(0.0));
}

TEST_CASE("crossed identity channels pass the photon-swap check") {
    const Graph g = crossing_swap_graph(2);
    const VerificationReport rep = verify_gate(g, swap_spec(2));

    CHECK(rep.fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.count_rate == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(rep.feed_forwardable);
    CHECK(rep.ancilla_count == 0);
    CHECK(rep.amplitude_spread == doctest::Approx(0.0).epsilon(1e-12));
    REQUIRE(rep.truth_table.size() == 4);
    for (const TruthRow& row : rep.truth_table) {
        CHECK(row.pass);
        CHECK(row.supported);
        CHECK(row.conditional_fidelity == doctest::Approx(1.0).epsilon(1e-12));
        REQUIRE(row.observed.has_value());
        CHECK(*row.observed == row.expected);
    }
}

TEST_CASE("a global edge phase is reported but does not fail anything") {
    Graph g = crossing_swap_graph(2);
    const double theta = 3.14159265358979323846 / 3.0;
    const Complex phase{std::cos(theta), std::sin(theta)};
    for (Edge& e : g.edges) e.weight *= phase;

    const VerificationReport rep = verify_gate(g, swap_spec(2));
    CHECK(rep.fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.feed_forwardable);
    // every perfect matching of the 4-vertex crossing has exactly 2 edges
    const Complex expect = phase * phase;
    CHECK(rep.global_phase.real() == doctest::Approx(expect.real()).epsilon(1e-12));
    CHECK(rep.global_phase.imag() == doctest::Approx(expect.imag()).epsilon(1e-12));
}

TEST_CASE("qubit controlled-add fixture verifies against its gate") {
    const Fixture fx = load_fixture("cx-2-2");
    const VerificationReport rep = verify_gate(fx.graph, parse_gate_spec("cx:2,2"), 1e-9);
    CHECK(rep.fidelity >= 1.0 - 1e-9);
    CHECK(rep.ancilla_count == 2);
    CHECK(rep.feed_forwardable);
    REQUIRE(rep.truth_table.size() == 4);
    CHECK(rep.all_rows_pass());
}

TEST_CASE("verifying against a gate of the wrong arity is a precondition error") {
    const Fixture fx = load_fixture("cx-2-2");
    CHECK_THROWS_AS(verify_gate(fx.graph, ccx_spec(2)), PreconditionError);
}

TEST_CASE("inputs with no matching terms are reported, not fatal") {
    const Graph g = half_identity_graph();
    const VerificationReport rep = verify_gate(g, teleport_spec(2));

    CHECK(rep.fidelity == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(rep.feed_forwardable);
    REQUIRE(rep.truth_table.size() == 2);

    CHECK(rep.truth_table[0].supported);
    CHECK(rep.truth_table[0].pass);
    CHECK(rep.truth_table[0].conditional_fidelity == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_FALSE(rep.truth_table[1].supported);
    CHECK_FALSE(rep.truth_table[1].pass);
    CHECK(rep.truth_table[1].conditional_fidelity == doctest::Approx(0.0));
}

TEST_CASE("the report is sensitive to ancilla wiring") {
    const Fixture fx = load_fixture("cx-2-2");
    const std::vector<int> anc = ancilla_ids(fx.graph);
    REQUIRE(anc.size() == 2);

    size_t victim = fx.graph.edges.size();
    for (size_t i = 0; i < fx.graph.edges.size(); ++i) {
        const Edge& e = fx.graph.edges[i];
        if (e.a == anc[0] || e.b == anc[0] || e.a == anc[1] || e.b == anc[1]) {
            victim = i;
            break;
        }
    }
    REQUIRE(victim < fx.graph.edges.size());

    Graph damaged = fx.graph;
    damaged.edges.erase(damaged.edges.begin() + static_cast<std::ptrdiff_t>(victim));

    bool degraded = false;
    try {
        const VerificationReport rep = verify_gate(damaged, parse_gate_spec("cx:2,2"), 1e-9);
        degraded = rep.fidelity < 1.0 - 1e-9 || !rep.all_rows_pass();
    } catch (const ZeroStateError&) {
        degraded = true; // removal killed every matching: maximal damage
    }
    CHECK(degraded);
}

TEST_CASE("loss is stationary at a verified optimum") {
    const Fixture fx = load_fixture("cx-2-2");
    const GateSpec spec = parse_gate_spec("cx:2,2");
    const TargetState target = build_target(spec, fx.graph);

    CHECK(loss(fx.graph, target, LossKind::Fidelity) <= 1e-9);
    const std::vector<Complex> grad = loss_gradient(fx.graph, target, LossKind::Fidelity);
    CHECK(grad_norm(grad) < 1e-6);
}

TEST_CASE("single-edge fidelity loss is scale invariant, count rate is not") {
    Graph g;
    g.vertices.push_back({0, VertexRole::ancilla(0), 2});
    g.vertices.push_back({1, VertexRole::ancilla(0), 2});
    g.edges.push_back({0, 1, 0, 0, Complex{1.0, 0.0}});
    TargetState target;
    target.ket = basis_ket(vertex_dims(g), {0, 0});

    const std::vector<Complex> weights{
        {0.3, 0.0}, {-2.5, 0.0}, {0.0, 0.7}, {1.0, 2.0}};
    for (const Complex& w : weights) {
        g.edges[0].weight = w;
        CHECK(loss(g, target, LossKind::Fidelity) == doctest::Approx(0.0).epsilon(1e-14));
        const double expected = 1.0 - std::min(std::norm(w), 1.0);
        CHECK(loss(g, target, LossKind::CountRate) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("loss of an unmatchable graph is a zero-state error for fidelity only") {
    Graph g;
    g.vertices.push_back({0, VertexRole::ancilla(0), 2});
    g.vertices.push_back({1, VertexRole::ancilla(0), 2});
    // no edges: no perfect matching, zero state
    TargetState target;
    target.ket = basis_ket(vertex_dims(g), {0, 0});

    CHECK_THROWS_AS(loss(g, target, LossKind::Fidelity), ZeroStateError);
    CHECK_THROWS_AS(loss_gradient(g, target, LossKind::Fidelity), ZeroStateError);
    CHECK(loss(g, target, LossKind::CountRate) == doctest::Approx(1.0));
}

TEST_CASE("analytic gradients match central finite differences") {
    SplitMix64 rng(505u);
    const double h = 1e-5;
    int tested = 0;
    while (tested < 8) {
        Graph g = testing::random_graph(rng, 6, 12, true);
        if (graph_state(g).is_zero()) continue;
        Ket tk = random_ket(vertex_dims(g), rng);
        if (tk.norm2() <= 0.0) continue;
        ++tested;
        TargetState target;
        target.ket = std::move(tk);

        std::vector<Complex> w;
        w.reserve(g.edges.size());
        for (const Edge& e : g.edges) w.push_back(e.weight);

        for (LossKind kind : {LossKind::Fidelity, LossKind::CountRate}) {
            LossEvaluator eval(g, target, kind);
            std::vector<Complex> grad;
            eval.loss_and_gradient(w, grad);

            const size_t probes = std::min<size_t>(w.size(), 5);
            for (size_t e = 0; e < probes; ++e) {
                std::vector<Complex> wp = w, wm = w;
                wp[e] += Complex{h, 0.0};
                wm[e] -= Complex{h, 0.0};
                const double fd_re = (eval.loss(wp) - eval.loss(wm)) / (2.0 * h);
                wp = w;
                wm = w;
                wp[e] += Complex{0.0, h};
                wm[e] -= Complex{0.0, h};
                const double fd_im = (eval.loss(wp) - eval.loss(wm)) / (2.0 * h);

                CHECK(std::abs(grad[e].real() - fd_re) <=
                      1e-6 * std::max(1.0, std::abs(fd_re)));
                CHECK(std::abs(grad[e].imag() - fd_im) <=
                      1e-6 * std::max(1.0, std::abs(fd_im)));
            }
        }
    }
}

TEST_CASE("the verification report serializes its documented fields") {
    const VerificationReport rep = verify_gate(crossing_swap_graph(2), swap_spec(2));
    const nlohmann::json doc = rep.to_json();

    CHECK(doc.at("fidelity").get<double>() == doctest::Approx(1.0));
    CHECK(doc.at("count_rate").get<double>() == doctest::Approx(4.0));
    CHECK(doc.at("feed_forwardable").get<bool>());
    CHECK(doc.at("ancilla_count").get<int>() == 0);
    REQUIRE(doc.at("global_phase").is_array());
    CHECK(doc.at("global_phase").size() == 2);
    CHECK(doc.contains("amplitude_spread"));
    CHECK(doc.at("tolerance").get<double>() == doctest::Approx(1e-6));

    REQUIRE(doc.at("truth_table").is_array());
    REQUIRE(doc.at("truth_table").size() == 4);
    for (const auto& row : doc.at("truth_table")) {
        CHECK(row.contains("input"));
        CHECK(row.contains("expected"));
        CHECK(row.contains("observed"));
        CHECK(row.contains("conditional_fidelity"));
        CHECK(row.at("pass").get<bool>());
    }

    const std::string text = rep.to_text();
    CHECK(text.find("feed-forwardable  yes") != std::string::npos);
    CHECK(text.find("truth table:") != std::string::npos);
}

} // TEST_SUITE

} // namespace graphgate
