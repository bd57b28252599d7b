// SPDX-License-Identifier: Apache-2.0
#include "graphgate/discovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "graphgate/errors.hpp"
#include "graphgate/rng.hpp"

namespace graphgate {

std::string trace_csv(const std::vector<TracePoint>& trace) {
    std::ostringstream os;
    os << "edge_count,loss,restart,seed\n";
    os.precision(17);
    for (const TracePoint& p : trace) {
        os << p.edge_count << "," << p.loss << "," << p.restart << "," << p.seed << "\n";
    }
    return os.str();
}

Graph seed_topology(const GateSpec& spec, int ancilla_count) {
    return seed_topology(spec, ancilla_count, {});
}

Graph seed_topology(const GateSpec& spec, int ancilla_count,
                    const std::vector<std::pair<int, int>>& forbidden_pairs) {
    const int k = spec.photon_count();
    const int n = 2 * k + ancilla_count;
    if (ancilla_count < 0) throw PreconditionError("negative ancilla count");
    if (n % 2 != 0) {
        throw PreconditionError("odd total vertex count " + std::to_string(n) +
                                ": perfect matchings need an even number of vertices");
    }
    if (!spec.ancilla_modes.empty() &&
        static_cast<int>(spec.ancilla_modes.size()) != ancilla_count) {
        throw PreconditionError("gate heralding pattern has " +
                                std::to_string(spec.ancilla_modes.size()) + " modes, asked for " +
                                std::to_string(ancilla_count) + " ancillas");
    }

    Graph g;
    for (int i = 0; i < k; ++i) {
        g.vertices.push_back({i, VertexRole::input(i), spec.input_dims[static_cast<size_t>(i)]});
    }
    for (int i = 0; i < k; ++i) {
        g.vertices.push_back(
            {k + i, VertexRole::output(i), spec.output_dims[static_cast<size_t>(i)]});
    }
    for (int j = 0; j < ancilla_count; ++j) {
        Mode herald = spec.ancilla_modes.empty() ? 0 : spec.ancilla_modes[static_cast<size_t>(j)];
        g.vertices.push_back({2 * k + j, VertexRole::ancilla(herald), std::max(2, herald + 1)});
    }

    std::set<std::pair<int, int>> forbidden;
    for (auto [u, v] : forbidden_pairs) {
        if (u == v || u < 0 || v < 0 || u >= n || v >= n) {
            throw PreconditionError("forbidden pair (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") out of range");
        }
        forbidden.insert({std::min(u, v), std::max(u, v)});
    }

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (forbidden.count({a, b})) continue;
            for (Mode ma = 0; ma < g.dim(a); ++ma) {
                for (Mode mb = 0; mb < g.dim(b); ++mb) {
                    g.edges.push_back({a, b, ma, mb, Complex{0.0, 0.0}});
                }
            }
        }
    }
    return g;
}

namespace {

std::vector<Complex> random_init(SplitMix64 rng, size_t count, const OptimizerConfig& cfg) {
    std::vector<Complex> w(count);
    for (size_t i = 0; i < count; ++i) {
        double re = rng.uniform(-cfg.init_scale, cfg.init_scale);
        double im = cfg.real_only ? 0.0 : rng.uniform(-cfg.init_scale, cfg.init_scale);
        w[i] = Complex{re, im};
    }
    return w;
}

void zero_imag(std::vector<Complex>& v) {
    for (Complex& z : v) z = Complex{z.real(), 0.0};
}

double grad_norm(const std::vector<Complex>& g) {
    double s = 0.0;
    for (const Complex& z : g) s += std::norm(z);
    return std::sqrt(s);
}

double adaptive_gd(const LossEvaluator& eval, std::vector<Complex>& w, const OptimizerConfig& cfg) {
    std::vector<Complex> grad, trial_grad, trial(w.size());
    double L = eval.loss_and_gradient(w, grad);
    if (cfg.real_only) zero_imag(grad);
    double step = 0.1;
    for (int it = 0; it < cfg.steps_per_optimize; ++it) {
        if (grad_norm(grad) < 1e-9 || step < 1e-16) break;
        for (size_t i = 0; i < w.size(); ++i) trial[i] = w[i] - step * grad[i];
        const double Lt = eval.loss_and_gradient(trial, trial_grad);
        if (Lt < L) {
            w.swap(trial);
            grad.swap(trial_grad);
            if (cfg.real_only) zero_imag(grad);
            L = Lt;
            step *= 1.1;
        } else {
            step *= 0.5;
        }
    }
    return L;
}

double run_inner(const LossEvaluator& eval, std::vector<Complex>& w, const OptimizerConfig& cfg) {
    if (cfg.hook) return cfg.hook(eval, w, cfg);
    return adaptive_gd(eval, w, cfg);
}

void apply_weights(Graph& g, const std::vector<Complex>& w) {
    for (size_t i = 0; i < g.edges.size(); ++i) g.edges[i].weight = w[i];
}

std::vector<Complex> get_weights(const Graph& g) {
    std::vector<Complex> w;
    w.reserve(g.edges.size());
    for (const Edge& e : g.edges) w.push_back(e.weight);
    return w;
}

// n x n dense solve, partial pivoting; small systems only
std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        if (std::abs(a[col][col]) < 1e-12) continue;
        for (size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (size_t r = n; r-- > 0;) {
        double s = b[r];
        for (size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
        x[r] = std::abs(a[r][r]) < 1e-12 ? 0.0 : s / a[r][r];
    }
    return x;
}

} // namespace

Complex snap_weight(Complex w) {
    static const double R = 1.0 / std::sqrt(2.0);
    static const Complex grid[] = {
        {0.0, 0.0}, {1.0, 0.0},  {-1.0, 0.0}, {R, 0.0},    {-R, 0.0},  {0.5, 0.0}, {-0.5, 0.0},
        {0.0, 1.0}, {0.0, -1.0}, {0.0, R},    {0.0, -R},   {0.0, 0.5}, {0.0, -0.5}};
    Complex best = grid[0];
    double best_d = std::abs(w - grid[0]);
    for (const Complex& s : grid) {
        const double d = std::abs(w - s);
        if (d < best_d) {
            best_d = d;
            best = s;
        }
    }
    return best;
}

std::vector<Complex> gauge_align(const Graph& g, const std::vector<Complex>& w) {
    static const double mags[] = {1.0, 1.0 / std::sqrt(2.0), 0.5};
    const size_t n = g.vertices.size();
    std::vector<Complex> out = w;
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<std::vector<double>> ata(n, std::vector<double>(n, 0.0));
        std::vector<double> atr(n, 0.0);
        for (size_t i = 0; i < n; ++i) ata[i][i] = 1e-9; // ridge
        bool any = false;
        for (size_t e = 0; e < g.edges.size(); ++e) {
            const double mag = std::abs(out[e]);
            if (mag < 1e-9) continue; // near-zero weights snap to 0 anyway
            const double lw = std::log(mag);
            double target = std::log(mags[0]);
            for (double m : mags) {
                if (std::abs(std::log(m) - lw) < std::abs(target - lw)) target = std::log(m);
            }
            const double r = target - lw;
            const size_t a = static_cast<size_t>(g.edges[e].a);
            const size_t b = static_cast<size_t>(g.edges[e].b);
            ata[a][a] += 1.0;
            ata[b][b] += 1.0;
            ata[a][b] += 1.0;
            ata[b][a] += 1.0;
            atr[a] += r;
            atr[b] += r;
            any = true;
        }
        if (!any) break;
        const std::vector<double> s = solve_dense(std::move(ata), std::move(atr));
        for (size_t e = 0; e < g.edges.size(); ++e) {
            const double f = std::exp(s[static_cast<size_t>(g.edges[e].a)] +
                                      s[static_cast<size_t>(g.edges[e].b)]);
            out[e] *= f;
        }
    }
    return out;
}

std::pair<Graph, double> optimize_weights(const Graph& g, const TargetState& target,
                                          const OptimizerConfig& cfg) {
    LossEvaluator eval(g, target, cfg.loss_kind);
    if (eval.matching_count() == 0) {
        throw DiscoveryError("unmatchable topology: no perfect matchings", 1.0);
    }
    std::vector<Complex> w = random_init(SplitMix64::substream(cfg.seed, 0), g.edges.size(), cfg);
    const double L = run_inner(eval, w, cfg);
    Graph out = g;
    apply_weights(out, w);
    return {std::move(out), L};
}

namespace {

DiscoveryResult prune_impl(Graph cur, const GateSpec& spec, const OptimizerConfig& cfg,
                           std::vector<TracePoint> trace, std::uint64_t label) {
    const TargetState target = build_target(spec, cur);
    std::vector<Complex> w = get_weights(cur);

    auto make_eval = [&](const Graph& g) { return LossEvaluator(g, target, cfg.loss_kind); };
    LossEvaluator eval = make_eval(cur);
    if (eval.matching_count() == 0) {
        throw DiscoveryError("unmatchable topology: no perfect matchings", 1.0);
    }
    double L = eval.loss(w);
    trace.push_back({static_cast<int>(cur.edges.size()), L, label, cfg.seed});

    std::set<std::tuple<int, int, Mode, Mode>> protected_keys;
    int removal_counter = 0;
    while (true) {
        // smallest |w| among unprotected edges, ties to canonical key order
        int pick = -1;
        for (size_t i = 0; i < cur.edges.size(); ++i) {
            if (protected_keys.count(cur.edges[i].key())) continue;
            if (pick < 0) {
                pick = static_cast<int>(i);
                continue;
            }
            const double wi = std::abs(w[i]);
            const double wp = std::abs(w[static_cast<size_t>(pick)]);
            if (wi < wp || (wi == wp && cur.edges[i].key() < cur.edges[static_cast<size_t>(pick)].key())) {
                pick = static_cast<int>(i);
            }
        }
        if (pick < 0) break;

        Graph trial = cur;
        trial.edges.erase(trial.edges.begin() + pick);
        std::vector<Complex> warm = w;
        warm.erase(warm.begin() + pick);

        const int counter = removal_counter++;
        bool accepted = false;
        LossEvaluator trial_eval = make_eval(trial);
        if (trial_eval.matching_count() > 0) {
            double L1 = run_inner(trial_eval, warm, cfg);
            std::vector<Complex> fresh = random_init(
                SplitMix64::substream(cfg.seed, 1000000 + static_cast<std::uint64_t>(counter)),
                trial.edges.size(), cfg);
            double L2 = run_inner(trial_eval, fresh, cfg);
            std::uint64_t won = label;
            if (L2 < L1) {
                warm.swap(fresh);
                L1 = L2;
                won = 1000000 + static_cast<std::uint64_t>(counter);
            }
            if (L1 < cfg.search_threshold) {
                cur = std::move(trial);
                w = std::move(warm);
                eval = std::move(trial_eval);
                L = L1;
                label = won;
                accepted = true;
                trace.push_back({static_cast<int>(cur.edges.size()), L, label, cfg.seed});
            }
        }
        if (!accepted) {
            protected_keys.insert(cur.edges[static_cast<size_t>(pick)].key());
        }
    }

    // polish on the final topology
    L = run_inner(eval, w, cfg);

    // Fidelity is invariant under per-vertex magnitude rescaling, so align
    // the gauge unconditionally: it keeps result magnitudes near the grid and
    // away from degenerate scales where the state's sparse terms underflow.
    // Count-rate loss is scale-sensitive, so there the raw weights stand.
    if (cfg.loss_kind == LossKind::Fidelity) {
        w = gauge_align(cur, w);
        L = eval.loss(w);
    }

    if (cfg.snap_weights) {
        std::vector<Complex> snapped(w.size());
        std::transform(w.begin(), w.end(), snapped.begin(), snap_weight);
        if (eval.loss(snapped) < cfg.polish_threshold) w = std::move(snapped);
        L = eval.loss(w);
    }
    apply_weights(cur, w);
    trace.push_back({static_cast<int>(cur.edges.size()), L, label, cfg.seed});

    DiscoveryResult res;
    res.graph = std::move(cur);
    res.loss_trace = std::move(trace);
    res.seed = cfg.seed;
    res.report = verify_gate(res.graph, spec, cfg.polish_threshold);
    res.fidelity = res.report.fidelity;
    return res;
}

} // namespace

DiscoveryResult prune_topology(const Graph& g, const GateSpec& spec, const OptimizerConfig& cfg) {
    return prune_impl(g, spec, cfg, {}, 0);
}

DiscoveryResult discover(const GateSpec& spec, int ancilla_count, const OptimizerConfig& cfg) {
    GateSpec full = spec;
    if (full.ancilla_modes.empty()) {
        full.ancilla_modes.assign(static_cast<size_t>(ancilla_count), 0);
    }
    const Graph seed = seed_topology(full, ancilla_count, cfg.forbidden_pairs);
    const TargetState target = build_target(full, seed);
    LossEvaluator eval(seed, target, cfg.loss_kind);
    if (eval.matching_count() == 0) {
        throw DiscoveryError("unmatchable topology: no perfect matchings", 1.0);
    }

    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < cfg.max_restarts; ++r) {
        std::vector<Complex> w = random_init(
            SplitMix64::substream(cfg.seed, static_cast<std::uint64_t>(r)), seed.edges.size(), cfg);
        const double L = run_inner(eval, w, cfg);
        best = std::min(best, L);
        if (L < cfg.search_threshold) {
            Graph g = seed;
            apply_weights(g, w);
            std::vector<TracePoint> trace;
            DiscoveryResult res =
                prune_impl(std::move(g), full, cfg, std::move(trace), static_cast<std::uint64_t>(r));
            const double final_loss =
                res.loss_trace.empty() ? 1.0 : res.loss_trace.back().loss;
            if (final_loss >= cfg.polish_threshold) {
                throw DiscoveryError("pruned solution failed to polish below " +
                                         std::to_string(cfg.polish_threshold) +
                                         " (loss " + std::to_string(final_loss) + ")",
                                     final_loss);
            }
            return res;
        }
    }
    throw DiscoveryError("no solution found after " + std::to_string(cfg.max_restarts) +
                             " restarts",
                         best);
}

} // namespace graphgate
