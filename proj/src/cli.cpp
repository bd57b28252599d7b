// SPDX-License-Identifier: Apache-2.0
#include "graphgate/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphgate/blueprint.hpp"
#include "graphgate/catalog.hpp"
#include "graphgate/discovery.hpp"
#include "graphgate/errors.hpp"
#include "graphgate/gates.hpp"
#include "graphgate/graph.hpp"
#include "graphgate/json_io.hpp"
#include "graphgate/ket.hpp"
#include "graphgate/matchings.hpp"
#include "graphgate/objective.hpp"

namespace graphgate {

namespace {

std::string fmt_g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// "-" routes to stdout; write failures surface as I/O errors (exit 4)
void write_text(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << payload;
    if (!out) throw ParseError("write failed: " + path);
}

// gate-spec strings are argv material, so their parse errors are usage errors
GateSpec parse_gate_arg(const std::string& text) {
    try {
        return parse_gate_spec(text);
    } catch (const ParseError& e) {
        throw CLI::ValidationError("gate-spec", e.what());
    }
}

std::vector<std::pair<int, int>> parse_forbid(const std::vector<std::string>& raw) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(raw.size());
    for (const std::string& item : raw) {
        const auto dash = item.find('-');
        int a = -1;
        int b = -1;
        bool ok = dash != std::string::npos && dash > 0 && dash + 1 < item.size();
        if (ok) {
            try {
                std::size_t used = 0;
                a = std::stoi(item.substr(0, dash), &used);
                ok = used == dash;
                b = std::stoi(item.substr(dash + 1), &used);
                ok = ok && used == item.size() - dash - 1;
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok || a < 0 || b < 0 || a == b) {
            throw CLI::ValidationError("--forbid", "expected a pair like 0-3, got \"" + item + "\"");
        }
        pairs.emplace_back(a, b);
    }
    return pairs;
}

nlohmann::json load_config(const std::string& path) {
    if (path.empty()) return nlohmann::json();
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read config file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw ParseError("config file is not valid JSON: " + path);
    if (!doc.is_object()) throw SchemaError("config file must hold a JSON object: " + path);
    return doc;
}

// flag-over-file: config values fill in only flags the command line left unset
template <class T>
void apply_cfg(const CLI::App* cmd, const nlohmann::json& doc, const std::string& key, T& var) {
    if (!doc.is_object() || !doc.contains(key)) return;
    if (cmd->count("--" + key) > 0) return;
    try {
        var = doc.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("config key \"" + key + "\": " + e.what());
    }
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

struct DiscoverArgs {
    std::string gate;
    int ancillas = 0;
    std::uint64_t seed = 1;
    int restarts = 50;
    int steps = 1500;
    double search_threshold = 1e-3;
    double polish_threshold = 1e-6;
    double init_scale = 1.0;
    bool real_only = false;
    bool snap = false;
    std::string loss = "fidelity";
    std::vector<std::string> forbid;
    std::string output;
    std::string trace_path;
    std::string config;
};

nlohmann::json trace_json(const std::vector<TracePoint>& trace) {
    nlohmann::json rows = nlohmann::json::array();
    for (const TracePoint& p : trace) {
        rows.push_back({{"edge_count", p.edge_count},
                        {"loss", p.loss},
                        {"restart", p.restart},
                        {"seed", p.seed}});
    }
    return rows;
}

int cmd_discover(const CLI::App* cmd, DiscoverArgs& a) {
    const nlohmann::json doc = load_config(a.config);
    apply_cfg(cmd, doc, "ancillas", a.ancillas);
    apply_cfg(cmd, doc, "seed", a.seed);
    apply_cfg(cmd, doc, "restarts", a.restarts);
    apply_cfg(cmd, doc, "steps", a.steps);
    apply_cfg(cmd, doc, "search-threshold", a.search_threshold);
    apply_cfg(cmd, doc, "polish-threshold", a.polish_threshold);
    apply_cfg(cmd, doc, "init-scale", a.init_scale);
    apply_cfg(cmd, doc, "real-only", a.real_only);
    apply_cfg(cmd, doc, "snap", a.snap);
    apply_cfg(cmd, doc, "loss", a.loss);
    apply_cfg(cmd, doc, "forbid", a.forbid);
    apply_cfg(cmd, doc, "output", a.output);
    apply_cfg(cmd, doc, "trace", a.trace_path);

    const GateSpec spec = parse_gate_arg(a.gate);
    if (a.loss != "fidelity" && a.loss != "count-rate") {
        throw CLI::ValidationError("--loss", "expected fidelity or count-rate");
    }

    OptimizerConfig cfg;
    cfg.loss_kind = a.loss == "fidelity" ? LossKind::Fidelity : LossKind::CountRate;
    cfg.seed = a.seed;
    cfg.max_restarts = a.restarts;
    cfg.steps_per_optimize = a.steps;
    cfg.search_threshold = a.search_threshold;
    cfg.polish_threshold = a.polish_threshold;
    cfg.init_scale = a.init_scale;
    cfg.real_only = a.real_only;
    cfg.snap_weights = a.snap;
    cfg.forbidden_pairs = parse_forbid(a.forbid);

    DiscoveryResult res = discover(spec, a.ancillas, cfg);

    Graph out = res.graph;
    if (!out.meta.is_object()) out.meta = nlohmann::json::object();
    out.meta["discovery"] = {
        {"gate", a.gate},
        {"ancillas", a.ancillas},
        {"seed", a.seed},
        {"restart", res.loss_trace.front().restart},
        {"loss", res.loss_trace.back().loss},
        {"fidelity", res.fidelity},
        {"edge_count", out.edges.size()},
        {"trace", trace_json(res.loss_trace)},
    };

    if (!a.trace_path.empty()) write_text(a.trace_path, trace_csv(res.loss_trace));

    if (!a.output.empty()) {
        write_text(a.output, graph_to_json(out));
        if (a.output != "-") {
            std::cerr << "wrote " << a.output << ": " << out.edges.size() << " edges, fidelity "
                      << fmt_g(res.fidelity) << "\n";
        }
        return 0;
    }

    std::cout << "gate           " << a.gate << "\n"
              << "ancillas       " << a.ancillas << "\n"
              << "seed           " << a.seed << "\n"
              << "restart        " << res.loss_trace.front().restart << "\n"
              << "edges          " << out.edges.size() << "\n"
              << "final loss     " << fmt_g(res.loss_trace.back().loss) << "\n"
              << res.report.to_text();
    return 0;
}

struct VerifyArgs {
    std::string graph_path;
    std::string gate;
    double tol = 1e-6;
    std::string report_path;
    std::string config;
};

int cmd_verify(const CLI::App* cmd, VerifyArgs& a) {
    const nlohmann::json doc = load_config(a.config);
    apply_cfg(cmd, doc, "tol", a.tol);
    apply_cfg(cmd, doc, "report", a.report_path);

    const Graph g = load_graph_file(a.graph_path);
    const GateSpec spec = parse_gate_arg(a.gate);
    const VerificationReport rep = verify_gate(g, spec, a.tol);

    if (!a.report_path.empty()) write_text(a.report_path, rep.to_json().dump(2) + "\n");
    if (a.report_path != "-") std::cout << rep.to_text();

    if (!rep.feed_forwardable) {
        std::cerr << "verification failed: fidelity " << fmt_g(rep.fidelity)
                  << " with tolerance " << fmt_g(a.tol) << "\n";
        return 1;
    }
    return 0;
}

int cmd_state(const std::string& graph_path, bool normalize) {
    const Graph g = load_graph_file(graph_path);
    Ket psi = graph_state(g);
    if (normalize) psi = psi.normalized();

    std::vector<std::pair<Ket::Assignment, Complex>> rows(psi.terms().begin(), psi.terms().end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        const double ax = std::abs(x.second);
        const double ay = std::abs(y.second);
        if (ax != ay) return ax > ay;
        return x.first < y.first;
    });

    std::cout << "# terms " << rows.size() << ", norm2 " << fmt_g(psi.norm2()) << "\n";
    for (const auto& [modes, amp] : rows) {
        std::cout << "|";
        for (std::size_t i = 0; i < modes.size(); ++i) {
            if (i > 0) std::cout << ",";
            std::cout << modes[i];
        }
        std::cout << ">  " << fmt_g(amp.real()) << (amp.imag() < 0 ? " - " : " + ")
                  << fmt_g(std::abs(amp.imag())) << "i  |amp| " << fmt_g(std::abs(amp)) << "\n";
    }
    return 0;
}

int cmd_export(const std::string& graph_path, const std::string& format,
               const std::string& output) {
    const Graph g = load_graph_file(graph_path);
    std::string payload;
    if (format == "dot") {
        payload = export_dot(g);
    } else if (format == "json") {
        payload = graph_to_json(g);
    } else if (format == "blueprint") {
        payload = graph_to_blueprint(g, BlueprintStyle::PathIdentity).to_text();
    } else {
        payload = graph_to_blueprint(g, BlueprintStyle::PathErasure).to_text();
    }
    write_text(output.empty() ? "-" : output, payload);
    return 0;
}

void require_known_fixture(const std::string& id) {
    const auto ids = list_fixtures();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        throw CLI::ValidationError("fixtures", "unknown fixture id: " + id);
    }
}

int cmd_fixtures_list() {
    for (const std::string& id : list_fixtures()) {
        std::cout << id;
        if (fixture_is_long_running(id)) std::cout << "  [long-running regen]";
        if (fixture_has_teleport_witness(id)) std::cout << "  [teleport witness]";
        std::cout << "\n";
    }
    return 0;
}

int cmd_fixtures_check(std::vector<std::string> ids, const std::string& dir) {
    if (ids.empty()) ids = list_fixtures();
    int failures = 0;
    for (const std::string& id : ids) {
        require_known_fixture(id);
        try {
            const Fixture f = dir.empty() ? load_fixture(id) : load_fixture(id, dir);
            std::cout << "PASS  " << id << "  fidelity " << fmt_g(f.report.fidelity)
                      << "  ancillas " << f.report.ancilla_count << "  edges "
                      << f.graph.edges.size() << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cerr << "FAIL  " << id << ": " << e.what() << "\n";
        }
    }
    if (failures > 0) {
        std::cerr << failures << " fixture(s) failed\n";
        return 1;
    }
    return 0;
}

struct RegenArgs {
    std::string id;
    std::string dir;
    std::uint64_t seed = 0;
    int restarts = 0;
    int steps = 0;
    bool force = false;
};

int cmd_fixtures_regen(const CLI::App* cmd, const RegenArgs& a) {
    require_known_fixture(a.id);
    const bool custom = a.force || cmd->count("--seed") > 0 || cmd->count("--restarts") > 0 ||
                        cmd->count("--steps") > 0;
    const std::string dir = a.dir.empty() ? default_fixture_dir() : a.dir;

    if (!custom && fixture_is_long_running(a.id)) {
        std::cout << "long-running  " << a.id
                  << ": regeneration takes hours; rerun with --force and an explicit budget\n";
        return 0;
    }

    OptimizerConfig cfg = fixture_recipe(a.id);
    if (cmd->count("--seed") > 0) cfg.seed = a.seed;
    if (cmd->count("--restarts") > 0) cfg.max_restarts = a.restarts;
    if (cmd->count("--steps") > 0) cfg.steps_per_optimize = a.steps;

    const RegenReport rep = regenerate_fixture(a.id, cfg, dir);
    if (rep.status == RegenStatus::Ok) {
        std::cout << "ok  " << rep.message << "\n";
        return 0;
    }
    std::cerr << "regen failed (best loss " << fmt_g(rep.best_loss) << "): " << rep.message
              << "\n";
    return 3;
}

int cmd_fixtures_pin(const std::string& id, const std::string& from, const std::string& dir,
                     const std::string& method, const std::string& date) {
    require_known_fixture(id);
    const Graph g = load_graph_file(from);

    nlohmann::json prov = nlohmann::json::object();
    prov["method"] = method.empty() ? "manual pin" : method;
    if (!date.empty()) prov["date"] = date;
    if (g.meta.is_object() && g.meta.contains("discovery")) {
        const nlohmann::json& d = g.meta["discovery"];
        for (const char* key : {"gate", "ancillas", "seed", "restart", "loss"}) {
            if (d.contains(key)) prov[key] = d[key];
        }
        prov["cfg_digest"] = hex64(fnv1a(d.dump()));
    }

    const Fixture f = pin_fixture(id, g, dir.empty() ? default_fixture_dir() : dir, prov);
    std::cout << "pinned  " << id << "  fidelity " << fmt_g(f.report.fidelity) << "  ancillas "
              << f.report.ancilla_count << "  edges " << f.graph.edges.size() << "\n";
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"design and verify post-selected photonic gates on colored weighted graphs"};
    app.require_subcommand(1);

    DiscoverArgs da;
    CLI::App* disc = app.add_subcommand("discover", "search for a graph implementing a gate");
    disc->add_option("gate", da.gate, "gate spec, e.g. swap:2, cx:2,3, ccx:2, cswap, teleport:2")
        ->required();
    disc->add_option("--ancillas", da.ancillas, "number of dim-2 heralded ancilla vertices");
    disc->add_option("--seed", da.seed, "root RNG seed");
    disc->add_option("--restarts", da.restarts, "random restarts before giving up");
    disc->add_option("--steps", da.steps, "gradient steps per optimization");
    disc->add_option("--search-threshold", da.search_threshold, "loss accepted during pruning");
    disc->add_option("--polish-threshold", da.polish_threshold, "loss required of the result");
    disc->add_option("--init-scale", da.init_scale, "initial weight range half-width");
    disc->add_flag("--real-only", da.real_only, "keep weights on the real axis");
    disc->add_flag("--snap", da.snap, "snap final weights to the interferometric grid");
    disc->add_option("--loss", da.loss, "fidelity or count-rate")->type_name("KIND");
    disc->add_option("--forbid", da.forbid, "vertex pair kept edge-free, e.g. 0-1 (repeatable)")
        ->delimiter(',');
    disc->add_option("-o,--output", da.output, "write graph JSON here (- for stdout)");
    disc->add_option("--trace", da.trace_path, "write the loss trace CSV here");
    disc->add_option("--config", da.config, "JSON file with defaults for these flags");

    VerifyArgs va;
    CLI::App* ver = app.add_subcommand("verify", "check a graph against a gate truth table");
    ver->add_option("graph", va.graph_path, "graph JSON file")->required();
    ver->add_option("gate", va.gate, "gate spec the graph claims to implement")->required();
    ver->add_option("--tol", va.tol, "fidelity tolerance");
    ver->add_option("--report", va.report_path, "write report JSON here (- for stdout)");
    ver->add_option("--config", va.config, "JSON file with defaults for these flags");

    std::string state_path;
    bool state_normalize = false;
    CLI::App* st = app.add_subcommand("state", "print the post-selected state of a graph");
    st->add_option("graph", state_path, "graph JSON file")->required();
    st->add_flag("--normalize", state_normalize, "normalize before printing");

    std::string export_path;
    std::string export_format;
    std::string export_out;
    CLI::App* ex = app.add_subcommand("export", "render a graph as DOT, JSON or a blueprint");
    ex->add_option("graph", export_path, "graph JSON file")->required();
    ex->add_option("--format", export_format, "dot, json, blueprint or blueprint-pe")
        ->required()
        ->check(CLI::IsMember({"dot", "json", "blueprint", "blueprint-pe"}));
    ex->add_option("-o,--output", export_out, "output file (- for stdout)");

    CLI::App* fx = app.add_subcommand("fixtures", "pinned regression graphs");
    fx->require_subcommand(1);
    CLI::App* fxl = fx->add_subcommand("list", "list fixture ids");
    std::vector<std::string> check_ids;
    std::string check_dir;
    CLI::App* fxc = fx->add_subcommand("check", "load fixtures and re-verify them");
    fxc->add_option("ids", check_ids, "fixture ids (default: all)");
    fxc->add_option("--dir", check_dir, "fixture directory override");
    RegenArgs ra;
    CLI::App* fxr = fx->add_subcommand("regen", "re-run a fixture's pinned discovery recipe");
    fxr->add_option("id", ra.id, "fixture id")->required();
    fxr->add_option("--dir", ra.dir, "fixture directory override");
    fxr->add_option("--seed", ra.seed, "override the recipe seed");
    fxr->add_option("--restarts", ra.restarts, "override the recipe restart budget");
    fxr->add_option("--steps", ra.steps, "override the recipe step budget");
    fxr->add_flag("--force", ra.force, "run long-running recipes too");
    std::string pin_id;
    std::string pin_from;
    std::string pin_dir;
    std::string pin_method;
    std::string pin_date;
    CLI::App* fxp = fx->add_subcommand("pin", "verify a graph and store it as a fixture");
    fxp->add_option("id", pin_id, "fixture id")->required();
    fxp->add_option("--from", pin_from, "graph JSON file to pin")->required();
    fxp->add_option("--dir", pin_dir, "fixture directory override");
    fxp->add_option("--method", pin_method, "provenance note on how the graph was produced");
    fxp->add_option("--date", pin_date, "provenance date");

    try {
        app.parse(argc, argv);

        if (app.got_subcommand(disc)) return cmd_discover(disc, da);
        if (app.got_subcommand(ver)) return cmd_verify(ver, va);
        if (app.got_subcommand(st)) return cmd_state(state_path, state_normalize);
        if (app.got_subcommand(ex)) return cmd_export(export_path, export_format, export_out);
        if (app.got_subcommand(fx)) {
            if (fx->got_subcommand(fxl)) return cmd_fixtures_list();
            if (fx->got_subcommand(fxc)) return cmd_fixtures_check(check_ids, check_dir);
            if (fx->got_subcommand(fxr)) return cmd_fixtures_regen(fxr, ra);
            if (fx->got_subcommand(fxp)) {
                return cmd_fixtures_pin(pin_id, pin_from, pin_dir, pin_method, pin_date);
            }
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const DiscoveryError& e) {
        std::cerr << "discovery failed: " << e.what() << " (best loss " << fmt_g(e.best_loss)
                  << ")\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroStateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const FixtureError& e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return 1;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << "invalid graph: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace graphgate
