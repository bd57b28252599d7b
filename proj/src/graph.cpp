// SPDX-License-Identifier: Apache-2.0
#include "graphgate/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "graphgate/errors.hpp"

namespace graphgate {

Edge canonicalize_edge(int a, int b, Mode mode_a, Mode mode_b, Complex weight) {
    if (a == b) {
        throw ValidationError("self-loop edge at vertex " + std::to_string(a));
    }
    Edge e;
    if (a < b) {
        e = {a, b, mode_a, mode_b, weight};
    } else {
        e = {b, a, mode_b, mode_a, weight};
    }
    return e;
}

bool ValidationReport::valid() const {
    return std::none_of(violations.begin(), violations.end(),
                        [](const Violation& v) { return v.severity == Severity::Error; });
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) {
        os << (v.severity == Severity::Error ? "error: " : "warning: ") << v.message << "\n";
    }
    return os.str();
}

ValidationReport validate_graph(const Graph& g) {
    ValidationReport rep;
    auto err = [&](const std::string& m) { rep.violations.push_back({Severity::Error, m}); };
    auto warn = [&](const std::string& m) { rep.violations.push_back({Severity::Warning, m}); };

    const int n = static_cast<int>(g.vertices.size());
    for (int i = 0; i < n; ++i) {
        const Vertex& v = g.vertices[static_cast<size_t>(i)];
        if (v.id != i) {
            err("vertex ids must be dense and listed in order: slot " + std::to_string(i) +
                " holds id " + std::to_string(v.id));
        }
        if (v.dim < 2) {
            err("vertex " + std::to_string(v.id) + " has dim " + std::to_string(v.dim) +
                ", need >= 2");
        }
        switch (v.role.kind) {
        case RoleKind::Input:
        case RoleKind::Output:
            if (v.role.position < 0) {
                err("vertex " + std::to_string(v.id) + " has negative pairing position");
            }
            break;
        case RoleKind::Ancilla:
            if (v.role.fixed_mode < 0 || v.role.fixed_mode >= v.dim) {
                err("vertex " + std::to_string(v.id) + " heralding mode " +
                    std::to_string(v.role.fixed_mode) + " outside [0, " +
                    std::to_string(v.dim) + ")");
            }
            break;
        }
    }

    // paired input/output slots: contiguous 0-based positions, equal dims
    std::map<int, int> in_pos, out_pos; // position -> vertex id
    for (const Vertex& v : g.vertices) {
        if (v.role.kind == RoleKind::Input) {
            if (!in_pos.emplace(v.role.position, v.id).second) {
                err("duplicate input position " + std::to_string(v.role.position));
            }
        } else if (v.role.kind == RoleKind::Output) {
            if (!out_pos.emplace(v.role.position, v.id).second) {
                err("duplicate output position " + std::to_string(v.role.position));
            }
        }
    }
    if (in_pos.size() != out_pos.size()) {
        err("input count " + std::to_string(in_pos.size()) + " != output count " +
            std::to_string(out_pos.size()));
    }
    auto contiguous = [&](const std::map<int, int>& m, const char* what) {
        int want = 0;
        for (const auto& [pos, id] : m) {
            if (pos != want) {
                err(std::string(what) + " positions not a contiguous 0-based range (missing " +
                    std::to_string(want) + ")");
                return;
            }
            ++want;
        }
    };
    contiguous(in_pos, "input");
    contiguous(out_pos, "output");
    for (const auto& [pos, iid] : in_pos) {
        auto it = out_pos.find(pos);
        if (it != out_pos.end() && g.vertices[static_cast<size_t>(iid)].id == iid &&
            it->second < n && iid < n) {
            int din = g.vertices[static_cast<size_t>(iid)].dim;
            int dout = g.vertices[static_cast<size_t>(it->second)].dim;
            if (din != dout) {
                err("input/output pair at position " + std::to_string(pos) +
                    " has mismatched dims " + std::to_string(din) + " vs " +
                    std::to_string(dout));
            }
        }
    }

    std::set<std::tuple<int, int, Mode, Mode>> seen;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        const std::string tag = "edge " + std::to_string(i);
        if (e.a == e.b) {
            err(tag + " is a self-loop at vertex " + std::to_string(e.a));
            continue;
        }
        if (e.a > e.b) {
            err(tag + " not in canonical orientation (a < b)");
        }
        if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) {
            err(tag + " endpoint out of range");
            continue;
        }
        if (e.mode_a < 0 || e.mode_a >= g.dim(e.a)) {
            err(tag + " mode_a " + std::to_string(e.mode_a) + " outside [0, " +
                std::to_string(g.dim(e.a)) + ")");
        }
        if (e.mode_b < 0 || e.mode_b >= g.dim(e.b)) {
            err(tag + " mode_b " + std::to_string(e.mode_b) + " outside [0, " +
                std::to_string(g.dim(e.b)) + ")");
        }
        if (!seen.insert(e.key()).second) {
            err(tag + " duplicates key (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                "," + std::to_string(e.mode_a) + "," + std::to_string(e.mode_b) + ")");
        }
    }

    if (n % 2 != 0) {
        warn("odd vertex count " + std::to_string(n) + ": no perfect matchings, state is zero");
    }
    return rep;
}

void require_valid(const Graph& g) {
    ValidationReport rep = validate_graph(g);
    if (!rep.valid()) {
        throw ValidationError("invalid graph:\n" + rep.to_string());
    }
}

namespace {

std::vector<int> ids_by_position(const Graph& g, RoleKind kind) {
    std::map<int, int> by_pos;
    for (const Vertex& v : g.vertices) {
        if (v.role.kind == kind) by_pos[v.role.position] = v.id;
    }
    std::vector<int> out;
    out.reserve(by_pos.size());
    for (const auto& [pos, id] : by_pos) out.push_back(id);
    return out;
}

} // namespace

std::vector<int> input_ids(const Graph& g) { return ids_by_position(g, RoleKind::Input); }
std::vector<int> output_ids(const Graph& g) { return ids_by_position(g, RoleKind::Output); }

std::vector<int> ancilla_ids(const Graph& g) {
    std::vector<int> out;
    for (const Vertex& v : g.vertices) {
        if (v.role.kind == RoleKind::Ancilla) out.push_back(v.id);
    }
    return out;
}

std::vector<int> vertex_dims(const Graph& g) {
    std::vector<int> dims;
    dims.reserve(g.vertices.size());
    for (const Vertex& v : g.vertices) dims.push_back(v.dim);
    return dims;
}

bool has_edge_between(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    for (const Edge& e : g.edges) {
        if (e.a == u && e.b == v) return true;
    }
    return false;
}

} // namespace graphgate
