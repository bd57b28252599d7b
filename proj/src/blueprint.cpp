// SPDX-License-Identifier: Apache-2.0
#include "graphgate/blueprint.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "graphgate/errors.hpp"

namespace graphgate {

namespace {

constexpr double PI = 3.14159265358979323846;

double phase_degrees(Complex w) {
    if (std::abs(w) == 0.0) return 0.0;
    double deg = std::arg(w) * 180.0 / PI;
    if (deg < 0.0) deg += 360.0;
    if (deg >= 360.0) deg -= 360.0;
    return deg;
}

std::string fmt(double x, const char* spec = "%.4f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, x);
    // avoid the "-0.0000" artifact for exact zeros
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos && s.find('-') == 0) s.erase(0, 1);
    return s;
}

const char* mode_color(Mode m) {
    static const char* palette[] = {"blue", "red", "green", "orange",
                                    "purple", "brown", "cyan", "magenta"};
    return (m >= 0 && m < 8) ? palette[m] : "gray";
}

const char* role_tag(RoleKind k) {
    switch (k) {
    case RoleKind::Input: return "input";
    case RoleKind::Output: return "output";
    case RoleKind::Ancilla: return "ancilla";
    }
    return "?";
}

} // namespace

BlueprintDoc graph_to_blueprint(const Graph& g, BlueprintStyle style) {
    require_valid(g);
    BlueprintDoc doc;
    doc.style = style;

    std::vector<int> degree(g.vertices.size(), 0);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        doc.sources.push_back({static_cast<int>(i), e.a, e.b, e.mode_a, e.mode_b,
                               std::abs(e.weight), phase_degrees(e.weight)});
        ++degree[static_cast<size_t>(e.a)];
        ++degree[static_cast<size_t>(e.b)];
    }

    for (const Vertex& v : g.vertices) {
        const int deg = degree[static_cast<size_t>(v.id)];
        if (deg > 1) {
            std::string stage =
                style == BlueprintStyle::PathIdentity
                    ? "overlap the " + std::to_string(deg) +
                          " incident source paths into one line (no which-source record)"
                    : "combine the " + std::to_string(deg) +
                          " incident source paths and erase which-source information";
            doc.overlaps.push_back({v.id, deg, std::move(stage)});
        }
    }

    for (const Vertex& v : g.vertices) {
        if (v.role.kind == RoleKind::Ancilla) {
            doc.detectors.push_back({v.id, v.role.fixed_mode, true});
        }
    }
    for (const Vertex& v : g.vertices) {
        if (v.role.kind == RoleKind::Output) {
            doc.detectors.push_back({v.id, -1, false});
        }
    }
    return doc;
}

std::string BlueprintDoc::to_text() const {
    std::ostringstream os;
    os << "experiment blueprint ("
       << (style == BlueprintStyle::PathIdentity ? "path identity" : "path-information erasure")
       << ")\n";
    os << "photon-pair sources:\n";
    for (const SourceEntry& s : sources) {
        os << "  s" << s.source_id << ": paths " << s.path_a << "-" << s.path_b << ", modes ("
           << s.mode_a << "," << s.mode_b << "), amplitude " << fmt(s.amplitude) << ", phase "
           << fmt(s.phase_deg, "%.1f") << " deg\n";
    }
    if (overlaps.empty()) {
        os << "path stages: none\n";
    } else {
        os << "path stages:\n";
        for (const OverlapNote& n : overlaps) {
            os << "  path " << n.vertex << ": " << n.stage << "\n";
        }
    }
    os << "detectors:\n";
    for (const DetectorEntry& d : detectors) {
        if (d.ancilla) {
            os << "  path " << d.vertex << ": herald on mode " << d.heralding_mode
               << " (ancilla)\n";
        } else {
            os << "  path " << d.vertex << ": verification detector (output)\n";
        }
    }
    return os.str();
}

nlohmann::json BlueprintDoc::to_json() const {
    nlohmann::json doc;
    doc["style"] = style == BlueprintStyle::PathIdentity ? "path-identity" : "path-erasure";
    nlohmann::json srcs = nlohmann::json::array();
    for (const SourceEntry& s : sources) {
        srcs.push_back({{"source", s.source_id},
                        {"path_a", s.path_a},
                        {"path_b", s.path_b},
                        {"mode_a", s.mode_a},
                        {"mode_b", s.mode_b},
                        {"amplitude", s.amplitude},
                        {"phase_deg", s.phase_deg}});
    }
    doc["sources"] = std::move(srcs);
    nlohmann::json stages = nlohmann::json::array();
    for (const OverlapNote& n : overlaps) {
        stages.push_back({{"path", n.vertex}, {"degree", n.degree}, {"stage", n.stage}});
    }
    doc["stages"] = std::move(stages);
    nlohmann::json dets = nlohmann::json::array();
    for (const DetectorEntry& d : detectors) {
        nlohmann::json jd;
        jd["path"] = d.vertex;
        jd["kind"] = d.ancilla ? "ancilla" : "output";
        if (d.ancilla) jd["herald_mode"] = d.heralding_mode;
        dets.push_back(std::move(jd));
    }
    doc["detectors"] = std::move(dets);
    return doc;
}

std::string export_dot(const Graph& g) {
    require_valid(g);
    std::ostringstream os;
    os << "graph experiment {\n";
    os << "  node [shape=circle];\n";
    for (const Vertex& v : g.vertices) {
        os << "  v" << v.id << " [label=\"" << v.id << "/" << role_tag(v.role.kind) << "/"
           << v.dim << "\"];\n";
    }
    for (const Edge& e : g.edges) {
        os << "  v" << e.a << " -- v" << e.b << " [color=\"" << mode_color(e.mode_a);
        if (e.mode_b != e.mode_a) os << ":" << mode_color(e.mode_b);
        os << "\" label=\"(" << e.mode_a << "," << e.mode_b << ") |w|=" << fmt(std::abs(e.weight))
           << " ph=" << fmt(phase_degrees(e.weight), "%.1f") << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace graphgate
