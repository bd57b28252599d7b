// SPDX-License-Identifier: Apache-2.0
#include "graphgate/json_io.hpp"

#include <fstream>
#include <sstream>

#include "graphgate/errors.hpp"

namespace graphgate {

using nlohmann::json;

namespace {

const char* role_name(RoleKind k) {
    switch (k) {
    case RoleKind::Input: return "input";
    case RoleKind::Output: return "output";
    case RoleKind::Ancilla: return "ancilla";
    }
    return "?";
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) {
            if (it.key() == k) {
                ok = true;
                break;
            }
        }
        if (!ok) throw SchemaError("unknown key \"" + it.key() + "\" in " + where);
    }
}

int require_int(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError("missing \"" + std::string(key) + "\" in " + where);
    if (!it->is_number_integer()) {
        throw SchemaError("\"" + std::string(key) + "\" in " + where + " must be an integer");
    }
    return it->get<int>();
}

} // namespace

json graph_to_json_value(const Graph& g) {
    json doc = json::object();
    json verts = json::array();
    for (const Vertex& v : g.vertices) {
        json jv;
        jv["id"] = v.id;
        jv["role"] = role_name(v.role.kind);
        if (v.role.kind == RoleKind::Ancilla) {
            jv["fixed_mode"] = v.role.fixed_mode;
        } else {
            jv["position"] = v.role.position;
        }
        jv["dim"] = v.dim;
        verts.push_back(std::move(jv));
    }
    json edges = json::array();
    for (const Edge& e : g.edges) {
        json je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["mode_a"] = e.mode_a;
        je["mode_b"] = e.mode_b;
        je["weight"] = json::array({e.weight.real(), e.weight.imag()});
        edges.push_back(std::move(je));
    }
    doc["vertices"] = std::move(verts);
    doc["edges"] = std::move(edges);
    doc["meta"] = g.meta.is_null() ? json::object() : g.meta;
    return doc;
}

std::string graph_to_json(const Graph& g) {
    return graph_to_json_value(g).dump(2) + "\n";
}

Graph graph_from_json_value(const json& doc) {
    if (!doc.is_object()) throw SchemaError("top-level document must be an object");
    auto vit = doc.find("vertices");
    if (vit == doc.end() || !vit->is_array()) {
        throw SchemaError("missing \"vertices\" array");
    }
    auto eit = doc.find("edges");
    if (eit == doc.end() || !eit->is_array()) {
        throw SchemaError("missing \"edges\" array");
    }

    Graph g;
    for (size_t i = 0; i < vit->size(); ++i) {
        const json& jv = (*vit)[i];
        const std::string where = "vertex " + std::to_string(i);
        if (!jv.is_object()) throw SchemaError(where + " must be an object");
        check_keys(jv, {"id", "role", "position", "fixed_mode", "dim"}, where);
        Vertex v;
        v.id = require_int(jv, "id", where);
        v.dim = require_int(jv, "dim", where);
        auto rit = jv.find("role");
        if (rit == jv.end() || !rit->is_string()) {
            throw SchemaError("missing \"role\" string in " + where);
        }
        const std::string role = rit->get<std::string>();
        if (role == "input" || role == "output") {
            if (jv.contains("fixed_mode")) {
                throw SchemaError(where + ": \"fixed_mode\" is only valid for ancilla vertices");
            }
            int pos = require_int(jv, "position", where);
            v.role = role == "input" ? VertexRole::input(pos) : VertexRole::output(pos);
        } else if (role == "ancilla") {
            if (jv.contains("position")) {
                throw SchemaError(where + ": \"position\" is only valid for input/output vertices");
            }
            v.role = VertexRole::ancilla(require_int(jv, "fixed_mode", where));
        } else {
            throw SchemaError(where + ": unknown role \"" + role + "\"");
        }
        g.vertices.push_back(v);
    }

    for (size_t i = 0; i < eit->size(); ++i) {
        const json& je = (*eit)[i];
        const std::string where = "edge " + std::to_string(i);
        if (!je.is_object()) throw SchemaError(where + " must be an object");
        check_keys(je, {"a", "b", "mode_a", "mode_b", "weight"}, where);
        Edge e;
        e.a = require_int(je, "a", where);
        e.b = require_int(je, "b", where);
        e.mode_a = require_int(je, "mode_a", where);
        e.mode_b = require_int(je, "mode_b", where);
        auto wit = je.find("weight");
        if (wit == je.end()) throw SchemaError("missing \"weight\" in " + where);
        if (!wit->is_array() || wit->size() != 2 || !(*wit)[0].is_number() ||
            !(*wit)[1].is_number()) {
            throw SchemaError("\"weight\" in " + where + " must be a [re, im] number pair");
        }
        e.weight = Complex{(*wit)[0].get<double>(), (*wit)[1].get<double>()};
        g.edges.push_back(e);
    }

    auto mit = doc.find("meta");
    g.meta = (mit == doc.end()) ? json::object() : *mit;

    require_valid(g);
    return g;
}

Graph graph_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    return graph_from_json_value(doc);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << graph_to_json(g);
    if (!out.good()) throw ParseError("write failed for " + path);
}

} // namespace graphgate
