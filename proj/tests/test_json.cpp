// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <json.hpp>

#include "graphgate/errors.hpp"
#include "graphgate/json_io.hpp"
#include "graphgate/rng.hpp"

#include "helpers.hpp"

using namespace graphgate;

namespace {

Graph gate_shaped_graph() {
    Graph g;
    g.vertices.push_back({0, VertexRole::input(0), 2});
    g.vertices.push_back({1, VertexRole::output(0), 2});
    g.vertices.push_back({2, VertexRole::ancilla(1), 3});
    g.vertices.push_back({3, VertexRole::ancilla(0), 2});
    g.edges.push_back({0, 1, 0, 0, Complex{0.5, -0.25}});
    g.edges.push_back({0, 1, 1, 1, Complex{0.0, 1.0}});
    g.edges.push_back({2, 3, 2, 0, Complex{-1.0, 0.0}});
    g.meta = nlohmann::json{{"note", "round-trip probe"}};
    return g;
}

} // namespace

TEST_SUITE("serialization") {

TEST_CASE("round-trip is the identity, including edge order and meta") {
    Graph g = gate_shaped_graph();
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back == g);
}

TEST_CASE("serialized text is byte-deterministic") {
    Graph g = gate_shaped_graph();
    CHECK(graph_to_json(g) == graph_to_json(g));
}

TEST_CASE("1000 random graphs round-trip exactly") {
    SplitMix64 rng(20260816u);
    for (int i = 0; i < 1000; ++i) {
        Graph g = testing::random_graph(rng);
        Graph back = graph_from_json(graph_to_json(g));
        CHECK(back == g);
    }
}

TEST_CASE("malformed JSON is a parse error") {
    CHECK_THROWS_AS(graph_from_json("{\"vertices\": ["), ParseError);
}

TEST_CASE("scalar weight is a schema error") {
    const char* doc = R"({"vertices":[{"id":0,"role":"ancilla","fixed_mode":0,"dim":2},
                                      {"id":1,"role":"ancilla","fixed_mode":0,"dim":2}],
                          "edges":[{"a":0,"b":1,"mode_a":0,"mode_b":0,"weight":1}]})";
    CHECK_THROWS_AS(graph_from_json(doc), SchemaError);
}

TEST_CASE("unknown keys inside vertices or edges are schema errors") {
    const char* doc = R"({"vertices":[{"id":0,"role":"ancilla","fixed_mode":0,"dim":2,"color":"x"},
                                      {"id":1,"role":"ancilla","fixed_mode":0,"dim":2}],
                          "edges":[]})";
    CHECK_THROWS_AS(graph_from_json(doc), SchemaError);
}

TEST_CASE("unknown top-level keys are ignored") {
    const char* doc = R"({"vertices":[{"id":0,"role":"ancilla","fixed_mode":0,"dim":2},
                                      {"id":1,"role":"ancilla","fixed_mode":0,"dim":2}],
                          "edges":[], "future_extension": 42})";
    Graph g = graph_from_json(doc);
    CHECK(g.vertices.size() == 2);
}

TEST_CASE("mode past the endpoint dimension is an invariant error") {
    const char* doc = R"({"vertices":[{"id":0,"role":"ancilla","fixed_mode":0,"dim":2},
                                      {"id":1,"role":"ancilla","fixed_mode":0,"dim":2}],
                          "edges":[{"a":0,"b":1,"mode_a":0,"mode_b":7,"weight":[1.0,0.0]}]})";
    CHECK_THROWS_AS(graph_from_json(doc), ValidationError);
}

TEST_CASE("role and field pairing are enforced") {
    // input without position
    const char* doc1 = R"({"vertices":[{"id":0,"role":"input","dim":2}],"edges":[]})";
    CHECK_THROWS_AS(graph_from_json(doc1), SchemaError);
    // ancilla with position instead of fixed_mode
    const char* doc2 = R"({"vertices":[{"id":0,"role":"ancilla","position":0,"dim":2}],"edges":[]})";
    CHECK_THROWS_AS(graph_from_json(doc2), SchemaError);
    // unknown role string
    const char* doc3 = R"({"vertices":[{"id":0,"role":"detector","fixed_mode":0,"dim":2}],"edges":[]})";
    CHECK_THROWS_AS(graph_from_json(doc3), SchemaError);
}

TEST_CASE("weights serialize as [re, im] pairs") {
    Graph g = gate_shaped_graph();
    nlohmann::json doc = graph_to_json_value(g);
    CHECK(doc["edges"][0]["weight"].is_array());
    CHECK(doc["edges"][0]["weight"][0].get<double>() == doctest::Approx(0.5));
    CHECK(doc["edges"][0]["weight"][1].get<double>() == doctest::Approx(-0.25));
}

TEST_CASE("file save and load round-trip") {
    Graph g = gate_shaped_graph();
    const std::string path = "round_trip_probe.json";
    save_graph_file(g, path);
    Graph back = load_graph_file(path);
    CHECK(back == g);
    std::remove(path.c_str());
}

TEST_CASE("loading a missing file is a parse error") {
    CHECK_THROWS_AS(load_graph_file("no/such/file.json"), ParseError);
}

} // TEST_SUITE
