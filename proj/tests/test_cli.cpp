// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

namespace graphgate_cli_tests {
namespace {

namespace fs = std::filesystem;

struct CliResult {
    int code = -1;
    std::string out;
};

// stdout captured, stderr dropped; diagnostics must not pollute stdout anyway
CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GRAPHGATE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = ::pclose(pipe);
    CliResult res;
    res.out = std::move(out);
    if (WIFEXITED(status)) res.code = WEXITSTATUS(status);
    return res;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: ", path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    out << payload;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("graphgate-cli-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string fixture_path(const std::string& id) {
    return std::string(GRAPHGATE_FIXTURE_DIR) + "/" + id + ".json";
}

std::string golden_path(const std::string& name) {
    return std::string(GRAPHGATE_GOLDEN_DIR) + "/" + name;
}

const std::string kHalfIdentity = R"({
  "vertices": [
    {"id": 0, "role": "input", "position": 0, "dim": 2},
    {"id": 1, "role": "output", "position": 0, "dim": 2}
  ],
  "edges": [
    {"a": 0, "b": 1, "mode_a": 0, "mode_b": 0, "weight": [1.0, 0.0]}
  ]
})";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("help is reachable and empty invocations are usage errors") {
    const CliResult help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("discover") != std::string::npos);
    CHECK(help.out.find("verify") != std::string::npos);
    CHECK(help.out.find("fixtures") != std::string::npos);

    CHECK(run_cli("").code == 2);
    CHECK(run_cli("no-such-command").code == 2);
}

TEST_CASE("verify exits 0 on a passing fixture and prints the table") {
    const CliResult res = run_cli("verify " + fixture_path("cx-2-2") + " cx:2,2 --tol 1e-9");
    CHECK(res.code == 0);
    CHECK(res.out.find("feed-forwardable  yes") != std::string::npos);
    CHECK(res.out.find("truth table:") != std::string::npos);
}

TEST_CASE("the verify report JSON is schema-stable") {
    const CliResult res =
        run_cli("verify " + fixture_path("cx-2-2") + " cx:2,2 --tol 1e-9 --report -");
    CHECK(res.code == 0);
    CHECK(res.out == read_file(golden_path("cx22_verify_report.json")));
}

TEST_CASE("verify exits 1 when the graph misses the tolerance") {
    TempDir tmp;
    write_file(tmp.file("half.json"), kHalfIdentity);
    const CliResult res = run_cli("verify " + tmp.file("half.json") + " teleport:2");
    CHECK(res.code == 1);
    CHECK(res.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("verify " + fixture_path("cx-2-2") + " frobnicate").code == 2);
    CHECK(run_cli("discover frobnicate").code == 2);
    // arity mismatch between graph roles and the requested gate
    CHECK(run_cli("verify " + fixture_path("cx-2-2") + " ccx:2").code == 2);
    // malformed forbid pair
    CHECK(run_cli("discover swap:2 --forbid nope").code == 2);
}

TEST_CASE("I/O and schema problems exit 4") {
    TempDir tmp;
    CHECK(run_cli("verify /nonexistent-graph.json swap:2").code == 4);

    write_file(tmp.file("broken.json"), "this is { not json");
    CHECK(run_cli("verify " + tmp.file("broken.json") + " swap:2").code == 4);

    write_file(tmp.file("schema.json"),
               R"({"vertices": [{"id": 0, "role": "input", "dim": 2}], "edges": []})");
    CHECK(run_cli("verify " + tmp.file("schema.json") + " teleport:2").code == 4);
}

TEST_CASE("discovery runs are byte-reproducible") {
    TempDir tmp;
    const std::string flags = "discover swap:2 --ancillas 0 --seed 1 --restarts 40 "
                              "--real-only --snap -o ";
    CHECK(run_cli(flags + tmp.file("a.json")).code == 0);
    CHECK(run_cli(flags + tmp.file("b.json")).code == 0);
    const std::string a = read_file(tmp.file("a.json"));
    CHECK(a == read_file(tmp.file("b.json")));

    // the output embeds the discovery record used for provenance pins
    const nlohmann::json doc = nlohmann::json::parse(a);
    const nlohmann::json& d = doc.at("meta").at("discovery");
    CHECK(d.at("gate") == "swap:2");
    CHECK(d.at("seed") == 1);
    CHECK(d.at("edge_count") == 4);
    CHECK(d.at("trace").is_array());
}

TEST_CASE("exhausted discovery exits 3") {
    const CliResult res =
        run_cli("discover swap:2 --restarts 1 --steps 2 --search-threshold 1e-12");
    CHECK(res.code == 3);
}

TEST_CASE("discover without an output file prints a human summary") {
    const CliResult res =
        run_cli("discover swap:2 --seed 1 --restarts 40 --real-only --snap");
    CHECK(res.code == 0);
    CHECK(res.out.find("gate           swap:2") != std::string::npos);
    CHECK(res.out.find("final loss") != std::string::npos);
    CHECK(res.out.find("feed-forwardable  yes") != std::string::npos);
}

TEST_CASE("a config file fills in flags the command line left unset") {
    TempDir tmp;
    write_file(tmp.file("cfg.json"),
               R"({"seed": 5, "real-only": true, "snap": true, "restarts": 40})");

    CHECK(run_cli("discover swap:2 --config " + tmp.file("cfg.json") + " -o " +
                  tmp.file("from_config.json"))
              .code == 0);
    CHECK(run_cli("discover swap:2 --seed 5 --real-only --snap --restarts 40 -o " +
                  tmp.file("from_flags.json"))
              .code == 0);
    CHECK(read_file(tmp.file("from_config.json")) == read_file(tmp.file("from_flags.json")));

    // explicit flags beat config values
    CHECK(run_cli("discover swap:2 --config " + tmp.file("cfg.json") + " --seed 1 -o " +
                  tmp.file("override.json"))
              .code == 0);
    CHECK(run_cli("discover swap:2 --seed 1 --real-only --snap --restarts 40 -o " +
                  tmp.file("plain_seed1.json"))
              .code == 0);
    CHECK(read_file(tmp.file("override.json")) == read_file(tmp.file("plain_seed1.json")));
    CHECK(nlohmann::json::parse(read_file(tmp.file("override.json")))
              .at("meta")
              .at("discovery")
              .at("seed") == 1);

    write_file(tmp.file("bad.json"), "[1,2,3]");
    CHECK(run_cli("discover swap:2 --config " + tmp.file("bad.json")).code == 4);
}

TEST_CASE("state prints amplitude-sorted terms") {
    const CliResult res = run_cli("state " + fixture_path("teleport2-pi"));
    CHECK(res.code == 0);
    std::istringstream lines(res.out);
    std::string l0, l1, l2;
    std::getline(lines, l0);
    std::getline(lines, l1);
    std::getline(lines, l2);
    CHECK(l0 == "# terms 2, norm2 0.5");
    CHECK(l1.rfind("|0,0,0,0>", 0) == 0);
    CHECK(l2.rfind("|1,1,0,0>", 0) == 0);
    CHECK(l1.find("|amp| 0.5") != std::string::npos);

    const CliResult norm = run_cli("state " + fixture_path("teleport2-pi") + " --normalize");
    CHECK(norm.code == 0);
    std::istringstream nl(norm.out);
    std::getline(nl, l0);
    CHECK(l0 == "# terms 2, norm2 1");
}

TEST_CASE("export covers every documented format") {
    TempDir tmp;
    const std::string g = fixture_path("cx-2-2");

    const CliResult dot = run_cli("export " + g + " --format dot");
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("graph experiment {", 0) == 0);

    const CliResult pi = run_cli("export " + g + " --format blueprint");
    CHECK(pi.code == 0);
    CHECK(pi.out.find("path identity") != std::string::npos);

    const CliResult pe = run_cli("export " + g + " --format blueprint-pe");
    CHECK(pe.code == 0);
    CHECK(pe.out.find("path-information erasure") != std::string::npos);

    // JSON export of an untouched file reproduces it byte for byte
    const CliResult js = run_cli("export " + g + " --format json");
    CHECK(js.code == 0);
    CHECK(js.out == read_file(g));

    CHECK(run_cli("export " + g + " --format png").code == 2);

    CHECK(run_cli("export " + g + " --format dot -o " + tmp.file("g.dot")).code == 0);
    CHECK(read_file(tmp.file("g.dot")) == dot.out);
}

TEST_CASE("the fixtures commands list, check and regenerate") {
    const CliResult list = run_cli("fixtures list");
    CHECK(list.code == 0);
    CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 10);
    CHECK(list.out.find("swap2-crossing") != std::string::npos);
    CHECK(list.out.find("teleport2-pi  [teleport witness]") != std::string::npos);
    CHECK(list.out.find("ccx-3  [long-running regen]") != std::string::npos);

    const CliResult check = run_cli("fixtures check");
    CHECK(check.code == 0);
    size_t passes = 0, pos = 0;
    while ((pos = check.out.find("PASS", pos)) != std::string::npos) {
        ++passes;
        pos += 4;
    }
    CHECK(passes == 10);

    CHECK(run_cli("fixtures check cx-2-2").code == 0);
    CHECK(run_cli("fixtures check no-such-fixture").code == 2);

    const CliResult regen = run_cli("fixtures regen swap2-crossing");
    CHECK(regen.code == 0);
    CHECK(regen.out.rfind("ok", 0) == 0);

    const CliResult heavy = run_cli("fixtures regen ccx-3");
    CHECK(heavy.code == 0);
    CHECK(heavy.out.find("long-running") != std::string::npos);

    // an explicit starved budget is honored and fails honestly
    CHECK(run_cli("fixtures regen swap2-crossing --restarts 1 --steps 2").code == 3);
}

TEST_CASE("tampered fixtures fail the check from an override directory") {
    TempDir tmp;
    nlohmann::json doc = nlohmann::json::parse(read_file(fixture_path("cx-2-2")));
    doc["edges"][0]["weight"][0] = doc["edges"][0]["weight"][0].get<double>() + 0.05;
    write_file(tmp.file("cx-2-2.json"), doc.dump(2) + "\n");

    const CliResult res = run_cli("fixtures check cx-2-2 --dir " + tmp.path.string());
    CHECK(res.code == 1);
    CHECK(res.out.find("PASS") == std::string::npos);
}

TEST_CASE("discovered graphs pin through the fixtures workflow") {
    TempDir tmp;
    CHECK(run_cli("discover swap:2 --seed 1 --restarts 40 --real-only --snap -o " +
                  tmp.file("found.json"))
              .code == 0);
    const CliResult pin = run_cli("fixtures pin swap2-crossing --from " + tmp.file("found.json") +
                                  " --dir " + tmp.path.string() + " --method \"cli suite probe\"");
    CHECK(pin.code == 0);
    CHECK(pin.out.rfind("pinned  swap2-crossing", 0) == 0);

    CHECK(run_cli("fixtures check swap2-crossing --dir " + tmp.path.string()).code == 0);

    const nlohmann::json doc =
        nlohmann::json::parse(read_file(tmp.file("swap2-crossing.json")));
    const nlohmann::json& prov = doc.at("meta").at("fixture").at("provenance");
    CHECK(prov.at("method") == "cli suite probe");
    CHECK(prov.at("seed") == 1);
    CHECK(prov.contains("cfg_digest"));
    CHECK_FALSE(doc.at("meta").contains("discovery"));
}

} // TEST_SUITE

} // namespace graphgate_cli_tests
