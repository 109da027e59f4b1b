#include "qcrystal/cli.hpp"
#include "qcrystal/q_crystal.hpp"
#include "qcrystal/serialize.hpp"
#include "qcrystal/tableau_crystal.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qcrystal;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("vector crystal in DOT") {
    const Run r = run({"graph", "--vector", "-n", "3", "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.out == "digraph crystal {\n"
                   "  rankdir=LR;\n"
                   "  n0 [label=\"1\"];\n"
                   "  n1 [label=\"2\"];\n"
                   "  n2 [label=\"3\"];\n"
                   "  n0 -> n1 [label=\"1\"];\n"
                   "  n0 -> n1 [label=\"1̄\", style=dashed];\n"
                   "  n1 -> n2 [label=\"2\"];\n"
                   "}\n");
}

TEST_CASE("graph output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"graph", "--tensor", "3", "-n", "3", "--format", "json"},
             {"graph", "--shape", "3,1", "-n", "3"},
         }) {
        const Run a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("graph sources") {
    const auto j = nlohmann::json::parse(run({"graph", "--tensor", "2", "-n", "3", "--format", "json"}).out);
    CHECK(j["nodes"].size() == 9);
    CHECK(j["edges"].size() == 12);
    CHECK(j["nodes"][0]["kind"] == "word");
    const auto s = nlohmann::json::parse(run({"graph", "--shape", "1", "-n", "4", "--format", "json"}).out);
    CHECK(s["nodes"].size() == 4);
    CHECK(s["nodes"][0]["kind"] == "tableau");
    CHECK(s["nodes"][0]["payload"]["cells"][0]["entry"] == 1);
}

TEST_CASE("DOT and JSON describe the same graph") {
    for (const CrystalGraph& g : {tensor_power(3, 2), vector_crystal(4), crystal_of_shape(StrictPartition({2, 1}), 3),
                                  crystal_of_shape(StrictPartition({3, 1}), 3)}) {
        const auto j = nlohmann::json::parse(to_json(g).dump());
        CHECK(sketch_from_dot(to_dot(g)) == sketch_from_json(j));
        CHECK(same_crystal(graph_from_json(j), g));
    }
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n": 2})")), std::invalid_argument);
}

TEST_CASE("verify subcommand exit codes and reports") {
    CHECK(run({"verify", "--theorem", "b", "--shape", "2,1", "-n", "3"}).code == 0);
    const Run e3 = run({"verify", "--theorem", "e3", "--shape", "1", "-n", "3"});
    CHECK(e3.code == 0);
    const auto report = nlohmann::json::parse(e3.out);
    CHECK(report["records"][0]["status"] == "pass");
    CHECK(report["records"][0]["instance"].get<std::string>().find("size 9") != std::string::npos);
    CHECK(report["records"][1]["check"] == "components labelled by lambda+eps_j strict");
    const Run bad = run({"verify", "--theorem", "b", "--shape", "3", "-n", "2"});
    CHECK(bad.code == 1);
    CHECK(nlohmann::json::parse(bad.out)["records"][0].contains("witness"));
    CHECK(run({"verify", "--qrep", "relations", "-n", "2", "-N", "2"}).code == 0);
    CHECK(run({"verify", "--qrep", "comult", "-n", "2"}).code == 0);
    CHECK(run({"verify", "--qrep", "residue", "-n", "2", "-N", "2"}).code == 0);
    CHECK(run({"verify", "--theorem", "reading", "--shape", "4,2,1", "-n", "3"}).code == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"conjecture", "--shape", "", "-n", "2"}).code == 2);
    CHECK(run({"graph", "--shape", "2,2", "-n", "3"}).code == 2);
    CHECK(run({"graph", "--shape", "3,2,1", "-n", "2"}).code == 2);
    CHECK(run({"graph", "--vector", "-n", "3", "--format", "svg"}).code == 2);
    CHECK(run({"graph", "--vector", "--tensor", "2", "-n", "3"}).code == 2);
    CHECK(run({"graph", "--vector"}).code == 2);
    CHECK(run({"verify", "--theorem", "b", "--qrep", "comult", "--shape", "1", "-n", "2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("conjecture report") {
    const Run r = run({"conjecture", "--shape", "2,1", "-n", "3"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK_FALSE(j["highest_weight_vectors"].empty());
    const auto none = nlohmann::json::parse(run({"conjecture", "--shape", "1", "-n", "2", "--budget", "0"}).out);
    for (const auto& e : none["highest_weight_vectors"])
        CHECK(e["expression"] == "not found");
}

TEST_CASE("output directory override") {
    const auto dir = std::filesystem::temp_directory_path() / "qcrystal_cli_test";
    std::filesystem::remove_all(dir);
    ::setenv("QCRYSTAL_OUTPUT_DIR", dir.c_str(), 1);
    const Run r = run({"graph", "--vector", "-n", "2", "-o", "sub/vector.dot"});
    ::unsetenv("QCRYSTAL_OUTPUT_DIR");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(dir / "sub" / "vector.dot");
    std::stringstream text;
    text << f.rdbuf();
    CHECK(text.str() == to_dot(vector_crystal(2)));
    std::filesystem::remove_all(dir);
}
