#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "wrep/cli.hpp"
#include "wrep/error.hpp"
#include "wrep/fixtures.hpp"

using namespace wrep;
using nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;

    json parsed() const { return json::parse(out); }
};

CliResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "wrep");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture_path(const std::string& name) { return std::string(WREP_FIXTURE_DIR) + "/" + name; }

CliResult cli_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    return cli(std::move(args));
}

}  // namespace

TEST_CASE("instance loading by kind") {
    CHECK(load_instance("3 2\n1 2\n2 3\n").kind == InputKind::graph);
    CHECK(load_instance("3 2\n1 2\n2 3\n").graph->size() == 2);
    const auto emb = testing::fixture("w5");
    CHECK(emb.kind == InputKind::embedding);
    CHECK(emb.embedding.has_value());
    CHECK(emb.graph->order() == 6);
    const auto poly = load_instance("ab\naa\n");
    CHECK(poly.kind == InputKind::polyomino);
    CHECK(poly.polyomino->tile_count() == 2);
    CHECK_FALSE(poly.graph.has_value());
    const auto tri = testing::fixture("fig4");
    CHECK(tri.kind == InputKind::triangulation);
    CHECK(tri.points.size() == 9);
    CHECK(tri.embedding->graph() == *tri.graph);

    CHECK_THROWS_AS(load_instance(""), parse_error);
    CHECK_THROWS_AS(load_instance("3 1\n1 4\n"), parse_error);
    CHECK_THROWS_AS(load_instance("2 1\n1 2\nrot 1: 2\nrot 2: 1\nouter: 1 2\n3 4\n"), parse_error);
    CHECK_THROWS_AS(load_instance("a\ndiag: 0 0 3 3\n"), parse_error);
    CHECK(std::string(to_string(InputKind::triangulation)) == "triangulation");
}

TEST_CASE("shipped fixture files match the built-in texts") {
    CHECK(fixture_names().size() == 12);
    for (const auto& name : fixture_names()) {
        CHECK(testing::read_fixture(name) == builtin_fixture(name));
        CHECK_NOTHROW(load_instance(builtin_fixture(name)));
    }
    CHECK_THROWS_AS(builtin_fixture("nope"), invalid_parameter);
}

TEST_CASE("configuration validation") {
    Config c;
    CHECK_NOTHROW(validate(c));
    c.samples = 0;
    CHECK_THROWS_AS(validate(c), invalid_parameter);
    c = Config{};
    c.limits.orientation_edges = -1;
    CHECK_THROWS_AS(validate(c), invalid_parameter);
    c = Config{};
    c.census_cells = 0;
    CHECK_THROWS_AS(validate(c), invalid_parameter);
    CHECK_THROWS_AS(run_campaign("T9", Config{}), invalid_parameter);
}

TEST_CASE("every campaign passes at its default size") {
    CHECK(campaign_ids() == std::vector<std::string>{"T2", "T3", "T4", "T5", "T6", "T7", "C1", "L1"});
    for (const auto& id : campaign_ids()) {
        Config c;
        if (id == "T6") c.limits.orientation_edges = 40;
        const auto r = run_campaign(id, c);
        INFO(report_human(r));
        CHECK(r.campaign == id);
        CHECK(r.passed());
        CHECK_FALSE(r.partial);
        CHECK(r.unknown == 0);
        CHECK(r.instances > 0);
        CHECK(exit_code(r) == 0);
        CHECK_FALSE(r.statement.empty());
    }
}

TEST_CASE("campaigns are reproducible") {
    Config c;
    c.seed = 7;
    const auto a = run_campaign("T2", c);
    const auto b = run_campaign("T2", c);
    CHECK(a.instances == b.instances);
    CHECK(a.skipped == b.skipped);
    CHECK(a.counterexamples == b.counterexamples);
}

TEST_CASE("partial campaigns and report fields") {
    const auto r = run_campaign("T6", Config{});
    CHECK(r.partial);
    CHECK(r.unknown > 0);
    CHECK(r.passed());
    CHECK(exit_code(r) == 3);
    const auto j = json::parse(report_json(r));
    for (const auto* key : {"campaign", "statement", "instances", "skipped", "unknown", "partial", "notes",
                            "counterexamples", "seconds", "config", "passed"})
        CHECK(j.contains(key));
    CHECK(j["campaign"] == "T6");
    CHECK(j["partial"] == true);
    CHECK(j["config"]["seed"] == 1);
    CHECK(report_human(r).find("T6") != std::string::npos);

    Report failing;
    failing.campaign = "X";
    failing.counterexamples.push_back({InputKind::graph, "3 0\n", "a", "yes", "b", "no"});
    failing.partial = true;
    CHECK(exit_code(failing) == 1);
    CHECK_FALSE(failing.passed());
    const auto jf = json::parse(report_json(failing));
    REQUIRE(jf["counterexamples"].size() == 1);
    CHECK(jf["counterexamples"][0]["instance"] == "3 0\n");
    CHECK(load_instance(jf["counterexamples"][0]["instance"].get<std::string>()).graph->order() == 3);
}

TEST_CASE("cli decide") {
    const auto w5 = cli_json({"decide", fixture_path("w5")});
    CHECK(w5.code == 1);
    CHECK(w5.parsed()["answer"] == "no");

    auto graph_w5 = cli_json({"generate", "complete", "4"});
    REQUIRE(graph_w5.code == 0);

    const auto right = cli_json({"decide", fixture_path("fig1-right")});
    CHECK(right.code == 0);
    CHECK(right.parsed()["strategy"] == "structural");
    CHECK(right.parsed()["near_triangulation"] == true);

    const auto fig4 = cli_json({"decide", fixture_path("fig4")});
    CHECK(fig4.code == 1);
    CHECK(fig4.parsed()["open_problem"] == true);
    CHECK(fig4.parsed()["vertex_positions"].size() == 9);

    const auto donut = cli_json({"decide", fixture_path("donut")});
    CHECK(donut.code == 3);
    CHECK(donut.parsed()["answer"] == "unknown");
    CHECK(cli_json({"--cap-edges", "40", "decide", fixture_path("donut")}).code != 3);

    const auto human = cli({"decide", fixture_path("w5")});
    CHECK(human.out.find("answer: no") != std::string::npos);
}

TEST_CASE("cli colour") {
    const auto right = cli_json({"colour", fixture_path("fig1-right")});
    CHECK(right.code == 0);
    CHECK(right.parsed()["proper"] == true);
    CHECK(right.parsed()["colouring"].size() == 7);

    const auto mid = cli_json({"colour", fixture_path("fig1-mid")});
    CHECK(mid.code == 1);
    CHECK(mid.parsed()["odd_inner_vertex"] == 6);
    CHECK(mid.parsed()["degree"] == 5);

    const auto c4 = cli_json({"generate", "cycle", "4"});
    REQUIRE(c4.code == 0);
    const std::string path = (std::filesystem::temp_directory_path() / "wrep_c4_embedding.txt").string();
    {
        std::ofstream f(path);
        f << c4.out;
    }
    CHECK(cli({"colour", path}).code == 2);
    CHECK(cli({"colour", fixture_path("w5")}).code == 1);
}

TEST_CASE("cli recognize") {
    const auto fig3 = cli_json({"recognize", fixture_path("fig3")});
    REQUIRE(fig3.code == 0);
    const auto j = fig3.parsed();
    CHECK(j["polyomino"]["tiles"] == 8);
    CHECK(j["graph"]["vertices"] == 22);
    CHECK(j["embedding"]["near_triangulation"] == true);
    CHECK(j["embedding"]["internally_even"] == false);

    const auto donut = cli_json({"recognize", fixture_path("donut")}).parsed();
    CHECK(donut["polyomino"]["internal_hole"].is_array());
    CHECK(donut["embedding"]["near_triangulation"] == false);

    const auto fig2 = cli_json({"recognize", fixture_path("fig2")}).parsed();
    CHECK(fig2["embedding"]["internally_even"] == true);
    // 27 vertices exceeds the default colouring cap.
    CHECK(fig2["graph"]["chromatic_number"].is_null());
    const auto wide = cli_json({"--cap-vertices", "30", "recognize", fixture_path("fig2")}).parsed();
    CHECK(wide["graph"]["chromatic_number"] == 3);
}

TEST_CASE("cli witness") {
    const auto c4 = cli_json({"witness", fixture_path("w4")});
    CHECK(c4.code == 0);
    CHECK(c4.parsed()["verified"] == true);

    const auto w5 = cli_json({"witness", "--k-max", "3", fixture_path("w5")});
    CHECK(w5.code == 3);
    CHECK(w5.parsed()["word"].is_null());
}

TEST_CASE("cli verify and generate") {
    const auto t3 = cli_json({"verify", "T3"});
    CHECK(t3.code == 0);
    CHECK(t3.parsed()["passed"] == true);
    CHECK(cli({"verify", "T6"}).code == 3);
    CHECK(cli({"verify", "T9"}).code == 2);

    const auto word = cli({"generate", "word", "14213243"});
    REQUIRE(word.code == 0);
    CHECK(load_instance(word.out).graph == make_cycle(4));
    const auto fixture = cli({"generate", "fixture", "fig3"});
    CHECK(fixture.out == builtin_fixture("fig3"));
    const auto wheel = cli({"generate", "wheel", "5"});
    CHECK(load_instance(wheel.out).kind == InputKind::embedding);
    const auto census = cli({"generate", "census", "3"});
    CHECK(census.code == 0);
    const auto tri = cli({"--seed", "5", "generate", "triangulation", fixture_path("fig4")});
    CHECK(tri.code == 0);
    CHECK(load_instance(tri.out).kind == InputKind::triangulation);
    CHECK(tri.out == cli({"--seed", "5", "generate", "triangulation", fixture_path("fig4")}).out);
}

TEST_CASE("cli usage errors exit with 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"decide"}).code == 2);
    CHECK(cli({"decide", "/nonexistent/file"}).code == 2);
    CHECK(cli({"--format", "xml", "decide", fixture_path("w5")}).code == 2);
    CHECK(cli({"--cap-edges", "0", "decide", fixture_path("w5")}).code == 2);
    CHECK(cli({"generate", "wheel", "2"}).code == 2);
    CHECK(cli({"generate", "fixture", "nope"}).code == 2);
    CHECK_FALSE(cli({"bogus"}).err.empty());
}
