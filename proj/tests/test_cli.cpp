#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>

#include "graphon/cospectral.hpp"
#include "graphon/cut_norm.hpp"
#include "graphon/errors.hpp"
#include "graphon/densities.hpp"
#include "graphon/json_io.hpp"
#include "graphon/sampling.hpp"
#include "graphon/spectral.hpp"
#include "graphon/step_graphon.hpp"

#include "test_util.hpp"

namespace fs = std::filesystem;
using graphon::SimpleGraph;
using graphon::StepGraphon;

namespace {

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("graphon_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string file_with(const std::string& name, const std::string& content) {
    const std::string path = (work_dir() / name).string();
    test_util::write_file(path, content);
    return path;
}

std::string graphon_file(const std::string& name, const StepGraphon& w) {
    return file_with(name, graphon::to_json(w).dump(2) + "\n");
}

std::string run_cli(const std::string& args, int& exit_code) {
    return test_util::run_command(std::string(GRAPHON_CLI_PATH) + " " + args + " 2>/dev/null",
                                  exit_code);
}

std::string run_cli_merged(const std::string& args, int& exit_code) {
    return test_util::run_command(std::string(GRAPHON_CLI_PATH) + " " + args + " 2>&1",
                                  exit_code);
}

std::string half_path() {
    static const std::string p = graphon_file("half.json", StepGraphon::constant(0.5));
    return p;
}

std::string half_square_path() {
    static const std::string p =
        graphon_file("half_square.json", StepGraphon({0.5, 0.5}, {{1.0, 0.0}, {0.0, 0.0}}));
    return p;
}

} // namespace

TEST_CASE("spectrum subcommand") {
    int code = -1;
    const std::string out = run_cli("spectrum " + half_path(), code);
    CHECK(code == 0);
    const auto j = graphon::json::parse(out);
    REQUIRE(j.at("eigenvalues").size() == 1);
    CHECK(std::abs(j.at("eigenvalues")[0].get<double>() - 0.5) <= 1e-10);

    const std::string tuned =
        run_cli("spectrum " + half_path() + " --zero-tol 1e-12 --group-tol 1e-8", code);
    CHECK(code == 0);
    CHECK(graphon::json::parse(tuned).at("zero_tol").get<double>() == 1e-12);
}

TEST_CASE("cycles subcommand") {
    const std::string k2 =
        graphon_file("k2.json", graphon::graph_to_graphon(SimpleGraph::complete(2)));
    int code = -1;
    const std::string out = run_cli("cycles " + k2 + " --kmax 4", code);
    CHECK(code == 0);
    const auto j = graphon::json::parse(out);
    CHECK(j.at("k_min").get<int>() == 3);
    REQUIRE(j.at("values").size() == 2);
    CHECK(std::abs(j.at("values")[0].get<double>()) <= 1e-12);
    CHECK(std::abs(j.at("values")[1].get<double>() - 0.125) <= 1e-12);
}

TEST_CASE("cospectral subcommand on both verdicts") {
    int code = -1;
    const std::string yes = run_cli("cospectral " + half_path() + " " + half_square_path(), code);
    CHECK(code == 0);
    const auto jy = graphon::json::parse(yes);
    CHECK(jy.at("cospectral").get<bool>());
    CHECK(jy.at("intertwiner").at("unitarity_residual").get<double>() < 1e-9);
    CHECK(jy.at("intertwiner").at("intertwining_residual").get<double>() < 1e-9);

    const std::string third = graphon_file("third.json", StepGraphon::constant(1.0 / 3.0));
    const std::string no = run_cli("cospectral " + half_path() + " " + third, code);
    CHECK(code == 0);
    const auto jn = graphon::json::parse(no);
    CHECK(!jn.at("cospectral").get<bool>());
    CHECK(jn.contains("discrimination"));
    CHECK(jn.at("discrimination").at("witness_k").get<int>() >= 3);
}

TEST_CASE("cutnorm subcommand") {
    int code = -1;
    const std::string out = run_cli("cutnorm " + half_path() + " " + half_square_path(), code);
    CHECK(code == 0);
    const auto j = graphon::json::parse(out);
    CHECK(std::abs(j.at("value").get<double>() - 0.25) <= 1e-12);
    CHECK(j.at("s_mask").size() == 2);
    CHECK(j.at("t_mask").size() == 2);
}

TEST_CASE("sample subcommand emits the same graph in both formats") {
    int code = -1;
    const std::string js = run_cli("sample " + half_path() + " --n 30 --seed 5", code);
    CHECK(code == 0);
    const SimpleGraph from_json = graphon::simple_graph_from_json(graphon::json::parse(js));

    const std::string txt =
        run_cli("sample " + half_path() + " --n 30 --seed 5 --out edgelist", code);
    CHECK(code == 0);
    const SimpleGraph from_text = graphon::simple_graph_from_text(txt);

    CHECK(from_json.n() == 30);
    CHECK(from_json.edges() == from_text.edges());
}

TEST_CASE("density subcommand accepts edge-list patterns") {
    const std::string pattern = file_with("edge.txt", "n 2\n0 1\n");
    int code = -1;
    const std::string out = run_cli("density " + pattern + " " + half_path(), code);
    CHECK(code == 0);
    CHECK(std::abs(graphon::json::parse(out).at("value").get<double>() - 0.5) <= 1e-12);
}

TEST_CASE("demo subcommand structure") {
    int code = -1;
    const std::string out = run_cli("demo-theorem42 --seeds 1 2", code);
    CHECK(code == 0);
    const auto j = graphon::json::parse(out);
    CHECK(j.at("cospectral_pair").get<bool>());
    CHECK(j.at("threshold").get<double>() == 0.125);
    CHECK(j.at("trials").size() == 6); // three sizes, two seeds
    for (const auto& t : j.at("trials")) {
        CHECK(t.at("n").get<int>() >= 50);
        CHECK(t.at("pass").is_boolean());
    }
}

TEST_CASE("converge subcommand") {
    int code = -1;
    const std::string out = run_cli("converge " + half_path() + " --n-list 1 50 --seed 23", code);
    CHECK(code == 0);
    const auto j = graphon::json::parse(out);
    CHECK(j.at("rng").get<std::string>() == "splitmix64-counter");
    REQUIRE(j.at("rows").size() == 2);
    CHECK(j.at("rows")[0].at("n").get<int>() == 1);
    CHECK(j.at("rows")[0].at("l1").get<double>() == 0.0);
    CHECK(j.at("rows")[0].at("top_eigs").empty());
    CHECK(j.at("rows")[1].at("n").get<int>() == 50);
}

TEST_CASE("failure exit codes and messages") {
    int code = -1;
    std::string out = run_cli_merged("spectrum " + (work_dir() / "missing.json").string(), code);
    CHECK(code == 2);
    CHECK(out.rfind("error: ", 0) == 0);

    const std::string malformed = file_with("malformed.json", "{ weights: [");
    run_cli_merged("spectrum " + malformed, code);
    CHECK(code == 2);

    const std::string asym = file_with(
        "asym.json", R"({"weights": [0.5, 0.5], "values": [[0.2, 0.3], [0.4, 0.2]]})");
    out = run_cli_merged("spectrum " + asym, code);
    CHECK(code == 2);
    CHECK(out.rfind("error: ", 0) == 0);

    // 25 blocks refuse exact cut-norm enumeration
    std::vector<std::vector<double>> vals(25, std::vector<double>(25, 0.5));
    const std::string big =
        graphon_file("big.json", StepGraphon(std::vector<double>(25, 0.04), vals));
    out = run_cli_merged("cutnorm " + big + " " + big, code);
    CHECK(code == 2);
    CHECK(out.rfind("refused: ", 0) == 0);

    run_cli_merged("no-such-subcommand", code);
    CHECK(code == 2);
    run_cli_merged("", code);
    CHECK(code == 2);

    run_cli_merged("--help", code);
    CHECK(code == 0);
}

TEST_CASE("repeated invocations are byte-identical") {
    const std::string k2 =
        graphon_file("k2_det.json", graphon::graph_to_graphon(SimpleGraph::complete(2)));
    const std::string pattern = file_with("edge_det.txt", "n 2\n0 1\n");
    const std::string invocations[] = {
        "spectrum " + half_path(),
        "cycles " + k2 + " --kmax 6",
        "cospectral " + half_path() + " " + half_square_path(),
        "cutnorm " + half_path() + " " + half_square_path(),
        "sample " + half_path() + " --n 100 --seed 7",
        "sample " + half_path() + " --n 40 --seed 7 --out edgelist",
        "density " + pattern + " " + half_path(),
        "demo-theorem42 --seeds 1 2",
        "converge " + half_path() + " --n-list 1 20 --seed 3",
    };
    for (const std::string& args : invocations) {
        int code_a = -1, code_b = -1;
        const std::string a = run_cli(args, code_a);
        const std::string b = run_cli(args, code_b);
        CHECK(code_a == 0);
        CHECK(code_b == 0);
        CHECK(a == b);
    }
}

TEST_CASE("JSON documents round-trip through their parsers") {
    const StepGraphon w = test_util::random_graphon(4, 501);
    const auto jw = graphon::to_json(w);
    CHECK(graphon::to_json(graphon::step_graphon_from_json(jw)).dump() == jw.dump());

    const SimpleGraph g = test_util::random_graph(12, 0.4, 502);
    const auto jg = graphon::to_json(g);
    CHECK(graphon::to_json(graphon::simple_graph_from_json(jg)).dump() == jg.dump());
    CHECK(graphon::simple_graph_from_text(graphon::simple_graph_to_text(g)).edges() == g.edges());

    const auto sp = graphon::decompose(w).spectrum;
    const auto js = graphon::to_json(sp);
    CHECK(graphon::to_json(graphon::spectrum_from_json(js)).dump() == js.dump());

    const auto profile = graphon::cycle_profile(w, 8);
    const auto jp = graphon::to_json(profile);
    CHECK(graphon::to_json(graphon::cycle_profile_from_json(jp)).dump() == jp.dump());

    const auto cert = graphon::cut_norm_exact(w, test_util::random_graphon(3, 503));
    const auto jc = graphon::to_json(cert);
    CHECK(graphon::to_json(graphon::certificate_from_json(jc)).dump() == jc.dump());

    const auto report =
        graphon::discriminate(StepGraphon::constant(0.5), StepGraphon::constant(0.75));
    const auto jr = graphon::to_json(report);
    CHECK(graphon::to_json(graphon::discrimination_from_json(jr)).dump() == jr.dump());

    const auto twin = graphon::build_intertwiner(StepGraphon::constant(0.5),
                                                 StepGraphon({0.5, 0.5}, {{1.0, 0.0}, {0.0, 0.0}}));
    const auto jt = graphon::to_json(twin);
    CHECK(graphon::to_json(graphon::intertwiner_from_json(jt)).dump() == jt.dump());

    const auto conv = graphon::convergence_report(StepGraphon::constant(0.5), {1, 20}, 3);
    const auto jv = graphon::to_json(conv);
    CHECK(graphon::to_json(graphon::convergence_from_json(jv)).dump() == jv.dump());

    const auto demo = graphon::theorem42_demo({30}, {1, 2});
    const auto jd = graphon::to_json(demo);
    CHECK(graphon::to_json(graphon::theorem42_from_json(jd)).dump() == jd.dump());
}

TEST_CASE("file loaders sniff their formats") {
    const std::string gpath = graphon_file("loader.json", test_util::random_graphon(3, 504));
    const StepGraphon w = graphon::load_step_graphon(gpath);
    CHECK(w.blocks() == 3);

    const SimpleGraph g = test_util::random_graph(8, 0.5, 505);
    const std::string jpath = file_with("graph.json", graphon::to_json(g).dump());
    const std::string tpath = file_with("graph.txt", graphon::simple_graph_to_text(g));
    CHECK(graphon::load_simple_graph(jpath).edges() == g.edges());
    CHECK(graphon::load_simple_graph(tpath).edges() == g.edges());

    const std::string empty = file_with("empty.txt", "");
    CHECK_THROWS_AS(graphon::load_simple_graph(empty), graphon::invalid_input);
}
