#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphon/cospectral.hpp"
#include "graphon/cut_norm.hpp"
#include "graphon/densities.hpp"
#include "graphon/errors.hpp"
#include "graphon/json_io.hpp"
#include "graphon/sampling.hpp"
#include "graphon/spectral.hpp"

namespace {

using graphon::json;

json run_cospectral(const std::string& u_path, const std::string& w_path, double tol) {
    const graphon::StepGraphon u = graphon::load_step_graphon(u_path);
    const graphon::StepGraphon w = graphon::load_step_graphon(w_path);
    json out;
    const bool same = graphon::is_cospectral(u, w, tol);
    out["cospectral"] = same;
    out["tol"] = tol;
    if (same) {
        const graphon::Intertwiner t = graphon::build_intertwiner(u, w, tol);
        const graphon::IntertwinerCheck c = graphon::check_intertwiner(t, u, w);
        json summary;
        summary["size"] = t.size();
        summary["unitarity_residual"] = c.unitarity_residual;
        summary["intertwining_residual"] = c.intertwining_residual;
        out["intertwiner"] = summary;
    } else {
        out["discrimination"] = graphon::to_json(graphon::discriminate(u, w));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral and density analysis of step graphons"};
    app.require_subcommand(1);

    std::function<void()> action;

    // spectrum <g.json> [--zero-tol --group-tol]
    std::string sp_path;
    double sp_zero_tol = graphon::kDefaultZeroTol;
    double sp_group_tol = graphon::kDefaultGroupTol;
    auto* sp = app.add_subcommand("spectrum", "nonzero eigenvalues of the kernel operator");
    sp->add_option("graphon", sp_path, "step graphon JSON file")->required();
    sp->add_option("--zero-tol", sp_zero_tol, "modulus below which eigenvalues are dropped");
    sp->add_option("--group-tol", sp_group_tol, "gap below which eigenvalues share a group");
    sp->callback([&] {
        action = [&] {
            const auto w = graphon::load_step_graphon(sp_path);
            const auto d = graphon::decompose(w, sp_zero_tol, sp_group_tol);
            std::cout << graphon::to_json(d.spectrum).dump(2) << "\n";
        };
    });

    // cycles <g.json> --kmax K
    std::string cy_path;
    int cy_kmax = 16;
    auto* cy = app.add_subcommand("cycles", "cycle densities t(C_k, W) for k = 3..kmax");
    cy->add_option("graphon", cy_path, "step graphon JSON file")->required();
    cy->add_option("--kmax", cy_kmax, "largest cycle length (default 16)");
    cy->callback([&] {
        action = [&] {
            const auto w = graphon::load_step_graphon(cy_path);
            std::cout << graphon::to_json(graphon::cycle_profile(w, cy_kmax)).dump(2) << "\n";
        };
    });

    // cospectral <u.json> <w.json> [--tol]
    std::string co_u, co_w;
    double co_tol = graphon::kDefaultGroupTol;
    auto* co = app.add_subcommand("cospectral",
                                  "decide spectrum equality; intertwiner summary or "
                                  "discrimination report");
    co->add_option("u", co_u, "first step graphon JSON file")->required();
    co->add_option("w", co_w, "second step graphon JSON file")->required();
    co->add_option("--tol", co_tol, "eigenvalue matching tolerance");
    co->callback([&] {
        action = [&] { std::cout << run_cospectral(co_u, co_w, co_tol).dump(2) << "\n"; };
    });

    // cutnorm <u.json> <w.json>
    std::string cn_u, cn_w;
    auto* cn = app.add_subcommand("cutnorm", "exact cut norm of the difference, with certificate");
    cn->add_option("u", cn_u, "first step graphon JSON file")->required();
    cn->add_option("w", cn_w, "second step graphon JSON file")->required();
    cn->callback([&] {
        action = [&] {
            const auto u = graphon::load_step_graphon(cn_u);
            const auto w = graphon::load_step_graphon(cn_w);
            std::cout << graphon::to_json(graphon::cut_norm_exact(u, w)).dump(2) << "\n";
        };
    });

    // sample <g.json> --n N --seed S [--out json|edgelist]
    std::string sa_path;
    int sa_n = 0;
    std::uint64_t sa_seed = 0;
    std::string sa_out = "json";
    auto* sa = app.add_subcommand("sample", "draw a random graph from a step graphon");
    sa->add_option("graphon", sa_path, "step graphon JSON file")->required();
    sa->add_option("--n", sa_n, "number of vertices")->required();
    sa->add_option("--seed", sa_seed, "sampling seed")->required();
    sa->add_option("--out", sa_out, "output format: json (default) or edgelist")
        ->check(CLI::IsMember({"json", "edgelist"}));
    sa->callback([&] {
        action = [&] {
            const auto w = graphon::load_step_graphon(sa_path);
            const auto g = graphon::sample_graph({sa_n, sa_seed, w});
            if (sa_out == "edgelist")
                std::cout << graphon::simple_graph_to_text(g);
            else
                std::cout << graphon::to_json(g).dump(2) << "\n";
        };
    });

    // demo-theorem42 [--seeds ...]
    std::vector<std::uint64_t> de_seeds;
    auto* de = app.add_subcommand("demo-theorem42",
                                  "sampled-pair separation demo for the cospectral pair "
                                  "1/2 vs half-square");
    de->add_option("--seeds", de_seeds, "trial seeds (default: 20 fixed seeds)");
    de->callback([&] {
        action = [&] {
            const auto seeds = de_seeds.empty() ? graphon::default_demo_seeds() : de_seeds;
            const auto report = graphon::theorem42_demo({50, 100, 200}, seeds);
            std::cout << graphon::to_json(report).dump(2) << "\n";
        };
    });

    // density <f.graph> <w.json>
    std::string dn_graph, dn_graphon;
    auto* dn = app.add_subcommand("density", "homomorphism density of a graph in a step graphon");
    dn->add_option("pattern", dn_graph, "pattern graph file (JSON or edge-list text)")->required();
    dn->add_option("graphon", dn_graphon, "step graphon JSON file")->required();
    dn->callback([&] {
        action = [&] {
            const auto f = graphon::load_simple_graph(dn_graph);
            const auto w = graphon::load_step_graphon(dn_graphon);
            json out;
            out["value"] = graphon::density_direct(f, w);
            std::cout << out.dump(2) << "\n";
        };
    });

    // converge <g.json> --n-list ... --seed S
    std::string cv_path;
    std::vector<int> cv_ns;
    std::uint64_t cv_seed = 0;
    auto* cv = app.add_subcommand("converge", "norms and leading eigenvalues of samples per n");
    cv->add_option("graphon", cv_path, "step graphon JSON file")->required();
    cv->add_option("--n-list", cv_ns, "sample sizes")->required();
    cv->add_option("--seed", cv_seed, "base seed (per-n seeds derive from it)");
    cv->callback([&] {
        action = [&] {
            const auto w = graphon::load_step_graphon(cv_path);
            const auto report = graphon::convergence_report(w, cv_ns, cv_seed);
            std::cout << graphon::to_json(report).dump(2) << "\n";
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        action();
        return 0;
    } catch (const graphon::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const graphon::refusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
