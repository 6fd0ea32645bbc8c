// Timing comparison between the parallel kernels and the serial reference
// implementations, with agreement checks on every measured pair.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "graphon/cut_norm.hpp"
#include "graphon/densities.hpp"
#include "graphon/reference.hpp"
#include "graphon/rng.hpp"
#include "graphon/sampling.hpp"
#include "graphon/simple_graph.hpp"
#include "graphon/step_graphon.hpp"

namespace {

using graphon::SimpleGraph;
using graphon::StepGraphon;

double time_best_of(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

StepGraphon random_graphon(int m, std::uint64_t seed) {
    std::vector<double> weights(m);
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
        weights[i] = 0.2 + graphon::rng::uniform(seed, 100, static_cast<std::uint64_t>(i));
        total += weights[i];
    }
    for (auto& w : weights) w /= total;
    std::vector<double> values(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            const double v =
                graphon::rng::uniform(seed, 101, static_cast<std::uint64_t>(i) * m + j);
            values[static_cast<std::size_t>(i) * m + j] = v;
            values[static_cast<std::size_t>(j) * m + i] = v;
        }
    }
    return StepGraphon(std::move(weights), std::move(values));
}

SimpleGraph random_graph(int n, double p, std::uint64_t seed) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (graphon::rng::uniform(seed, 102, static_cast<std::uint64_t>(i) * n + j) < p)
                edges.emplace_back(i, j);
    return SimpleGraph(n, std::move(edges));
}

void report(const char* name, double serial_s, double parallel_s, bool agree) {
    std::printf("%-22s %12.4f %12.4f %9.2fx   %s\n", name, serial_s * 1e3, parallel_s * 1e3,
                serial_s / parallel_s, agree ? "agree" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("%-22s %12s %12s %10s   %s\n", "kernel", "serial (ms)", "parallel (ms)",
                "speedup", "check");

    {
        const StepGraphon w = random_graphon(6, 7);
        const SimpleGraph c9 = SimpleGraph::cycle(9);
        double serial_v = 0.0, parallel_v = 0.0;
        const double ts = time_best_of(3, [&] { serial_v = graphon::reference::density_direct(c9, w); });
        const double tp = time_best_of(3, [&] { parallel_v = graphon::density_direct(c9, w); });
        report("density C9, m=6", ts, tp, std::abs(serial_v - parallel_v) < 1e-9);
    }

    {
        const SimpleGraph g = random_graph(20, 0.4, 11);
        const SimpleGraph c6 = SimpleGraph::cycle(6);
        std::int64_t serial_v = 0, parallel_v = 0;
        const double ts = time_best_of(3, [&] { serial_v = graphon::reference::hom_count(c6, g); });
        const double tp = time_best_of(3, [&] { parallel_v = graphon::hom_count(c6, g); });
        report("hom C6 -> G(20)", ts, tp, serial_v == parallel_v);
    }

    {
        // shared partition keeps the common refinement at 18 blocks
        const StepGraphon u = random_graphon(18, 21);
        const StepGraphon w(u.weights(), random_graphon(18, 22).values());
        double serial_v = 0.0, parallel_v = 0.0;
        const double ts =
            time_best_of(3, [&] { serial_v = graphon::reference::cut_norm_value(u, w); });
        const double tp = time_best_of(3, [&] { parallel_v = graphon::cut_norm_exact(u, w).value; });
        report("cut norm m=18", ts, tp, std::abs(serial_v - parallel_v) < 1e-12);
    }

    {
        const StepGraphon w = random_graphon(8, 33);
        const graphon::SampleSpec spec{2000, 99, w};
        SimpleGraph gs = SimpleGraph::edgeless(1);
        SimpleGraph gp = SimpleGraph::edgeless(1);
        const double ts = time_best_of(3, [&] { gs = graphon::reference::sample_graph(spec); });
        const double tp = time_best_of(3, [&] { gp = graphon::sample_graph(spec); });
        report("sample n=2000", ts, tp, gs == gp);
    }

    return 0;
}
