#include "graphon/sampling.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "graphon/cut_norm.hpp"
#include "graphon/errors.hpp"
#include "graphon/rng.hpp"
#include "graphon/spectral.hpp"

namespace graphon {

namespace {

std::vector<int> sample_blocks(const StepGraphon& source, int n, std::uint64_t seed) {
    const std::vector<double> bounds = source.partition().boundaries();
    std::vector<int> block(n);
    for (int i = 0; i < n; ++i) {
        const double x = rng::uniform(seed, 0, static_cast<std::uint64_t>(i));
        // x in [0,1): the block whose interval [b_k, b_{k+1}) contains x.
        const auto it = std::upper_bound(bounds.begin(), bounds.end(), x);
        int k = static_cast<int>(it - bounds.begin()) - 1;
        if (k >= source.blocks()) k = source.blocks() - 1;
        block[i] = k;
    }
    return block;
}

} // namespace

SimpleGraph sample_graph(const SampleSpec& spec) {
    const int n = spec.n;
    if (n < 1) throw invalid_input("sample size must be at least 1");
    if (n > kSampleMaxVertices)
        throw refusal("sample size above the guard of " + std::to_string(kSampleMaxVertices));

    const std::vector<int> block = sample_blocks(spec.source, n, spec.seed);

    std::vector<std::vector<int>> rows(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double p = spec.source.value(block[i], block[j]);
            const double coin = rng::uniform(
                spec.seed, 1, static_cast<std::uint64_t>(i) * n + static_cast<std::uint64_t>(j));
            if (coin < p) rows[i].push_back(j);
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j : rows[i]) edges.emplace_back(i, j);
    return SimpleGraph(n, std::move(edges));
}

ConvergenceReport convergence_report(const StepGraphon& source,
                                     const std::vector<int>& n_list,
                                     std::uint64_t seed) {
    ConvergenceReport report;
    report.rng_family = rng::kFamily;
    report.seed = seed;
    for (int n : n_list) {
        if (n < 1) throw invalid_input("report sizes must be at least 1");
        if (n > kReportMaxVertices)
            throw refusal("convergence report limited to n <= " +
                          std::to_string(kReportMaxVertices) + " for spectral diagnostics");
        const std::uint64_t row_seed = rng::at(seed, 2, static_cast<std::uint64_t>(n));
        const SimpleGraph g = sample_graph({n, row_seed, source});
        const StepGraphon wg = graph_to_graphon(g);
        const SpectralDecomposition dec = decompose(wg);

        ConvergenceRow row;
        row.n = n;
        row.l1 = l1_norm(wg);
        row.l2sq = l2_norm_sq(wg);
        const auto& eigs = dec.spectrum.eigenvalues();
        const int take = std::min<int>(8, static_cast<int>(eigs.size()));
        row.top_eigs.assign(eigs.begin(), eigs.begin() + take);
        row.mean_gap_lb = mean_gap_lower_bound(source, wg);
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace graphon
