#include "graphon/reference.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "graphon/cut_norm.hpp"
#include "graphon/errors.hpp"
#include "graphon/rng.hpp"

namespace graphon::reference {

namespace {

// Mixed-radix counter over assignment vectors; returns false when exhausted.
bool advance(std::vector<int>& assign, int radix) {
    for (std::size_t v = assign.size(); v-- > 0;) {
        if (++assign[v] < radix) return true;
        assign[v] = 0;
    }
    return false;
}

void check_guard(double base, int exponent, const char* what) {
    if (std::pow(base, static_cast<double>(exponent)) > 1e8)
        throw refusal(std::string(what) + ": assignment count exceeds the 1e8 guard");
}

} // namespace

double density_direct(const SimpleGraph& f, const StepGraphon& w) {
    const int nv = f.n();
    if (nv < 1) throw invalid_input("pattern graph needs at least one vertex");
    const int m = w.blocks();
    check_guard(m, nv, "reference density");

    std::vector<int> assign(nv, 0);
    double total = 0.0;
    do {
        double p = 1.0;
        for (int v = 0; v < nv; ++v) p *= w.weight(assign[v]);
        for (const auto& [a, b] : f.edges()) p *= w.value(assign[a], assign[b]);
        total += p;
    } while (advance(assign, m));
    return total;
}

std::int64_t hom_count(const SimpleGraph& f, const SimpleGraph& g) {
    const int nv = f.n();
    if (nv < 1) throw invalid_input("pattern graph needs at least one vertex");
    const int n = g.n();
    if (n < 1) throw invalid_input("target graph needs at least one vertex");
    check_guard(n, nv, "reference hom count");

    std::vector<int> assign(nv, 0);
    std::int64_t total = 0;
    do {
        bool ok = true;
        for (const auto& [a, b] : f.edges()) {
            if (!g.adjacent(assign[a], assign[b])) {
                ok = false;
                break;
            }
        }
        if (ok) ++total;
    } while (advance(assign, n));
    return total;
}

double cut_norm_value(const StepGraphon& u, const StepGraphon& w) {
    auto [ur, wr] = common_refinement(u, w);
    const int m = ur.blocks();
    if (m > kCutNormMaxBlocks)
        throw refusal("reference cut norm limited to " + std::to_string(kCutNormMaxBlocks) +
                      " blocks");
    std::vector<double> mass(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            mass[static_cast<std::size_t>(i) * m + j] =
                ur.weight(i) * ur.weight(j) * (ur.value(i, j) - wr.value(i, j));

    double best = 0.0;
    std::vector<double> row(m);
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::fill(row.begin(), row.end(), 0.0);
        for (int i = 0; i < m; ++i) {
            if (!(mask & (1ull << i))) continue;
            for (int j = 0; j < m; ++j) row[j] += mass[static_cast<std::size_t>(i) * m + j];
        }
        double pos = 0.0, neg = 0.0;
        for (int j = 0; j < m; ++j) {
            if (row[j] > 0.0)
                pos += row[j];
            else
                neg -= row[j];
        }
        best = std::max(best, std::max(pos, neg));
    }
    return best;
}

SimpleGraph sample_graph(const SampleSpec& spec) {
    const int n = spec.n;
    if (n < 1) throw invalid_input("sample size must be at least 1");
    if (n > kSampleMaxVertices)
        throw refusal("sample size above the guard of " + std::to_string(kSampleMaxVertices));

    const std::vector<double> bounds = spec.source.partition().boundaries();
    std::vector<int> block(n);
    for (int i = 0; i < n; ++i) {
        const double x = rng::uniform(spec.seed, 0, static_cast<std::uint64_t>(i));
        const auto it = std::upper_bound(bounds.begin(), bounds.end(), x);
        int k = static_cast<int>(it - bounds.begin()) - 1;
        if (k >= spec.source.blocks()) k = spec.source.blocks() - 1;
        block[i] = k;
    }

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double p = spec.source.value(block[i], block[j]);
            const double coin = rng::uniform(
                spec.seed, 1, static_cast<std::uint64_t>(i) * n + static_cast<std::uint64_t>(j));
            if (coin < p) edges.emplace_back(i, j);
        }
    }
    return SimpleGraph(n, std::move(edges));
}

} // namespace graphon::reference
