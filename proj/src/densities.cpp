#include "graphon/densities.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "graphon/errors.hpp"

namespace graphon {

namespace {

// Edges whose later endpoint is v, listed by the earlier endpoint. Checking
// them as soon as v is assigned keeps the zero short-circuit effective.
std::vector<std::vector<int>> back_edges(const SimpleGraph& f) {
    std::vector<std::vector<int>> back(f.n());
    for (const auto& [a, b] : f.edges()) back[b].push_back(a);
    return back;
}

void check_guard(double base, int exponent, const char* what) {
    if (std::pow(base, static_cast<double>(exponent)) > kEnumerationGuard)
        throw refusal(std::string(what) + ": " + std::to_string(base) + "^" +
                      std::to_string(exponent) + " assignments exceed the 1e8 guard");
}

double density_subtree(const SimpleGraph& f, const StepGraphon& w,
                       const std::vector<std::vector<int>>& back,
                       std::vector<int>& assign, int v, double prod) {
    const int nv = f.n();
    const int m = w.blocks();
    if (v == nv) return prod;
    double s = 0.0;
    for (int c = 0; c < m; ++c) {
        double p = prod * w.weight(c);
        for (int earlier : back[v]) {
            p *= w.value(assign[earlier], c);
            if (p == 0.0) break;
        }
        if (p == 0.0) continue;
        assign[v] = c;
        s += density_subtree(f, w, back, assign, v + 1, p);
    }
    return s;
}

std::int64_t hom_subtree(const SimpleGraph& f, const SimpleGraph& g,
                         const std::vector<std::vector<int>>& back,
                         std::vector<int>& assign, int v) {
    const int nv = f.n();
    const int n = g.n();
    if (v == nv) return 1;
    std::int64_t s = 0;
    for (int c = 0; c < n; ++c) {
        bool ok = true;
        for (int earlier : back[v]) {
            if (!g.adjacent(assign[earlier], c)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        assign[v] = c;
        s += hom_subtree(f, g, back, assign, v + 1);
    }
    return s;
}

} // namespace

double ipow(double x, int k) {
    if (k < 0) throw invalid_input("ipow needs k >= 0");
    double result = 1.0;
    double base = x;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

double density_direct(const SimpleGraph& f, const StepGraphon& w) {
    const int nv = f.n();
    if (nv < 1) throw invalid_input("pattern graph needs at least one vertex");
    const int m = w.blocks();
    check_guard(m, nv, "density_direct");
    const auto back = back_edges(f);

    if (nv == 1) return 1.0; // weights sum to 1

    // Fix the first two coordinates; each cell is an independent subtree and
    // the partial sums are reduced in cell order, independent of threads.
    const int cells = m * m;
    std::vector<double> partial(cells, 0.0);
#pragma omp parallel for schedule(static)
    for (int cell = 0; cell < cells; ++cell) {
        const int c0 = cell / m;
        const int c1 = cell % m;
        double p = w.weight(c0) * w.weight(c1);
        if (!back[1].empty()) p *= w.value(c0, c1); // only vertex 0 can precede vertex 1
        if (p == 0.0) continue;
        std::vector<int> assign(nv, 0);
        assign[0] = c0;
        assign[1] = c1;
        partial[cell] = density_subtree(f, w, back, assign, 2, p);
    }
    double total = 0.0;
    for (int cell = 0; cell < cells; ++cell) total += partial[cell];
    return total;
}

std::int64_t hom_count(const SimpleGraph& f, const SimpleGraph& g) {
    const int nv = f.n();
    if (nv < 1) throw invalid_input("pattern graph needs at least one vertex");
    const int n = g.n();
    if (n < 1) throw invalid_input("target graph needs at least one vertex");
    check_guard(n, nv, "hom_count");
    const auto back = back_edges(f);

    if (nv == 1) return n;

    const int cells = n * n;
    std::vector<std::int64_t> partial(cells, 0);
#pragma omp parallel for schedule(static)
    for (int cell = 0; cell < cells; ++cell) {
        const int c0 = cell / n;
        const int c1 = cell % n;
        if (!back[1].empty() && !g.adjacent(c0, c1)) continue;
        std::vector<int> assign(nv, 0);
        assign[0] = c0;
        assign[1] = c1;
        partial[cell] = hom_subtree(f, g, back, assign, 2);
    }
    std::int64_t total = 0;
    for (int cell = 0; cell < cells; ++cell) total += partial[cell];
    return total;
}

double cycle_density_spectral(int k, const Spectrum& s) {
    if (k < 3) throw invalid_input("cycle densities are defined for k >= 3");
    double acc = 0.0;
    for (double e : s.eigenvalues()) acc += ipow(e, k);
    return acc;
}

CycleProfile cycle_profile(const StepGraphon& w, int k_max) {
    if (k_max < 3) throw invalid_input("cycle profiles need k_max >= 3");
    SpectralDecomposition d = decompose(w);
    CycleProfile p;
    p.k_min = 3;
    p.values.reserve(k_max - 2);
    for (int k = 3; k <= k_max; ++k) p.values.push_back(cycle_density_spectral(k, d.spectrum));
    return p;
}

double graph_density_consistency(const SimpleGraph& f, const SimpleGraph& g) {
    const double t = density_direct(f, graph_to_graphon(g));
    const std::int64_t hom = hom_count(f, g);
    const double scale = ipow(static_cast<double>(g.n()), f.n());
    return std::abs(t - static_cast<double>(hom) / scale);
}

} // namespace graphon
