#include "graphon/simple_graph.hpp"

#include <algorithm>
#include <string>

#include "graphon/errors.hpp"

namespace graphon {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw invalid_input("vertex count must be nonnegative");
    for (auto& [a, b] : edges_) {
        if (a < 0 || b < 0 || a >= n_ || b >= n_)
            throw invalid_input("edge endpoint out of range");
        if (a == b) throw invalid_input("loops are not allowed");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw invalid_input("multi-edges are not allowed");

    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (const auto& [a, b] : edges_) {
        adj_[static_cast<std::size_t>(a) * n_ + b] = 1;
        adj_[static_cast<std::size_t>(b) * n_ + a] = 1;
    }
}

SimpleGraph SimpleGraph::edgeless(int n) { return SimpleGraph(n, {}); }

SimpleGraph SimpleGraph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
    return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::cycle(int k) {
    if (k < 3) throw invalid_input("cycles need at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    e.reserve(k);
    for (int v = 0; v < k; ++v) e.emplace_back(v, (v + 1) % k);
    return SimpleGraph(k, std::move(e));
}

SimpleGraph SimpleGraph::path(int k) {
    if (k < 1) throw invalid_input("paths need at least 1 vertex");
    std::vector<std::pair<int, int>> e;
    e.reserve(k - 1);
    for (int v = 0; v + 1 < k; ++v) e.emplace_back(v, v + 1);
    return SimpleGraph(k, std::move(e));
}

} // namespace graphon
