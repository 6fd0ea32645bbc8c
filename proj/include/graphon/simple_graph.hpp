#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace graphon {

// Finite undirected simple graph on vertices 0..n-1. No loops, no
// multi-edges. Edges are kept normalized (a < b) and sorted.
class SimpleGraph {
public:
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

    static SimpleGraph edgeless(int n);
    static SimpleGraph complete(int n);
    static SimpleGraph cycle(int k); // k >= 3 vertices
    static SimpleGraph path(int k);  // k >= 1 vertices, k-1 edges

    int n() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    bool adjacent(int a, int b) const { return adj_[static_cast<std::size_t>(a) * n_ + b] != 0; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint8_t> adj_;
};

} // namespace graphon
