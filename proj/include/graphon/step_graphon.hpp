#pragma once

#include <utility>
#include <vector>

#include "graphon/partition.hpp"
#include "graphon/simple_graph.hpp"

namespace graphon {

// Symmetric step function [0,1]^2 -> [0,1]: m blocks with strictly positive
// weights summing to 1 and a symmetric m x m value matrix. Immutable after
// construction. Weights are validated to sum to 1 within 1e-12 and then
// renormalized; values outside [0,1] by at most 1e-12 are clamped, larger
// excursions are rejected.
class StepGraphon {
public:
    StepGraphon(std::vector<double> weights, std::vector<double> values_row_major);
    StepGraphon(std::vector<double> weights, const std::vector<std::vector<double>>& values);

    static StepGraphon constant(double value);

    int blocks() const { return static_cast<int>(weights_.size()); }
    double weight(int i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }
    double value(int i, int j) const { return values_[static_cast<std::size_t>(i) * weights_.size() + j]; }
    const std::vector<double>& values() const { return values_; } // row-major
    Partition partition() const { return Partition::from_weights(weights_); }
    bool zero_one_valued() const;

    bool operator==(const StepGraphon& other) const {
        return weights_ == other.weights_ && values_ == other.values_;
    }

private:
    std::vector<double> weights_;
    std::vector<double> values_;
};

// Embeds a graph as a step graphon: n blocks of weight 1/n, values the 0/1
// adjacency pattern with zero diagonal.
StepGraphon graph_to_graphon(const SimpleGraph& g);

// Rewrites u and w over the coarsest partition refining both. Identical
// partitions are passed through unchanged.
std::pair<StepGraphon, StepGraphon> common_refinement(const StepGraphon& u, const StepGraphon& w);

// Block relabeling: result.value(i,j) = w.value(perm[i], perm[j]) and
// result.weight(i) = w.weight(perm[i]).
StepGraphon permute_blocks(const StepGraphon& w, const std::vector<int>& perm);

double l1_norm(const StepGraphon& w);

// Squared L2 norm. For a 0/1-valued graphon this equals l1_norm bitwise:
// the two sums run in the same order and 0*0 = 0, 1*1 = 1 exactly.
double l2_norm_sq(const StepGraphon& w);

} // namespace graphon
