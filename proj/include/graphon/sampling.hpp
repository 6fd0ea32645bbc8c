#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphon/simple_graph.hpp"
#include "graphon/step_graphon.hpp"

namespace graphon {

inline constexpr int kSampleMaxVertices = 4096;
inline constexpr int kReportMaxVertices = 512; // spectral diagnostics scale

struct SampleSpec {
    int n = 1;
    std::uint64_t seed = 0;
    StepGraphon source;
};

// W-random graph: vertex positions x_i are i.i.d. uniform (stream 0), edge
// {i,j}, i < j, appears independently with probability W(x_i, x_j)
// (stream 1, counter i*n + j). Edge coins are generated in parallel by row;
// the counter-based generator makes the output identical to the serial path.
SimpleGraph sample_graph(const SampleSpec& spec);

struct ConvergenceRow {
    int n = 0;
    double l1 = 0.0;
    double l2sq = 0.0;
    std::vector<double> top_eigs; // leading eigenvalues of A/n, at most 8
    double mean_gap_lb = 0.0;
};

struct ConvergenceReport {
    std::string rng_family;
    std::uint64_t seed = 0;
    std::vector<ConvergenceRow> rows;
};

// Samples one graph per n (per-row seed derived as rng::at(seed, 2, n)) and
// reports norms, leading eigenvalues of A/n and the mean-gap lower bound
// against the source.
ConvergenceReport convergence_report(const StepGraphon& source,
                                     const std::vector<int>& n_list,
                                     std::uint64_t seed);

} // namespace graphon
