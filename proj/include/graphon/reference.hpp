#pragma once

#include <cstdint>

#include "graphon/sampling.hpp"
#include "graphon/simple_graph.hpp"
#include "graphon/step_graphon.hpp"

// Serial reference implementations of the parallel kernels. Deliberately
// naive: single loop, no pruning, no incremental updates, no OpenMP. They
// exist so the production kernels have an independent implementation to be
// tested and benchmarked against.
namespace graphon::reference {

double density_direct(const SimpleGraph& f, const StepGraphon& w);

std::int64_t hom_count(const SimpleGraph& f, const SimpleGraph& g);

// Cut-norm value only (no certificate), fresh row sums per subset.
double cut_norm_value(const StepGraphon& u, const StepGraphon& w);

SimpleGraph sample_graph(const SampleSpec& spec);

} // namespace graphon::reference
