#pragma once

#include <cstdint>

#include "graphon/simple_graph.hpp"
#include "graphon/spectral.hpp"
#include "graphon/step_graphon.hpp"

namespace graphon {

// Hard ceiling on the number of enumerated assignments (m^v(F), n^v(F)).
inline constexpr double kEnumerationGuard = 1e8;

struct CycleProfile {
    int k_min = 3;
    std::vector<double> values; // t(C_k, W) for k = k_min .. k_min + size - 1
};

// Homomorphism density t(F, W) by direct assignment enumeration in
// mixed-radix order with early short-circuit on zero products. Parallel over
// the leading coordinates; per-partition partial sums are reduced in a fixed
// order, so the result does not depend on the thread count.
double density_direct(const SimpleGraph& f, const StepGraphon& w);

// Number of homomorphisms F -> G (exact integer).
std::int64_t hom_count(const SimpleGraph& f, const SimpleGraph& g);

// t(C_k, W) = sum of lambda^k over the stored spectrum, k >= 3.
double cycle_density_spectral(int k, const Spectrum& s);

// Cycle densities t(C_3..C_kmax, W) from one decomposition.
CycleProfile cycle_profile(const StepGraphon& w, int k_max = 16);

// |t(F, W_G) - hom(F,G) / v(G)^v(F)|; both routes are exact for an embedded
// graph, so the defect is pure floating error.
double graph_density_consistency(const SimpleGraph& f, const SimpleGraph& g);

// x^k by binary exponentiation, k >= 0. Used for every spectral power so the
// same rounding path is taken everywhere.
double ipow(double x, int k);

} // namespace graphon
