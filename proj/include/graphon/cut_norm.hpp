#pragma once

#include <cstdint>
#include <vector>

#include "graphon/step_graphon.hpp"

namespace graphon {

// Exact cut-norm enumeration is exponential in the refined block count.
inline constexpr int kCutNormMaxBlocks = 24;

// Optimal rectangle over the common refinement. Masks select blocks of the
// refinement; the empty masks certify value 0.
struct CutNormCertificate {
    double value = 0.0;
    std::vector<std::uint8_t> s_mask;
    std::vector<std::uint8_t> t_mask;
};

// Exact cut norm of u - w. On the common refinement with weights d the
// kernel mass is M[i][j] = d_i d_j (u - w)[i][j]; the bilinear objective is
// maximized at 0/1 vertices, so the maximum over s in {0,1}^m of
// sum_j max(0, (s'M)_j), together with the mirrored negative case, is the cut
// norm. Ties are resolved toward the lexicographically smallest s_mask.
CutNormCertificate cut_norm_exact(const StepGraphon& u, const StepGraphon& w);

// |l1_norm(u) - l1_norm(w)|, a lower bound for the cut distance: the full
// square is one admissible rectangle.
double mean_gap_lower_bound(const StepGraphon& u, const StepGraphon& w);

enum class PermutationStrategy { exhaustive, greedy };

// Upper bound on the cut distance: minimum of cut_norm_exact over block
// relabelings of u. Permutations act on an equal-weight refinement when the
// refined weights are unequal; no such refinement within 64 blocks is a
// refusal. The exhaustive strategy is limited to 9 blocks.
double cut_distance_upper(const StepGraphon& u, const StepGraphon& w, PermutationStrategy strategy);

// Signed value of the bilinear form on explicit masks over the common
// refinement; |result| reproduces a certificate's value.
double cut_form_value(const StepGraphon& u, const StepGraphon& w,
                      const std::vector<std::uint8_t>& s, const std::vector<std::uint8_t>& t);

} // namespace graphon
