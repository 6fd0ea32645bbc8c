#pragma once

#include <cstdint>
#include <vector>

#include "graphon/sampling.hpp"
#include "graphon/spectral.hpp"
#include "graphon/step_graphon.hpp"

namespace graphon {

bool is_cospectral(const StepGraphon& u, const StepGraphon& w, double tol = kDefaultGroupTol);

// Max cycle-density discrepancy over k = 3..k_max below tol. k_max >= 4.
bool profiles_match(const StepGraphon& u, const StepGraphon& w, int k_max = 16,
                    double tol = kDefaultGroupTol);

// Bookkeeping for the smallest cycle length whose density separates two
// non-cospectral graphons:
//   nu:        largest eigenvalue modulus whose signed multiplicities differ
//   alpha:     largest modulus strictly below nu (0 if none)
//   beta:      half the smallest stored nonzero modulus
//   h:         number of eigenvalues of both sides with modulus in (beta, nu)
//   parity:    0 when the total multiplicities at nu differ, else 1
//   witness_k: smallest k >= 3 of that parity with k > ln(h+2)/ln(nu/alpha)
// For k of the witness parity, |t(C_k,u) - t(C_k,w)| is then at least
// nu^k - (h+2) alpha^k > 0, since the integer main-term coefficient is >= 1.
struct DiscriminationReport {
    double nu = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::int64_t h = 0;
    std::int64_t m_plus_u = 0, m_minus_u = 0;
    std::int64_t m_plus_w = 0, m_minus_w = 0;
    int parity = 0;
    std::int64_t witness_k = 0;
};

// Requires the spectra to differ; cospectral inputs are a refusal. The
// spectrum overload carries the whole computation (graphon operators cannot
// produce every spectrum multiset, e.g. one with negative trace, but the
// bookkeeping is meaningful for any pair of spectra).
DiscriminationReport discriminate(const Spectrum& a, const Spectrum& b);
DiscriminationReport discriminate(const StepGraphon& u, const StepGraphon& w);

// Envelope defect at cycle length k >= 3:
//   max(0, |actual - main| - (h+2) alpha^k)
// where actual = t(C_k,u) - t(C_k,w) and
// main = (m_plus_u - m_plus_w + (-1)^k (m_minus_u - m_minus_w)) nu^k.
double verify_gap_formula(const Spectrum& a, const Spectrum& b,
                          const DiscriminationReport& r, int k);
double verify_gap_formula(const StepGraphon& u, const StepGraphon& w,
                          const DiscriminationReport& r, int k);

// Certificate that two 0/1-valued proxies u', w' of u, w cannot be
// cospectral: when both mean-gap lower bounds stay below
// (l1(u) - l1(w)) / 2, the squared L2 norms (equal to the L1 norms for
// 0/1-valued graphons) must differ, and equal spectra force equal squared
// L2 norms.
struct InapproxCertificate {
    double l1_u = 0.0, l1_w = 0.0;
    double threshold = 0.0; // (l1_u - l1_w) / 2
    double mean_gap_u = 0.0, mean_gap_w = 0.0;
    double l2sq_u_prime = 0.0, l2sq_w_prime = 0.0;
    double gap = 0.0; // l2sq_u_prime - l2sq_w_prime
    bool within_threshold = false;
    bool not_cospectral = false;
};

// Preconditions: u', w' are 0/1-valued and l1(u) > l1(w).
InapproxCertificate inapprox_check(const StepGraphon& u, const StepGraphon& w,
                                   const StepGraphon& u_prime, const StepGraphon& w_prime);

struct Theorem42Trial {
    int n = 0;
    std::uint64_t seed = 0;
    double sum_sq_u = 0.0;
    double sum_sq_w = 0.0;
    double gap = 0.0;
    bool pass = false;
};

struct Theorem42Report {
    Spectrum spectrum_u;
    Spectrum spectrum_w;
    bool cospectral_pair = false;
    double threshold = 0.125;
    std::vector<Theorem42Trial> trials;
    bool all_pass = false;
};

std::vector<std::uint64_t> default_demo_seeds(); // 20 fixed seeds

// The constant-1/2 graphon against the graphon that is 1 on [0,1/2]^2: both
// have spectrum {1/2}, yet sampled graphs separate them. For each n and seed
// the trial samples one graph from each side and requires the gap of squared
// eigenvalue sums (computed through the eigensolver at graph scale) to
// exceed 0.125.
Theorem42Report theorem42_demo(const std::vector<int>& n_list = {50, 100, 200},
                               const std::vector<std::uint64_t>& seeds = default_demo_seeds());

} // namespace graphon
