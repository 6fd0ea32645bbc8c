#pragma once

#include <utility>
#include <vector>

#include "graphon/step_graphon.hpp"

namespace graphon {

inline constexpr double kDefaultZeroTol = 1e-12;
inline constexpr double kDefaultGroupTol = 1e-8;

// Dense symmetric eigenproblems stay at desk scale; beyond this the solver
// refuses rather than degrade silently.
inline constexpr int kMaxEighSize = 512;

// Full eigendecomposition of a dense symmetric matrix (row-major m x m) by
// cyclic Jacobi sweeps. Eigenpairs come back sorted by descending eigenvalue;
// vectors (rows of `vectors`) are orthonormal and sign-normalized so the
// entry of largest magnitude is positive. Deterministic for fixed input.
struct EighResult {
    std::vector<double> eigenvalues;
    std::vector<double> vectors; // row k = eigenvector of eigenvalues[k]
};
EighResult jacobi_eigh(std::vector<double> a, int m);

// Multiset of nonzero eigenvalues (|lambda| > zero_tol), descending, with
// near-equal values clustered into multiplicity groups: consecutive
// eigenvalues belong to the same group when their gap is at most group_tol.
class Spectrum {
public:
    Spectrum(std::vector<double> eigenvalues_desc, double zero_tol, double group_tol);
    Spectrum(std::vector<double> eigenvalues_desc, std::vector<std::pair<double, int>> groups,
             double zero_tol, double group_tol);

    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const std::vector<std::pair<double, int>>& groups() const { return groups_; }
    double zero_tol() const { return zero_tol_; }
    double group_tol() const { return group_tol_; }
    int size() const { return static_cast<int>(eigenvalues_.size()); }

    double sum_squares() const;
    double power_sum(int k) const; // sum of lambda^k, k >= 1

private:
    std::vector<double> eigenvalues_;
    std::vector<std::pair<double, int>> groups_; // (representative value, multiplicity)
    double zero_tol_;
    double group_tol_;
};

// Eigendecomposition of the operator of a step graphon, computed on the
// block-constant subspace: eigenvalues of S = diag(sqrt(w)) B diag(sqrt(w)),
// eigenvectors back-transformed by diag(1/sqrt(w)). The stored eigenvectors
// are orthonormal in the weighted inner product <f,g> = sum_i w_i f_i g_i.
struct SpectralDecomposition {
    Spectrum spectrum;
    std::vector<std::vector<double>> eigenvectors; // one per stored eigenvalue
    std::vector<double> weights;
};

SpectralDecomposition decompose(const StepGraphon& w,
                                double zero_tol = kDefaultZeroTol,
                                double group_tol = kDefaultGroupTol);

// Operator application in block coordinates: y_i = sum_j B[i][j] w_j f_j.
std::vector<double> apply_operator(const StepGraphon& w, const std::vector<double>& f);

// |l2_norm_sq(w) - sum of squared stored eigenvalues|. d must come from w.
double parseval_residual(const StepGraphon& w, const SpectralDecomposition& d);

// Multiset equality with tolerance: both lists are descending, so the greedy
// one-to-one matching is the in-order pairing. Requires equal zero_tol.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double match_tol);

// Joint clustering of the moduli of two spectra, descending. Used to locate
// the largest modulus whose signed multiplicities differ between the sides.
struct ModulusClass {
    double modulus = 0.0; // largest member modulus
    int plus_a = 0, minus_a = 0;
    int plus_b = 0, minus_b = 0;
};
std::vector<ModulusClass> modulus_classes(const Spectrum& a, const Spectrum& b, double tol);

// Finite matrix realization of a unitary intertwiner between two step-graphon
// operators over their common refinement with weights d:
//   T' diag(d) T = diag(d)  and  T A_w = A_u T,  A = values * diag(d).
struct Intertwiner {
    std::vector<double> weights;
    std::vector<double> matrix; // row-major m x m
    int size() const { return static_cast<int>(weights.size()); }
};

// Maps each weighted-orthonormal eigenvector of w's operator to the one of
// u's operator with the matching eigenvalue, and the kernel to the kernel by
// the isometry obtained from orthonormalizing the coordinate basis projected
// onto each kernel. Refuses when the nonzero spectra do not match within
// match_tol or when aligned eigenvalue groups carry different multiplicities.
Intertwiner build_intertwiner(const StepGraphon& u, const StepGraphon& w,
                              double match_tol = kDefaultGroupTol);

struct IntertwinerCheck {
    double unitarity_residual = 0.0;    // max |T' diag(d) T - diag(d)|
    double intertwining_residual = 0.0; // max |T A_w - A_u T|
};
IntertwinerCheck check_intertwiner(const Intertwiner& t, const StepGraphon& u, const StepGraphon& w);

} // namespace graphon
