#include "graphon/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>

#include "graphon/densities.hpp"
#include "graphon/errors.hpp"

namespace graphon {

namespace {

constexpr int kMaxSweeps = 64;

double off_diagonal_norm(const std::vector<double>& a, int m) {
    double s = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const double v = a[static_cast<std::size_t>(i) * m + j];
            s += v * v;
        }
    return std::sqrt(2.0 * s);
}

// Flip each vector so its entry of largest magnitude is positive. The first
// strict maximum decides, which makes the sign deterministic.
void normalize_sign(std::vector<double>& vec) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < vec.size(); ++i)
        if (std::abs(vec[i]) > std::abs(vec[best])) best = i;
    if (vec[best] < 0.0)
        for (auto& v : vec) v = -v;
}

} // namespace

EighResult jacobi_eigh(std::vector<double> a, int m) {
    if (m < 1) throw invalid_input("matrix must have positive size");
    if (m > kMaxEighSize)
        throw refusal("eigensolver handles matrices up to size " + std::to_string(kMaxEighSize));
    if (a.size() != static_cast<std::size_t>(m) * m)
        throw invalid_input("matrix storage size mismatch");

    std::vector<double> v(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i) * m + i] = 1.0;

    double fro = 0.0;
    for (double x : a) fro += x * x;
    fro = std::sqrt(fro);
    const double stop = fro * 1e-15;

    bool converged = (m == 1) || (fro == 0.0) || off_diagonal_norm(a, m) <= stop;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < m - 1; ++p) {
            for (int q = p + 1; q < m; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * m + q];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p) * m + p];
                const double aqq = a[static_cast<std::size_t>(q) * m + q];
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e153) {
                    t = 1.0 / (2.0 * theta);
                } else if (theta >= 0.0) {
                    t = 1.0 / (theta + std::sqrt(1.0 + theta * theta));
                } else {
                    t = 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (int k = 0; k < m; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a[static_cast<std::size_t>(k) * m + p];
                    const double akq = a[static_cast<std::size_t>(k) * m + q];
                    const double np = c * akp - s * akq;
                    const double nq = s * akp + c * akq;
                    a[static_cast<std::size_t>(k) * m + p] = np;
                    a[static_cast<std::size_t>(p) * m + k] = np;
                    a[static_cast<std::size_t>(k) * m + q] = nq;
                    a[static_cast<std::size_t>(q) * m + k] = nq;
                }
                a[static_cast<std::size_t>(p) * m + p] = app - t * apq;
                a[static_cast<std::size_t>(q) * m + q] = aqq + t * apq;
                a[static_cast<std::size_t>(p) * m + q] = 0.0;
                a[static_cast<std::size_t>(q) * m + p] = 0.0;

                for (int i = 0; i < m; ++i) {
                    const double vip = v[static_cast<std::size_t>(i) * m + p];
                    const double viq = v[static_cast<std::size_t>(i) * m + q];
                    v[static_cast<std::size_t>(i) * m + p] = c * vip - s * viq;
                    v[static_cast<std::size_t>(i) * m + q] = s * vip + c * viq;
                }
            }
        }
        converged = off_diagonal_norm(a, m) <= stop;
    }
    if (!converged)
        throw compute_error("Jacobi eigensolver did not converge within " +
                            std::to_string(kMaxSweeps) + " sweeps");

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<std::size_t>(x) * m + x] > a[static_cast<std::size_t>(y) * m + y];
    });

    EighResult res;
    res.eigenvalues.resize(m);
    res.vectors.resize(static_cast<std::size_t>(m) * m);
    std::vector<double> col(m);
    for (int r = 0; r < m; ++r) {
        const int k = order[r];
        res.eigenvalues[r] = a[static_cast<std::size_t>(k) * m + k];
        for (int i = 0; i < m; ++i) col[i] = v[static_cast<std::size_t>(i) * m + k];
        normalize_sign(col);
        std::copy(col.begin(), col.end(), res.vectors.begin() + static_cast<std::size_t>(r) * m);
    }
    return res;
}

Spectrum::Spectrum(std::vector<double> eigenvalues_desc, double zero_tol, double group_tol)
    : eigenvalues_(std::move(eigenvalues_desc)), zero_tol_(zero_tol), group_tol_(group_tol) {
    if (!(zero_tol_ > 0.0) || !(group_tol_ > zero_tol_))
        throw invalid_input("need 0 < zero_tol < group_tol");
    for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
        if (std::abs(eigenvalues_[i]) <= zero_tol_)
            throw invalid_input("spectrum must contain only nonzero eigenvalues");
        if (i > 0 && eigenvalues_[i] > eigenvalues_[i - 1])
            throw invalid_input("spectrum must be sorted descending");
    }
    std::size_t i = 0;
    while (i < eigenvalues_.size()) {
        std::size_t j = i + 1;
        double sum = eigenvalues_[i];
        while (j < eigenvalues_.size() && eigenvalues_[j - 1] - eigenvalues_[j] <= group_tol_) {
            sum += eigenvalues_[j];
            ++j;
        }
        groups_.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
        i = j;
    }
}

Spectrum::Spectrum(std::vector<double> eigenvalues_desc, std::vector<std::pair<double, int>> groups,
                   double zero_tol, double group_tol)
    : eigenvalues_(std::move(eigenvalues_desc)), groups_(std::move(groups)),
      zero_tol_(zero_tol), group_tol_(group_tol) {
    if (!(zero_tol_ > 0.0) || !(group_tol_ > zero_tol_))
        throw invalid_input("need 0 < zero_tol < group_tol");
    int total = 0;
    for (const auto& [rep, mult] : groups_) {
        if (mult < 1) throw invalid_input("group multiplicities must be positive");
        total += mult;
    }
    if (total != static_cast<int>(eigenvalues_.size()))
        throw invalid_input("group multiplicities must cover the spectrum");
}

double Spectrum::sum_squares() const {
    double s = 0.0;
    for (double e : eigenvalues_) s += e * e;
    return s;
}

double Spectrum::power_sum(int k) const {
    if (k < 1) throw invalid_input("power sums need k >= 1");
    double s = 0.0;
    for (double e : eigenvalues_) s += ipow(e, k);
    return s;
}

SpectralDecomposition decompose(const StepGraphon& w, double zero_tol, double group_tol) {
    if (!(zero_tol > 0.0) || !(group_tol > zero_tol))
        throw invalid_input("need 0 < zero_tol < group_tol");
    const int m = w.blocks();
    std::vector<double> sqw(m);
    for (int i = 0; i < m; ++i) sqw[i] = std::sqrt(w.weight(i));

    std::vector<double> s(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            s[static_cast<std::size_t>(i) * m + j] = sqw[i] * w.value(i, j) * sqw[j];

    EighResult eig = jacobi_eigh(std::move(s), m);

    std::vector<double> kept;
    std::vector<std::vector<double>> vecs;
    for (int r = 0; r < m; ++r) {
        if (std::abs(eig.eigenvalues[r]) <= zero_tol) continue;
        kept.push_back(eig.eigenvalues[r]);
        std::vector<double> f(m);
        for (int i = 0; i < m; ++i)
            f[i] = eig.vectors[static_cast<std::size_t>(r) * m + i] / sqw[i];
        normalize_sign(f);
        vecs.push_back(std::move(f));
    }
    return SpectralDecomposition{Spectrum(std::move(kept), zero_tol, group_tol),
                                 std::move(vecs), w.weights()};
}

std::vector<double> apply_operator(const StepGraphon& w, const std::vector<double>& f) {
    const int m = w.blocks();
    if (static_cast<int>(f.size()) != m) throw invalid_input("coordinate vector size mismatch");
    std::vector<double> y(m, 0.0);
    for (int i = 0; i < m; ++i) {
        double acc = 0.0;
        for (int j = 0; j < m; ++j) acc += w.value(i, j) * w.weight(j) * f[j];
        y[i] = acc;
    }
    return y;
}

double parseval_residual(const StepGraphon& w, const SpectralDecomposition& d) {
    return std::abs(l2_norm_sq(w) - d.spectrum.sum_squares());
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double match_tol) {
    if (!(match_tol >= 0.0)) throw invalid_input("match tolerance must be nonnegative");
    if (a.zero_tol() != b.zero_tol())
        throw invalid_input("spectra were built with different zero_tol");
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        if (std::abs(a.eigenvalues()[i] - b.eigenvalues()[i]) > match_tol) return false;
    return true;
}

std::vector<ModulusClass> modulus_classes(const Spectrum& a, const Spectrum& b, double tol) {
    struct Entry {
        double modulus;
        bool positive;
        bool side_a;
    };
    std::vector<Entry> entries;
    entries.reserve(a.size() + b.size());
    for (double e : a.eigenvalues()) entries.push_back({std::abs(e), e > 0.0, true});
    for (double e : b.eigenvalues()) entries.push_back({std::abs(e), e > 0.0, false});
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& x, const Entry& y) { return x.modulus > y.modulus; });

    std::vector<ModulusClass> classes;
    for (const Entry& e : entries) {
        if (classes.empty() || classes.back().modulus - e.modulus > tol) {
            classes.push_back(ModulusClass{e.modulus, 0, 0, 0, 0});
        }
        ModulusClass& c = classes.back();
        if (e.side_a) {
            (e.positive ? c.plus_a : c.minus_a) += 1;
        } else {
            (e.positive ? c.plus_b : c.minus_b) += 1;
        }
    }
    return classes;
}

namespace {

// Orthonormal basis of the nullspace complement of the rows `nz` of `eig`,
// obtained by Gram-Schmidt over the projected coordinate basis. Deterministic
// given the input order.
std::vector<std::vector<double>> kernel_basis(const EighResult& eig, const std::vector<int>& nz, int m) {
    const int r0 = m - static_cast<int>(nz.size());
    std::vector<std::vector<double>> ker;
    for (int coord = 0; coord < m && static_cast<int>(ker.size()) < r0; ++coord) {
        std::vector<double> z(m, 0.0);
        z[coord] = 1.0;
        for (int row : nz) {
            const double* y = eig.vectors.data() + static_cast<std::size_t>(row) * m;
            double dot = 0.0;
            for (int i = 0; i < m; ++i) dot += y[i] * z[i];
            for (int i = 0; i < m; ++i) z[i] -= dot * y[i];
        }
        for (const auto& prev : ker) {
            double dot = 0.0;
            for (int i = 0; i < m; ++i) dot += prev[i] * z[i];
            for (int i = 0; i < m; ++i) z[i] -= dot * prev[i];
        }
        double norm = 0.0;
        for (double x : z) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 1e-8) {
            for (auto& x : z) x /= norm;
            ker.push_back(std::move(z));
        }
    }
    if (static_cast<int>(ker.size()) != r0)
        throw compute_error("kernel basis construction fell short");
    return ker;
}

IntertwinerCheck check_on_refinement(const Intertwiner& t, const StepGraphon& ur,
                                     const StepGraphon& wr) {
    const int m = t.size();
    const auto& d = t.weights;
    const auto& tm = t.matrix;

    IntertwinerCheck out;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            double acc = 0.0;
            for (int k = 0; k < m; ++k)
                acc += tm[static_cast<std::size_t>(k) * m + i] * d[k] *
                       tm[static_cast<std::size_t>(k) * m + j];
            const double target = (i == j) ? d[i] : 0.0;
            out.unitarity_residual = std::max(out.unitarity_residual, std::abs(acc - target));
        }
    }

    // A = values * diag(d) applied on the right.
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            double lhs = 0.0; // (T A_w)[i][j]
            double rhs = 0.0; // (A_u T)[i][j]
            for (int k = 0; k < m; ++k) {
                lhs += tm[static_cast<std::size_t>(i) * m + k] * wr.value(k, j) * d[j];
                rhs += ur.value(i, k) * d[k] * tm[static_cast<std::size_t>(k) * m + j];
            }
            out.intertwining_residual = std::max(out.intertwining_residual, std::abs(lhs - rhs));
        }
    }
    return out;
}

} // namespace

Intertwiner build_intertwiner(const StepGraphon& u, const StepGraphon& w, double match_tol) {
    auto [ur, wr] = common_refinement(u, w);
    const int m = ur.blocks();
    const auto& d = ur.weights();
    std::vector<double> sqd(m);
    for (int i = 0; i < m; ++i) sqd[i] = std::sqrt(d[i]);

    auto symmetric = [&](const StepGraphon& g) {
        std::vector<double> s(static_cast<std::size_t>(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                s[static_cast<std::size_t>(i) * m + j] = sqd[i] * g.value(i, j) * sqd[j];
        return s;
    };
    EighResult eu = jacobi_eigh(symmetric(ur), m);
    EighResult ew = jacobi_eigh(symmetric(wr), m);

    std::vector<int> nz_u, nz_w;
    std::vector<double> vals_u, vals_w;
    for (int r = 0; r < m; ++r) {
        if (std::abs(eu.eigenvalues[r]) > kDefaultZeroTol) {
            nz_u.push_back(r);
            vals_u.push_back(eu.eigenvalues[r]);
        }
        if (std::abs(ew.eigenvalues[r]) > kDefaultZeroTol) {
            nz_w.push_back(r);
            vals_w.push_back(ew.eigenvalues[r]);
        }
    }
    Spectrum su(vals_u, kDefaultZeroTol, kDefaultGroupTol);
    Spectrum sw(vals_w, kDefaultZeroTol, kDefaultGroupTol);
    if (!spectra_equal(su, sw, match_tol)) {
        std::ostringstream msg;
        msg << "spectra do not match within " << match_tol;
        auto classes = modulus_classes(su, sw, match_tol);
        for (const auto& c : classes) {
            if (c.plus_a != c.plus_b || c.minus_a != c.minus_b) {
                msg << "; largest differing modulus " << c.modulus
                    << " with signed multiplicities (" << c.plus_a << "," << c.minus_a
                    << ") vs (" << c.plus_b << "," << c.minus_b << ")";
                break;
            }
        }
        throw refusal(msg.str());
    }
    const auto& gu = su.groups();
    const auto& gw = sw.groups();
    if (gu.size() != gw.size())
        throw refusal("eigenvalue groups do not align");
    for (std::size_t g = 0; g < gu.size(); ++g) {
        if (gu[g].second != gw[g].second)
            throw refusal("eigenvalue group near " + std::to_string(gu[g].first) +
                          " has unequal multiplicity");
    }

    // Columns of Y in matched order: nonzero eigenvectors, then the kernel.
    std::vector<const double*> yu, yw;
    for (int r : nz_u) yu.push_back(eu.vectors.data() + static_cast<std::size_t>(r) * m);
    for (int r : nz_w) yw.push_back(ew.vectors.data() + static_cast<std::size_t>(r) * m);
    auto ker_u = kernel_basis(eu, nz_u, m);
    auto ker_w = kernel_basis(ew, nz_w, m);
    for (const auto& z : ker_u) yu.push_back(z.data());
    for (const auto& z : ker_w) yw.push_back(z.data());

    // T = F_u F_w' diag(d) with F = diag(1/sqrt(d)) Y, i.e.
    // T[i][j] = (1/sqrt(d_i)) sum_c yu_c[i] yw_c[j] sqrt(d_j).
    std::vector<double> tmat(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            double acc = 0.0;
            for (std::size_t c = 0; c < yu.size(); ++c) acc += yu[c][i] * yw[c][j];
            tmat[static_cast<std::size_t>(i) * m + j] = acc * sqd[j] / sqd[i];
        }
    }

    Intertwiner t{d, std::move(tmat)};
    IntertwinerCheck chk = check_on_refinement(t, ur, wr);
    if (chk.unitarity_residual >= 1e-9 || chk.intertwining_residual >= 1e-9)
        throw compute_error("intertwiner residuals exceed 1e-9 (unitarity " +
                            std::to_string(chk.unitarity_residual) + ", intertwining " +
                            std::to_string(chk.intertwining_residual) + ")");
    return t;
}

IntertwinerCheck check_intertwiner(const Intertwiner& t, const StepGraphon& u, const StepGraphon& w) {
    auto [ur, wr] = common_refinement(u, w);
    if (ur.blocks() != t.size()) throw invalid_input("intertwiner size does not match refinement");
    for (int i = 0; i < t.size(); ++i)
        if (std::abs(ur.weight(i) - t.weights[i]) > 1e-12)
            throw invalid_input("intertwiner weights do not match refinement");
    return check_on_refinement(t, ur, wr);
}

} // namespace graphon
