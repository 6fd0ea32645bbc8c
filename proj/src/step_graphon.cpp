#include "graphon/step_graphon.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "graphon/errors.hpp"

namespace graphon {

namespace {

constexpr double kBoundaryTol = 1e-12;

std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
    std::vector<double> out;
    const std::size_t m = rows.size();
    out.reserve(m * m);
    for (const auto& row : rows) {
        if (row.size() != m) throw invalid_input("value matrix must be square");
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

} // namespace

Partition::Partition(std::vector<double> boundaries) : boundaries_(std::move(boundaries)) {
    if (boundaries_.size() < 2) throw invalid_input("partition needs at least one block");
    if (boundaries_.front() != 0.0 || boundaries_.back() != 1.0)
        throw invalid_input("partition boundaries must start at 0 and end at 1");
    for (std::size_t i = 1; i < boundaries_.size(); ++i)
        if (!(boundaries_[i] > boundaries_[i - 1]))
            throw invalid_input("partition boundaries must be strictly increasing");
}

Partition Partition::from_weights(const std::vector<double>& weights) {
    std::vector<double> b;
    b.reserve(weights.size() + 1);
    b.push_back(0.0);
    double acc = 0.0;
    for (double w : weights) {
        acc += w;
        b.push_back(acc);
    }
    b.back() = 1.0; // weights sum to 1 within tolerance; pin the endpoint
    return Partition(std::move(b));
}

std::vector<double> Partition::weights() const {
    std::vector<double> w(boundaries_.size() - 1);
    for (std::size_t i = 0; i + 1 < boundaries_.size(); ++i)
        w[i] = boundaries_[i + 1] - boundaries_[i];
    return w;
}

Partition Partition::merge(const Partition& a, const Partition& b,
                           std::vector<int>& src_a, std::vector<int>& src_b) {
    const auto& ba = a.boundaries();
    const auto& bb = b.boundaries();
    std::vector<double> merged{0.0};
    src_a.clear();
    src_b.clear();
    std::size_t ia = 0, ib = 0;
    while (ia + 1 < ba.size() && ib + 1 < bb.size()) {
        const double na = ba[ia + 1];
        const double nb = bb[ib + 1];
        src_a.push_back(static_cast<int>(ia));
        src_b.push_back(static_cast<int>(ib));
        if (std::abs(na - nb) <= kBoundaryTol) {
            merged.push_back(na);
            ++ia;
            ++ib;
        } else if (na < nb) {
            merged.push_back(na);
            ++ia;
        } else {
            merged.push_back(nb);
            ++ib;
        }
    }
    // Both boundary lists end at exactly 1.0, so they exhaust together.
    if (ia + 1 < ba.size() || ib + 1 < bb.size())
        throw compute_error("partition merge left a dangling boundary");
    merged.back() = 1.0;
    return Partition(std::move(merged));
}

StepGraphon::StepGraphon(std::vector<double> weights, std::vector<double> values_row_major)
    : weights_(std::move(weights)), values_(std::move(values_row_major)) {
    const std::size_t m = weights_.size();
    if (m == 0) throw invalid_input("step graphon needs at least one block");
    if (values_.size() != m * m) throw invalid_input("value matrix size must be m x m");

    double total = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || !(w > 0.0))
            throw invalid_input("block weights must be finite and strictly positive");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw invalid_input("block weights must sum to 1 (defect " +
                            std::to_string(total - 1.0) + ")");
    // The skip band makes normalization idempotent: one pass lands within a
    // few ulp of 1, so re-parsing serialized weights reproduces them exactly.
    if (std::abs(total - 1.0) > 1e-14)
        for (auto& w : weights_) w /= total;

    for (double v : values_)
        if (!std::isfinite(v)) throw invalid_input("values must be finite");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (values_[i * m + j] != values_[j * m + i])
                throw invalid_input("value matrix must be symmetric");
    for (auto& v : values_) {
        if (v < -1e-12 || v > 1.0 + 1e-12)
            throw invalid_input("values must lie in [0,1]");
        if (v < 0.0) v = 0.0;
        if (v > 1.0) v = 1.0;
    }
}

StepGraphon::StepGraphon(std::vector<double> weights, const std::vector<std::vector<double>>& values)
    : StepGraphon(std::move(weights), flatten(values)) {}

StepGraphon StepGraphon::constant(double value) {
    return StepGraphon({1.0}, std::vector<double>{value});
}

bool StepGraphon::zero_one_valued() const {
    for (double v : values_)
        if (v != 0.0 && v != 1.0) return false;
    return true;
}

StepGraphon graph_to_graphon(const SimpleGraph& g) {
    const int n = g.n();
    if (n < 1) throw invalid_input("cannot embed an empty graph");
    std::vector<double> weights(n, 1.0 / n);
    std::vector<double> values(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& [a, b] : g.edges()) {
        values[static_cast<std::size_t>(a) * n + b] = 1.0;
        values[static_cast<std::size_t>(b) * n + a] = 1.0;
    }
    return StepGraphon(std::move(weights), std::move(values));
}

std::pair<StepGraphon, StepGraphon> common_refinement(const StepGraphon& u, const StepGraphon& w) {
    if (u.weights() == w.weights()) return {u, w};

    std::vector<int> su, sw;
    Partition p = Partition::merge(u.partition(), w.partition(), su, sw);
    const int m = p.size();
    std::vector<double> wts = p.weights();
    std::vector<double> vu(static_cast<std::size_t>(m) * m);
    std::vector<double> vw(static_cast<std::size_t>(m) * m);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            vu[static_cast<std::size_t>(r) * m + c] = u.value(su[r], su[c]);
            vw[static_cast<std::size_t>(r) * m + c] = w.value(sw[r], sw[c]);
        }
    }
    return {StepGraphon(wts, std::move(vu)), StepGraphon(std::move(wts), std::move(vw))};
}

StepGraphon permute_blocks(const StepGraphon& w, const std::vector<int>& perm) {
    const int m = w.blocks();
    if (static_cast<int>(perm.size()) != m) throw invalid_input("permutation size mismatch");
    std::vector<bool> seen(m, false);
    for (int p : perm) {
        if (p < 0 || p >= m || seen[p]) throw invalid_input("not a permutation");
        seen[p] = true;
    }
    std::vector<double> wts(m);
    std::vector<double> vals(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        wts[i] = w.weight(perm[i]);
        for (int j = 0; j < m; ++j)
            vals[static_cast<std::size_t>(i) * m + j] = w.value(perm[i], perm[j]);
    }
    return StepGraphon(std::move(wts), std::move(vals));
}

double l1_norm(const StepGraphon& w) {
    const int m = w.blocks();
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const double ww = w.weight(i) * w.weight(j);
            s += ww * w.value(i, j);
        }
    }
    return s;
}

double l2_norm_sq(const StepGraphon& w) {
    const int m = w.blocks();
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const double ww = w.weight(i) * w.weight(j);
            const double v = w.value(i, j);
            s += ww * (v * v);
        }
    }
    return s;
}

} // namespace graphon
