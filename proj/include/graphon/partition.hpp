#pragma once

#include <vector>

namespace graphon {

// Partition of [0,1] into consecutive intervals, stored as cumulative
// boundaries 0 = b_0 < b_1 < ... < b_m = 1.
class Partition {
public:
    explicit Partition(std::vector<double> boundaries);

    static Partition from_weights(const std::vector<double>& weights);

    int size() const { return static_cast<int>(boundaries_.size()) - 1; }
    const std::vector<double>& boundaries() const { return boundaries_; }
    std::vector<double> weights() const;

    // Overlay of two partitions. Boundaries closer than 1e-12 are identified,
    // so no zero-width interval can appear. src_a[r] / src_b[r] give the block
    // of a / b that contains merged block r.
    static Partition merge(const Partition& a, const Partition& b,
                           std::vector<int>& src_a, std::vector<int>& src_b);

private:
    std::vector<double> boundaries_;
};

} // namespace graphon
