#pragma once

#include <cstdint>

// Counter-based generator built from the splitmix64 finalizer. Every draw is
// addressed by (seed, stream, counter), so any value of any stream can be
// computed independently of the others; that is what makes row-parallel edge
// sampling reproduce the serial output bit for bit.
//
// Stream discipline used by the sampler:
//   stream 0: vertex positions x_i          (counter = i)
//   stream 1: edge coins                    (counter = i*n + j, i < j)
//   stream 2: derived per-row seeds of convergence reports (counter = n)
namespace graphon::rng {

inline constexpr const char* kFamily = "splitmix64-counter";

inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    const std::uint64_t base = mix64(seed ^ ((stream + 1) * kGamma));
    return mix64(base + (counter + 1) * kGamma);
}

// 64 random bits to a double in [0,1).
inline double unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return unit(at(seed, stream, counter));
}

} // namespace graphon::rng
