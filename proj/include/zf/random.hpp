#ifndef ZF_RANDOM_HPP
#define ZF_RANDOM_HPP

#include <cstdint>

#include "zf/graph.hpp"

namespace zf {

// SplitMix64 (Steele, Lea, Vigna): fixed public constants, so a seed
// reproduces the same stream on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit mantissa.
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

// G(n, p): each pair {u, v}, u < v, drawn in lexicographic order, is an
// edge iff the draw is below p.
Graph random_graph(int n, double p, uint64_t seed);

// Rejection-sampled connected G(n, p); one fresh sub-seed per attempt.
// Throws std::runtime_error when max_retries attempts all come out
// disconnected.
Graph random_connected_graph(int n, double p, uint64_t seed, int max_retries = 10000);

// Uniform subset of 0..n-1.
VertexSet random_subset(int n, SplitMix64& gen);

} // namespace zf

#endif
