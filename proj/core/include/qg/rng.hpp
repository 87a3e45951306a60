#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qg/sparse_vector.hpp"

namespace qg {

// Deterministic RNG with hand-rolled output transforms. std::mt19937_64
// has a portable output sequence but the standard distributions do not,
// so uniform/normal/integer draws are derived here directly from the raw
// 64-bit stream; reruns and rebuilds then produce byte-identical output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Decorrelates per-item streams so parallel and sequential runs see
    // the same draws.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01();
    // Uniform on [a, b).
    double uniform(double a, double b);
    // Standard normal via Box-Muller (pairs cached).
    double normal();
    // Uniform integer in [lo, hi], unbiased by rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    // +1 or -1.
    double sign();

    // n distinct values from {lo..hi}, returned sorted ascending.
    std::vector<Index> sample_distinct(int n, Index lo, Index hi);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace qg
