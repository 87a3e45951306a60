#include "qg/rng.hpp"

#include <algorithm>
#include <cmath>

#include "qg/errors.hpp"

namespace qg {

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the (seed, stream) pair.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) {
    return a + (b - a) * uniform01();
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 strictly positive so the log is finite.
    double u1 = 0.0;
    do {
        u1 = uniform01();
    } while (u1 == 0.0);
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw ArgumentError("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_()); // full 64-bit range
    // Rejection sampling over the largest multiple of span.
    const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span);
    std::uint64_t draw = 0;
    do {
        draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
}

double Rng::sign() {
    return (engine_() & 1ull) ? 1.0 : -1.0;
}

std::vector<Index> Rng::sample_distinct(int n, Index lo, Index hi) {
    if (n < 0 || static_cast<std::int64_t>(n) > hi - lo + 1) {
        throw ArgumentError("sample_distinct: cannot draw " + std::to_string(n) +
                            " distinct values from [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
    }
    // Partial Fisher-Yates over the materialized range; ranges here are
    // windows of at most a few hundred indices.
    std::vector<Index> pool;
    pool.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Index v = lo; v <= hi; ++v) pool.push_back(v);
    for (int i = 0; i < n; ++i) {
        const auto j = static_cast<std::size_t>(
            uniform_int(i, static_cast<std::int64_t>(pool.size()) - 1));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    std::vector<Index> out(pool.begin(), pool.begin() + n);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qg
