#pragma once

#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qg/sparse_vector.hpp"

namespace qg {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Lorentz weight sequence: an explicit nonincreasing prefix (w_1 = 1)
// continued by a tail rule, so weights are defined for every k >= 1.
struct GeometricTail {
    double ratio = 0.5; // w_{k+1} = ratio * w_k past the prefix, 0 < ratio <= 1
};
struct PowerTail {
    double alpha = 1.0; // w_k = k^(-alpha) past the prefix, alpha >= 0
};

struct LorentzWeights {
    std::vector<double> prefix; // may be empty; if not, prefix[0] == 1
    std::variant<GeometricTail, PowerTail> tail = GeometricTail{};

    double at(std::int64_t k) const;           // w_k, k >= 1
    double partial_sum(std::int64_t n) const;  // w_1 + ... + w_n
};

enum class Aggregation { sum, max };

struct LpSpace {
    double p = 2.0; // >= 1, or kInfinity
};

struct LorentzSpace {
    double p = 1.0; // finite, >= 1
    LorentzWeights weights;
};

class SpaceSpec;

// Direct sum over a cyclic index split: index k belongs to component
// ((k-1) mod m) + 1, m = number of components. Components must be leaf
// kinds (Lp or Lorentz); see direct_sum() for why nesting is rejected.
struct DirectSumSpace {
    std::vector<SpaceSpec> components;
    Aggregation aggregation = Aggregation::sum;
};

// Descriptor of a coordinate-monotone (1-unconditional) norm on sparse
// coefficient sequences. Every implemented kind is normalized:
// ||e_k|| = 1 exactly for all k. Construction validates the descriptor;
// instances are immutable afterwards, so norm evaluation is pure and
// safe to run concurrently.
class SpaceSpec {
public:
    static SpaceSpec lp(double p);
    static SpaceSpec lorentz(double p, LorentzWeights weights);
    static SpaceSpec direct_sum(std::vector<SpaceSpec> components,
                                Aggregation aggregation = Aggregation::sum);

    bool is_lp() const { return std::holds_alternative<LpSpace>(kind_); }
    bool is_lorentz() const { return std::holds_alternative<LorentzSpace>(kind_); }
    bool is_direct_sum() const { return std::holds_alternative<DirectSumSpace>(kind_); }

    const LpSpace& as_lp() const { return std::get<LpSpace>(kind_); }
    const LorentzSpace& as_lorentz() const { return std::get<LorentzSpace>(kind_); }
    const DirectSumSpace& as_direct_sum() const { return std::get<DirectSumSpace>(kind_); }

    // Number of direct-sum components (1 for leaf kinds).
    int component_count() const;
    // 0-based component of index k under the cyclic split.
    int component_of(Index k) const;

    // All implemented kinds are coordinate-monotone, hence quasi-greedy
    // with constant 1.
    bool is_coordinate_monotone() const { return true; }

    // Filesystem-safe short name, e.g. "lp2", "lorentz1_geo0.5", "lp1+lp2".
    std::string label() const;

private:
    SpaceSpec() = default;
    std::variant<LpSpace, LorentzSpace, DirectSumSpace> kind_;
};

// ||x|| under the space's norm. The span overload evaluates a raw entry
// view (entries need not satisfy the no-zeros invariant), which the
// enumeration loops use to avoid rebuilding vectors.
double norm(const SpaceSpec& space, const SparseVector& x);
double norm(const SpaceSpec& space, std::span<const Entry> entries);

// || sum_{k in gamma} e_k ||.
double indicator_norm(const SpaceSpec& space, const IndexSet& gamma);

} // namespace qg
