#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qg/space.hpp"
#include "qg/sparse_vector.hpp"

namespace qg {

struct ApproximationResult {
    double value = 0.0;        // the attained infimum
    IndexSet witness_set;      // |witness_set| <= N, realizes `value`
    SparseVector witness_vector; // projection of x onto witness_set
    bool exact = true;         // false for the sampling fallback
};

struct SigmaOptions {
    // Exhaustive support enumeration guard (~4M subsets at 22).
    int enumeration_cap = 22;
};

// Expansional best approximation: exact min of ||x - S_gamma(x)|| over
// gamma subset of supp(x) with |gamma| <= n. Ties are broken toward the
// smallest, then lexicographically least witness set.
ApproximationResult sigma_tilde(const SpaceSpec& space, const SparseVector& x,
                                int n, SigmaOptions options = {});

// Best n-term approximation. On coordinate-monotone norms the optimal
// vector on a fixed support gamma is S_gamma(x) (|x - S_gamma(x)| <=
// |x - y| coordinate-wise for any y on gamma), so sigma == sigma_tilde;
// the reduction is validated separately by validate_sigma_reduction.
ApproximationResult sigma(const SpaceSpec& space, const SparseVector& x,
                          int n, SigmaOptions options = {});

// Seeded random-subset upper bound for sigma_tilde, for supports past
// the enumeration cap. Result has exact == false.
ApproximationResult sigma_tilde_sampled(const SpaceSpec& space, const SparseVector& x,
                                        int n, int samples, std::uint64_t seed);

// sigma_N(x) for every N = 0..n_max in one enumeration sweep.
std::vector<double> sigma_profile(const SpaceSpec& space, const SparseVector& x,
                                  int n_max, SigmaOptions options = {});

// For every enumerated gamma (|gamma| <= n) draws `perturbations` random
// vectors y supported on gamma and checks ||x - y|| >= ||x - S_gamma(x)||
// up to rel_tol. Returns false on the first violation.
bool validate_sigma_reduction(const SpaceSpec& space, const SparseVector& x, int n,
                              int perturbations, std::uint64_t seed,
                              double rel_tol = 1e-9);

struct EfficiencyResult {
    double e_hat = 1.0;        // max over corpus of ||x - G_n(x)|| / sigma_n(x)
    double e_tilde_hat = 1.0;  // same with sigma_tilde
    std::size_t argmax_index = 0;
    double argmax_sigma = 0.0;
    double argmax_sigma_tilde = 0.0;
};

// Corpus supremum of the greedy-to-best error ratio, 0/0 := 1.
EfficiencyResult greedy_efficiency(const SpaceSpec& space,
                                   std::span<const SparseVector> corpus, int n,
                                   SigmaOptions options = {});

struct WitnessResult {
    SparseVector vector;   // 1_A + (1+eps) 1_B
    double lower_bound = 0.0; // h_r(n) / ((1+eps) h_l(n)) <= e~_n on {vector}
    IndexSet max_set;      // A, attains h_r(n) in the window
    IndexSet min_set;      // B, attains h_l(n) among sets disjoint from A
};

// Adversarial vector whose greedy pass keeps the inflated copy of the
// weakest indicator set and discards the strongest one. The greedy
// residual is then 1_A while keeping A costs only (1+eps) h_l(n).
WitnessResult adversarial_witness(const SpaceSpec& space, int n, double eps,
                                  int window);

} // namespace qg
