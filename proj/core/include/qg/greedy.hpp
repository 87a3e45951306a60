#pragma once

#include <vector>

#include "qg/space.hpp"
#include "qg/sparse_vector.hpp"

namespace qg {

// The greedy permutation of supp(x): pi[j] is the index of the (j+1)-th
// largest coefficient magnitude, ties broken by ascending index, and
// rearranged[j] = |x[pi[j]]| is the nonincreasing rearrangement.
struct GreedyOrdering {
    std::vector<Index> pi;
    std::vector<double> rearranged;
};

GreedyOrdering greedy_ordering(const SparseVector& x);

// The first min(n, supp) greedy indices as a sorted set.
IndexSet greedy_set(const SparseVector& x, int n);

// G_n(x): restriction of x to its n largest-magnitude coefficients.
SparseVector greedy_sum(const SparseVector& x, int n);

// x - G_n(x).
SparseVector residual(const SparseVector& x, int n);

// S_gamma(x): entry-wise restriction of x to gamma.
SparseVector project(const SparseVector& x, const IndexSet& gamma);

// min_{k in greedy set} |x_k| >= max_{k outside} |x_k|; holds by
// construction, exposed for checker reuse.
bool threshold_property(const SparseVector& x, int n);

} // namespace qg
