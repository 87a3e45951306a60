#include "qg/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qg {

GreedyOrdering greedy_ordering(const SparseVector& x) {
    GreedyOrdering ordering;
    ordering.pi.reserve(x.support_size());
    for (const Entry& e : x.entries()) ordering.pi.push_back(e.first);
    // Magnitude descending, ties by ascending index.
    std::stable_sort(ordering.pi.begin(), ordering.pi.end(), [&x](Index a, Index b) {
        const double ma = std::abs(x.coeff(a));
        const double mb = std::abs(x.coeff(b));
        if (ma != mb) return ma > mb;
        return a < b;
    });
    ordering.rearranged.reserve(ordering.pi.size());
    for (Index k : ordering.pi) ordering.rearranged.push_back(std::abs(x.coeff(k)));
    return ordering;
}

IndexSet greedy_set(const SparseVector& x, int n) {
    const GreedyOrdering ordering = greedy_ordering(x);
    const auto take = std::min<std::size_t>(static_cast<std::size_t>(std::max(n, 0)),
                                            ordering.pi.size());
    IndexSet gamma(ordering.pi.begin(), ordering.pi.begin() + static_cast<std::ptrdiff_t>(take));
    std::sort(gamma.begin(), gamma.end());
    return gamma;
}

SparseVector greedy_sum(const SparseVector& x, int n) {
    return x.restricted_to(greedy_set(x, n));
}

SparseVector residual(const SparseVector& x, int n) {
    return x.without(greedy_set(x, n));
}

SparseVector project(const SparseVector& x, const IndexSet& gamma) {
    return x.restricted_to(gamma);
}

bool threshold_property(const SparseVector& x, int n) {
    const IndexSet gamma = greedy_set(x, n);
    double min_inside = std::numeric_limits<double>::infinity();
    double max_outside = 0.0;
    for (const Entry& e : x.entries()) {
        const double mag = std::abs(e.second);
        if (contains(gamma, e.first)) {
            min_inside = std::min(min_inside, mag);
        } else {
            max_outside = std::max(max_outside, mag);
        }
    }
    return min_inside >= max_outside;
}

} // namespace qg
