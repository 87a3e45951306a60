#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qg {

using Index = std::int64_t;
using Entry = std::pair<Index, double>;

// Sorted ascending, duplicate-free index set.
using IndexSet = std::vector<Index>;

IndexSet make_index_set(std::vector<Index> indices);
bool contains(const IndexSet& set, Index k);
bool is_subset(const IndexSet& inner, const IndexSet& outer);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);

// Finitely supported real coefficient sequence indexed by positive integers.
// Entries are kept sorted by index; exact zeros are never stored, so the
// empty vector is the zero vector.
class SparseVector {
public:
    SparseVector() = default;

    // Sorts, rejects duplicate or nonpositive indices, drops exact zeros.
    static SparseVector from_entries(std::vector<Entry> entries);

    // The vector with coefficient 1 on every index of `support`.
    static SparseVector indicator(const IndexSet& support);

    std::span<const Entry> entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // 0.0 when k is not in the support.
    double coeff(Index k) const;
    IndexSet support() const;

    // Entry-wise restriction to `gamma` (the projection S_gamma).
    SparseVector restricted_to(const IndexSet& gamma) const;
    // Entry-wise restriction to the complement of `gamma`.
    SparseVector without(const IndexSet& gamma) const;

    friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
    friend SparseVector operator-(const SparseVector& a, const SparseVector& b);
    friend SparseVector operator*(double t, const SparseVector& x);
    friend bool operator==(const SparseVector& a, const SparseVector& b) = default;

private:
    std::vector<Entry> entries_;
};

} // namespace qg
