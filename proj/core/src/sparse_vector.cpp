#include "qg/sparse_vector.hpp"

#include <algorithm>
#include <string>

#include "qg/errors.hpp"

namespace qg {

IndexSet make_index_set(std::vector<Index> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return indices;
}

bool contains(const IndexSet& set, Index k) {
    return std::binary_search(set.begin(), set.end(), k);
}

bool is_subset(const IndexSet& inner, const IndexSet& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector x;
    x.entries_.reserve(entries.size());
    Index last = 0;
    for (const Entry& e : entries) {
        if (e.first < 1) {
            throw ArgumentError("sparse vector index must be a positive integer, got " +
                                std::to_string(e.first));
        }
        if (!x.entries_.empty() && e.first == last) {
            throw ArgumentError("duplicate index " + std::to_string(e.first) +
                                " in sparse vector");
        }
        last = e.first;
        if (e.second != 0.0) {
            x.entries_.push_back(e);
        }
    }
    return x;
}

SparseVector SparseVector::indicator(const IndexSet& support) {
    std::vector<Entry> entries;
    entries.reserve(support.size());
    for (Index k : support) entries.emplace_back(k, 1.0);
    return from_entries(std::move(entries));
}

double SparseVector::coeff(Index k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, Index v) { return e.first < v; });
    if (it != entries_.end() && it->first == k) return it->second;
    return 0.0;
}

IndexSet SparseVector::support() const {
    IndexSet out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.first);
    return out;
}

SparseVector SparseVector::restricted_to(const IndexSet& gamma) const {
    SparseVector out;
    for (const Entry& e : entries_) {
        if (contains(gamma, e.first)) out.entries_.push_back(e);
    }
    return out;
}

SparseVector SparseVector::without(const IndexSet& gamma) const {
    SparseVector out;
    for (const Entry& e : entries_) {
        if (!contains(gamma, e.first)) out.entries_.push_back(e);
    }
    return out;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
    SparseVector out;
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
        if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
            out.entries_.push_back(*ia++);
        } else if (ia == a.entries_.end() || ib->first < ia->first) {
            out.entries_.push_back(*ib++);
        } else {
            double v = ia->second + ib->second;
            if (v != 0.0) out.entries_.emplace_back(ia->first, v);
            ++ia;
            ++ib;
        }
    }
    return out;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
    return a + (-1.0 * b);
}

SparseVector operator*(double t, const SparseVector& x) {
    SparseVector out;
    if (t == 0.0) return out;
    out.entries_.reserve(x.entries_.size());
    for (const Entry& e : x.entries_) out.entries_.emplace_back(e.first, t * e.second);
    return out;
}

} // namespace qg
