#include "qg/space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "qg/errors.hpp"

namespace qg {

namespace {

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void validate_p(double p, bool allow_infinite) {
    if (std::isnan(p) || p < 1.0) {
        throw ConfigError("exponent p must satisfy p >= 1, got " + format_number(p));
    }
    if (std::isinf(p) && !allow_infinite) {
        throw ConfigError("p = inf is supported for lp only");
    }
}

} // namespace

double LorentzWeights::at(std::int64_t k) const {
    const auto prefix_len = static_cast<std::int64_t>(prefix.size());
    if (k <= prefix_len) return prefix[static_cast<std::size_t>(k - 1)];
    if (const auto* geo = std::get_if<GeometricTail>(&tail)) {
        // Continue geometrically from the last prefix weight (or from 1).
        const std::int64_t anchor = std::max<std::int64_t>(prefix_len, 1);
        const double base = prefix.empty() ? 1.0 : prefix.back();
        return base * std::pow(geo->ratio, static_cast<double>(k - anchor));
    }
    const auto& pow_tail = std::get<PowerTail>(tail);
    return std::pow(static_cast<double>(k), -pow_tail.alpha);
}

double LorentzWeights::partial_sum(std::int64_t n) const {
    double sum = 0.0;
    for (std::int64_t k = 1; k <= n; ++k) sum += at(k);
    return sum;
}

SpaceSpec SpaceSpec::lp(double p) {
    validate_p(p, /*allow_infinite=*/true);
    SpaceSpec s;
    s.kind_ = LpSpace{p};
    return s;
}

SpaceSpec SpaceSpec::lorentz(double p, LorentzWeights weights) {
    validate_p(p, /*allow_infinite=*/false);
    if (!weights.prefix.empty() && weights.prefix.front() != 1.0) {
        throw ConfigError("lorentz weights must start with w_1 = 1");
    }
    for (double w : weights.prefix) {
        if (!(w > 0.0)) throw ConfigError("lorentz weights must be positive");
    }
    if (const auto* geo = std::get_if<GeometricTail>(&weights.tail)) {
        if (!(geo->ratio > 0.0) || geo->ratio > 1.0) {
            throw ConfigError("geometric tail ratio must lie in (0, 1], got " +
                              format_number(geo->ratio));
        }
    } else if (std::get<PowerTail>(weights.tail).alpha < 0.0) {
        throw ConfigError("power tail exponent must be >= 0");
    }
    // Nonincreasing across the prefix and into the tail.
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(weights.prefix.size()) + 1; ++k) {
        if (weights.at(k + 1) > weights.at(k)) {
            throw ConfigError("lorentz weights must be nonincreasing (w_" +
                              std::to_string(k + 1) + " > w_" + std::to_string(k) + ")");
        }
    }
    if (std::abs(weights.at(1) - 1.0) != 0.0) {
        throw ConfigError("lorentz weights must start with w_1 = 1");
    }
    SpaceSpec s;
    s.kind_ = LorentzSpace{p, std::move(weights)};
    return s;
}

SpaceSpec SpaceSpec::direct_sum(std::vector<SpaceSpec> components, Aggregation aggregation) {
    if (components.size() < 2) {
        throw ConfigError("direct_sum needs at least two components");
    }
    for (const SpaceSpec& c : components) {
        // The cyclic index split does not compose: a nested mod map only
        // ever sees one residue class of the outer split, which starves
        // some of its components and invalidates the closed-form oracle.
        if (c.is_direct_sum()) {
            throw ConfigError("direct_sum components must be lp or lorentz spaces");
        }
    }
    SpaceSpec s;
    s.kind_ = DirectSumSpace{std::move(components), aggregation};
    return s;
}

int SpaceSpec::component_count() const {
    if (const auto* ds = std::get_if<DirectSumSpace>(&kind_)) {
        return static_cast<int>(ds->components.size());
    }
    return 1;
}

int SpaceSpec::component_of(Index k) const {
    return static_cast<int>((k - 1) % component_count());
}

std::string SpaceSpec::label() const {
    if (is_lp()) {
        const double p = as_lp().p;
        return std::isinf(p) ? "lpinf" : "lp" + format_number(p);
    }
    if (is_lorentz()) {
        const auto& lz = as_lorentz();
        std::string tail;
        if (const auto* geo = std::get_if<GeometricTail>(&lz.weights.tail)) {
            tail = "geo" + format_number(geo->ratio);
        } else {
            tail = "pow" + format_number(std::get<PowerTail>(lz.weights.tail).alpha);
        }
        std::string name = "lorentz" + format_number(lz.p) + "_" + tail;
        if (!lz.weights.prefix.empty()) {
            name += "_pre" + std::to_string(lz.weights.prefix.size());
        }
        return name;
    }
    const auto& ds = as_direct_sum();
    std::string name;
    for (std::size_t i = 0; i < ds.components.size(); ++i) {
        if (i) name += "+";
        name += ds.components[i].label();
    }
    if (ds.aggregation == Aggregation::max) name += "_max";
    return name;
}

namespace {

double lp_norm(double p, std::span<const Entry> entries) {
    if (std::isinf(p)) {
        double best = 0.0;
        for (const Entry& e : entries) best = std::max(best, std::abs(e.second));
        return best;
    }
    double sum = 0.0;
    if (p == 1.0) {
        for (const Entry& e : entries) sum += std::abs(e.second);
        return sum;
    }
    if (p == 2.0) {
        for (const Entry& e : entries) sum += e.second * e.second;
        return std::sqrt(sum);
    }
    for (const Entry& e : entries) sum += std::pow(std::abs(e.second), p);
    return std::pow(sum, 1.0 / p);
}

double lorentz_norm(const LorentzSpace& space, std::span<const Entry> entries) {
    // Decreasing rearrangement of the magnitudes, then weighted p-sum.
    constexpr std::size_t kStack = 64;
    double stack[kStack];
    std::vector<double> heap;
    double* mags = stack;
    if (entries.size() > kStack) {
        heap.resize(entries.size());
        mags = heap.data();
    }
    std::size_t count = 0;
    for (const Entry& e : entries) mags[count++] = std::abs(e.second);
    std::sort(mags, mags + count, std::greater<double>());

    const double p = space.p;
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double w = space.weights.at(static_cast<std::int64_t>(i) + 1);
        if (p == 1.0) {
            sum += mags[i] * w;
        } else if (p == 2.0) {
            sum += mags[i] * mags[i] * w;
        } else {
            sum += std::pow(mags[i], p) * w;
        }
    }
    return p == 1.0 ? sum : std::pow(sum, 1.0 / p);
}

double direct_sum_norm(const SpaceSpec& space, const DirectSumSpace& ds,
                       std::span<const Entry> entries) {
    constexpr std::size_t kStack = 64;
    Entry stack[kStack];
    std::vector<Entry> heap;
    Entry* part = stack;
    if (entries.size() > kStack) {
        heap.resize(entries.size());
        part = heap.data();
    }
    double total = 0.0;
    for (int c = 0; c < static_cast<int>(ds.components.size()); ++c) {
        std::size_t count = 0;
        for (const Entry& e : entries) {
            if (space.component_of(e.first) == c) part[count++] = e;
        }
        const double value = norm(ds.components[static_cast<std::size_t>(c)],
                                  std::span<const Entry>(part, count));
        if (ds.aggregation == Aggregation::sum) {
            total += value;
        } else {
            total = std::max(total, value);
        }
    }
    return total;
}

} // namespace

double norm(const SpaceSpec& space, std::span<const Entry> entries) {
    if (space.is_lp()) return lp_norm(space.as_lp().p, entries);
    if (space.is_lorentz()) return lorentz_norm(space.as_lorentz(), entries);
    return direct_sum_norm(space, space.as_direct_sum(), entries);
}

double norm(const SpaceSpec& space, const SparseVector& x) {
    return norm(space, x.entries());
}

double indicator_norm(const SpaceSpec& space, const IndexSet& gamma) {
    return norm(space, SparseVector::indicator(gamma));
}

} // namespace qg
