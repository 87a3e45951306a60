#include "qg/democracy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <string>

#include "qg/errors.hpp"

namespace qg {

namespace {

// Component-count profile of an index set (single bucket for leaf kinds).
std::vector<int> profile_of(const SpaceSpec& space, const IndexSet& gamma) {
    std::vector<int> counts(static_cast<std::size_t>(space.component_count()), 0);
    for (Index k : gamma) counts[static_cast<std::size_t>(space.component_of(k))]++;
    return counts;
}

// Extremal-set tie-break. Equal norms are resolved toward the extremal
// component profile first (lexicographically greater profile for the
// max, smaller for the min), then toward the lexicographically smallest
// index set. The profile rule makes the canonical maximizer of a direct
// sum a pure single-component set even when mixed sets tie, which is
// what the adversarial witness construction needs.
struct Candidate {
    double value = 0.0;
    std::vector<int> profile;
    IndexSet set;
    bool valid = false;
};

bool improves_max(const Candidate& cand, const Candidate& best) {
    if (!best.valid) return true;
    if (cand.value != best.value) return cand.value > best.value;
    if (cand.profile != best.profile) return cand.profile > best.profile;
    return cand.set < best.set;
}

bool improves_min(const Candidate& cand, const Candidate& best) {
    if (!best.valid) return true;
    if (cand.value != best.value) return cand.value < best.value;
    if (cand.profile != best.profile) return cand.profile < best.profile;
    return cand.set < best.set;
}

struct ExtremaAccumulator {
    Candidate max_cand;
    Candidate min_cand;

    void offer(const SpaceSpec& space, const IndexSet& gamma, double value) {
        Candidate cand{value, profile_of(space, gamma), gamma, true};
        if (improves_max(cand, max_cand)) max_cand = cand;
        if (improves_min(cand, min_cand)) min_cand = cand;
    }

    void merge(const ExtremaAccumulator& other) {
        if (other.max_cand.valid && improves_max(other.max_cand, max_cand)) {
            max_cand = other.max_cand;
        }
        if (other.min_cand.valid && improves_min(other.min_cand, min_cand)) {
            min_cand = other.min_cand;
        }
    }
};

// Enumerates all n-subsets of {1..window} whose smallest element lands
// in `first_elements`, in lexicographic order.
void enumerate_from_first(const SpaceSpec& space, int n, int window,
                          const std::vector<Index>& first_elements,
                          ExtremaAccumulator& acc) {
    std::vector<Entry> entries(static_cast<std::size_t>(n));
    IndexSet gamma(static_cast<std::size_t>(n));
    for (Index first : first_elements) {
        gamma[0] = first;
        // Remaining n-1 elements from {first+1..window}.
        std::vector<Index> rest(static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n - 1; ++i) rest[static_cast<std::size_t>(i)] = first + 1 + i;
        if (!rest.empty() && rest.back() > window) continue;
        while (true) {
            for (int i = 0; i < n - 1; ++i) gamma[static_cast<std::size_t>(i + 1)] = rest[static_cast<std::size_t>(i)];
            for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i)] = {gamma[static_cast<std::size_t>(i)], 1.0};
            acc.offer(space, gamma, norm(space, std::span<const Entry>(entries.data(), entries.size())));
            // Next combination of `rest` in lex order.
            int j = n - 2;
            while (j >= 0 && rest[static_cast<std::size_t>(j)] == window - (n - 2 - j)) --j;
            if (j < 0) break;
            ++rest[static_cast<std::size_t>(j)];
            for (int i = j + 1; i < n - 1; ++i) {
                rest[static_cast<std::size_t>(i)] = rest[static_cast<std::size_t>(i - 1)] + 1;
            }
        }
    }
}

void check_window_feasible(const SpaceSpec& space, int n, int window) {
    if (n < 1) throw ArgumentError("set size N must be >= 1");
    if (window < n) {
        throw ArgumentError("window M=" + std::to_string(window) +
                            " smaller than N=" + std::to_string(n));
    }
    if (space.is_direct_sum()) {
        const int r = space.component_count();
        for (int c = 0; c < r; ++c) {
            int count = 0;
            for (Index k = 1; k <= window; ++k) {
                if (space.component_of(k) == c) ++count;
            }
            if (count < n) {
                throw ArgumentError(
                    "window M=" + std::to_string(window) + " holds only " +
                    std::to_string(count) + " indices of component " + std::to_string(c + 1) +
                    ", need N=" + std::to_string(n) + "; the extremum could be missed");
            }
        }
    }
}

} // namespace

DemocracyExtrema democracy_bruteforce(const SpaceSpec& space, int n, int window,
                                      int threads) {
    check_window_feasible(space, n, window);

    std::vector<Index> firsts;
    for (Index f = 1; f <= window - n + 1; ++f) firsts.push_back(f);

    ExtremaAccumulator acc;
    if (threads <= 1 || firsts.size() <= 1) {
        enumerate_from_first(space, n, window, firsts, acc);
    } else {
        const int workers = std::min<int>(threads, static_cast<int>(firsts.size()));
        std::vector<std::vector<Index>> buckets(static_cast<std::size_t>(workers));
        for (std::size_t i = 0; i < firsts.size(); ++i) {
            buckets[i % static_cast<std::size_t>(workers)].push_back(firsts[i]);
        }
        std::vector<std::future<ExtremaAccumulator>> futures;
        for (int w = 0; w < workers; ++w) {
            futures.push_back(std::async(std::launch::async, [&space, n, window,
                                                              bucket = buckets[static_cast<std::size_t>(w)]]() {
                ExtremaAccumulator local;
                enumerate_from_first(space, n, window, bucket, local);
                return local;
            }));
        }
        for (auto& f : futures) acc.merge(f.get());
    }

    DemocracyExtrema out;
    out.h_r = acc.max_cand.value;
    out.h_l = acc.min_cand.value;
    out.max_set = acc.max_cand.set;
    out.min_set = acc.min_cand.set;
    return out;
}

DemocracyExtrema democracy_extrema_over(const SpaceSpec& space, int n,
                                        const IndexSet& universe) {
    if (n < 1) throw ArgumentError("set size N must be >= 1");
    if (static_cast<int>(universe.size()) < n) {
        throw WindowError("universe of " + std::to_string(universe.size()) +
                          " indices cannot hold a set of size " + std::to_string(n));
    }
    const int s = static_cast<int>(universe.size());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i;
    std::vector<Entry> entries(static_cast<std::size_t>(n));
    IndexSet gamma(static_cast<std::size_t>(n));
    ExtremaAccumulator acc;
    while (true) {
        for (int i = 0; i < n; ++i) {
            gamma[static_cast<std::size_t>(i)] = universe[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
            entries[static_cast<std::size_t>(i)] = {gamma[static_cast<std::size_t>(i)], 1.0};
        }
        acc.offer(space, gamma, norm(space, std::span<const Entry>(entries.data(), entries.size())));
        int j = n - 1;
        while (j >= 0 && pos[static_cast<std::size_t>(j)] == s - n + j) --j;
        if (j < 0) break;
        ++pos[static_cast<std::size_t>(j)];
        for (int i = j + 1; i < n; ++i) {
            pos[static_cast<std::size_t>(i)] = pos[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    DemocracyExtrema out;
    out.h_r = acc.max_cand.value;
    out.h_l = acc.min_cand.value;
    out.max_set = acc.max_cand.set;
    out.min_set = acc.min_cand.set;
    return out;
}

namespace {

double leaf_indicator_value(const SpaceSpec& space, int n) {
    if (n <= 0) return 0.0;
    if (space.is_lp()) {
        const double p = space.as_lp().p;
        if (std::isinf(p)) return 1.0;
        return std::pow(static_cast<double>(n), 1.0 / p);
    }
    const auto& lz = space.as_lorentz();
    const double sum = lz.weights.partial_sum(n);
    return lz.p == 1.0 ? sum : std::pow(sum, 1.0 / lz.p);
}

// Profiles (n_1..n_r), sum = n, enumerated with the leading components
// filled first so strict improvement lands on the pure-first-component
// profile when values tie. Matches the brute-force tie-break.
template <typename Visit>
void enumerate_profiles(int components, int n, std::vector<int>& profile, int pos,
                        Visit&& visit) {
    if (pos == components - 1) {
        profile[static_cast<std::size_t>(pos)] = n;
        visit(profile);
        return;
    }
    for (int take = n; take >= 0; --take) {
        profile[static_cast<std::size_t>(pos)] = take;
        enumerate_profiles(components, n - take, profile, pos + 1, visit);
    }
}

} // namespace

DemocracyPair democracy_closed_form(const SpaceSpec& space, int n) {
    if (n < 1) throw ArgumentError("set size N must be >= 1");
    if (space.is_lp() || space.is_lorentz()) {
        const double value = leaf_indicator_value(space, n);
        return {value, value};
    }
    const auto& ds = space.as_direct_sum();
    const int r = static_cast<int>(ds.components.size());
    double best_max = 0.0;
    double best_min = 0.0;
    bool first = true;
    std::vector<int> profile(static_cast<std::size_t>(r), 0);
    enumerate_profiles(r, n, profile, 0, [&](const std::vector<int>& counts) {
        double value = 0.0;
        for (int c = 0; c < r; ++c) {
            const double part =
                leaf_indicator_value(ds.components[static_cast<std::size_t>(c)],
                                     counts[static_cast<std::size_t>(c)]);
            value = ds.aggregation == Aggregation::sum ? value + part
                                                       : std::max(value, part);
        }
        if (first) {
            best_max = best_min = value;
            first = false;
        } else {
            best_max = std::max(best_max, value);
            best_min = std::min(best_min, value);
        }
    });
    return {best_max, best_min};
}

std::vector<double> mu_table(std::span<const double> h_r, std::span<const double> h_l) {
    if (h_r.size() != h_l.size()) {
        throw ArgumentError("h_r and h_l tables must have equal length");
    }
    std::vector<double> mu;
    mu.reserve(h_r.size());
    double running = 0.0;
    for (std::size_t i = 0; i < h_r.size(); ++i) {
        if (!(h_l[i] > 0.0)) throw ArgumentError("h_l must be strictly positive");
        running = std::max(running, h_r[i] / h_l[i]);
        mu.push_back(running);
    }
    return mu;
}

std::vector<double> v_table(std::span<const double> mu) {
    std::vector<double> v;
    v.reserve(mu.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i > 0 && mu[i] < mu[i - 1]) {
            throw ArgumentError("mu table must be nondecreasing");
        }
        sum += mu[i] / static_cast<double>(i + 1);
        v.push_back(sum);
    }
    return v;
}

double v_of(std::span<const double> mu, int n) {
    if (n <= 0) return 0.0;
    if (static_cast<std::size_t>(n) > mu.size()) {
        throw ArgumentError("mu table too short: need N=" + std::to_string(n) +
                            ", have " + std::to_string(mu.size()));
    }
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) sum += mu[static_cast<std::size_t>(k - 1)] / k;
    return sum;
}

DoublingReport doubling_report(std::span<const double> mu, double K) {
    DoublingReport report;
    const double bound = 2.0 * K * K;
    for (std::size_t k = 1; 2 * k <= mu.size(); ++k) {
        const double ratio = mu[2 * k - 1] / mu[k - 1];
        report.entries.push_back({static_cast<int>(k), ratio, bound});
        report.max_ratio = std::max(report.max_ratio, ratio);
        if (ratio > bound * (1.0 + 1e-9)) report.all_within_bound = false;
    }
    return report;
}

DilationReport dilation_remark_check(std::span<const double> mu,
                                     std::span<const double> v) {
    if (mu.size() != v.size() || mu.empty()) {
        throw ArgumentError("mu and v tables must be nonempty and equally long");
    }
    DilationReport report;
    report.ratios.reserve(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const double ratio = v[i] / mu[i];
        report.ratios.push_back(ratio);
        if (ratio > report.sup_ratio) {
            report.sup_ratio = ratio;
            report.sup_at = static_cast<int>(i + 1);
        }
    }
    const std::size_t half = (mu.size() + 1) / 2;
    report.mu_octave_ratio = mu.back() / mu[half - 1];
    report.log_regime = report.mu_octave_ratio < 1.1;
    return report;
}

DemocracyTable build_democracy_table_closed(const SpaceSpec& space, int n_max) {
    DemocracyTable table;
    table.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        const DemocracyPair pair = democracy_closed_form(space, n);
        table.h_r.push_back(pair.h_r);
        table.h_l.push_back(pair.h_l);
    }
    table.mu = mu_table(table.h_r, table.h_l);
    table.v = v_table(table.mu);
    return table;
}

DemocracyTable build_democracy_table_brute(const SpaceSpec& space, int n_max,
                                           int window, int threads) {
    DemocracyTable table;
    table.n_max = n_max;
    table.window = window;
    for (int n = 1; n <= n_max; ++n) {
        const DemocracyExtrema ext = democracy_bruteforce(space, n, window, threads);
        table.h_r.push_back(ext.h_r);
        table.h_l.push_back(ext.h_l);
    }
    table.mu = mu_table(table.h_r, table.h_l);
    table.v = v_table(table.mu);
    return table;
}

void write_democracy_csv(const DemocracyTable& table, std::ostream& out) {
    out << "N,h_r,h_l,mu,v,doubling_ratio\n";
    char buf[512];
    for (int n = 1; n <= table.n_max; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        int len = std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,", n,
                                table.h_r[i], table.h_l[i], table.mu[i], table.v[i]);
        out.write(buf, len);
        if (2 * n <= table.n_max) {
            len = std::snprintf(buf, sizeof(buf), "%.17g",
                                table.mu[static_cast<std::size_t>(2 * n - 1)] / table.mu[i]);
            out.write(buf, len);
        }
        out << "\n";
    }
}

} // namespace qg
