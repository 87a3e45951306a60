#include "qg/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qg/democracy.hpp"
#include "qg/errors.hpp"
#include "qg/greedy.hpp"
#include "qg/rng.hpp"

namespace qg {

namespace {

void check_capacity(const SparseVector& x, const SigmaOptions& options) {
    const int s = static_cast<int>(x.support_size());
    if (s > options.enumeration_cap) {
        throw CapacityError("support size " + std::to_string(s) +
                            " exceeds the exhaustive enumeration cap " +
                            std::to_string(options.enumeration_cap) +
                            "; use sigma_tilde_sampled for a flagged upper bound");
    }
}

// Calls visit(positions) for every k-combination of {0..s-1}, in
// lexicographic order.
template <typename Visit>
void for_each_combination(int s, int k, Visit&& visit) {
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(i)] = i;
    while (true) {
        visit(std::span<const int>(pos.data(), pos.size()));
        int j = k - 1;
        while (j >= 0 && pos[static_cast<std::size_t>(j)] == s - k + j) --j;
        if (j < 0) break;
        ++pos[static_cast<std::size_t>(j)];
        for (int i = j + 1; i < k; ++i) {
            pos[static_cast<std::size_t>(i)] = pos[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
}

// Residual entries of x after keeping the support positions in `kept`
// (kept is sorted ascending).
std::size_t fill_residual(std::span<const Entry> entries, std::span<const int> kept,
                          Entry* out) {
    std::size_t count = 0;
    std::size_t ki = 0;
    for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
        if (ki < kept.size() && kept[ki] == i) {
            ++ki;
            continue;
        }
        out[count++] = entries[static_cast<std::size_t>(i)];
    }
    return count;
}

} // namespace

ApproximationResult sigma_tilde(const SpaceSpec& space, const SparseVector& x, int n,
                                SigmaOptions options) {
    if (n < 0) throw ArgumentError("N must be >= 0");
    check_capacity(x, options);
    const int s = static_cast<int>(x.support_size());
    const auto entries = x.entries();

    std::vector<Entry> buf(static_cast<std::size_t>(s));
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<int> best_positions;

    // Sizes ascending and combinations in lex order; keeping only strict
    // improvements yields the smallest, then lexicographically least
    // witness among minimizers.
    const int k_max = std::min(n, s);
    for (int k = 0; k <= k_max; ++k) {
        for_each_combination(s, k, [&](std::span<const int> kept) {
            const std::size_t count = fill_residual(entries, kept, buf.data());
            const double value = norm(space, std::span<const Entry>(buf.data(), count));
            if (value < best_value) {
                best_value = value;
                best_positions.assign(kept.begin(), kept.end());
            }
        });
    }

    ApproximationResult result;
    result.value = best_value;
    for (int p : best_positions) {
        result.witness_set.push_back(entries[static_cast<std::size_t>(p)].first);
    }
    result.witness_vector = x.restricted_to(result.witness_set);
    result.exact = true;
    return result;
}

ApproximationResult sigma(const SpaceSpec& space, const SparseVector& x, int n,
                          SigmaOptions options) {
    if (!space.is_coordinate_monotone()) {
        throw UnsupportedError(
            "exact sigma is only available on coordinate-monotone spaces; "
            "sigma_tilde gives a flagged upper bound");
    }
    // On a fixed support gamma the optimal approximant is S_gamma(x):
    // |x - S_gamma(x)| <= |x - y| coordinate-wise for every y on gamma.
    return sigma_tilde(space, x, n, options);
}

ApproximationResult sigma_tilde_sampled(const SpaceSpec& space, const SparseVector& x,
                                        int n, int samples, std::uint64_t seed) {
    if (n < 0) throw ArgumentError("N must be >= 0");
    const int s = static_cast<int>(x.support_size());
    const auto entries = x.entries();
    const int k = std::min(n, s);

    ApproximationResult best;
    best.value = std::numeric_limits<double>::infinity();
    best.exact = false;
    auto offer = [&](const IndexSet& gamma) {
        const SparseVector residual_vec = x.without(gamma);
        const double value = norm(space, residual_vec);
        if (value < best.value) {
            best.value = value;
            best.witness_set = gamma;
        }
    };

    // The greedy set is always a candidate, so the bound is never worse
    // than the greedy residual.
    offer(greedy_set(x, k));
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        const std::vector<Index> positions = rng.sample_distinct(k, 1, s);
        IndexSet gamma;
        gamma.reserve(static_cast<std::size_t>(k));
        for (Index p : positions) {
            gamma.push_back(entries[static_cast<std::size_t>(p - 1)].first);
        }
        offer(gamma);
    }
    best.witness_vector = x.restricted_to(best.witness_set);
    return best;
}

std::vector<double> sigma_profile(const SpaceSpec& space, const SparseVector& x,
                                  int n_max, SigmaOptions options) {
    if (n_max < 0) throw ArgumentError("N must be >= 0");
    check_capacity(x, options);
    const int s = static_cast<int>(x.support_size());
    const auto entries = x.entries();

    std::vector<Entry> buf(static_cast<std::size_t>(s));
    std::vector<double> best_by_size(static_cast<std::size_t>(std::min(n_max, s)) + 1,
                                     std::numeric_limits<double>::infinity());
    for (int k = 0; k <= std::min(n_max, s); ++k) {
        for_each_combination(s, k, [&](std::span<const int> kept) {
            const std::size_t count = fill_residual(entries, kept, buf.data());
            const double value = norm(space, std::span<const Entry>(buf.data(), count));
            best_by_size[static_cast<std::size_t>(k)] =
                std::min(best_by_size[static_cast<std::size_t>(k)], value);
        });
    }

    std::vector<double> profile(static_cast<std::size_t>(n_max) + 1, 0.0);
    double running = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= n_max; ++n) {
        if (n <= std::min(n_max, s)) {
            running = std::min(running, best_by_size[static_cast<std::size_t>(n)]);
        }
        profile[static_cast<std::size_t>(n)] = n >= s ? 0.0 : running;
    }
    return profile;
}

bool validate_sigma_reduction(const SpaceSpec& space, const SparseVector& x, int n,
                              int perturbations, std::uint64_t seed, double rel_tol) {
    if (n < 0) throw ArgumentError("N must be >= 0");
    const int s = static_cast<int>(x.support_size());
    const auto entries = x.entries();
    Rng rng(seed);

    std::vector<Entry> work(entries.begin(), entries.end());
    bool ok = true;
    for (int k = 0; k <= std::min(n, s) && ok; ++k) {
        for_each_combination(s, k, [&](std::span<const int> kept) {
            if (!ok) return;
            // Baseline: the projection residual, zero on the kept set.
            for (int p : kept) work[static_cast<std::size_t>(p)].second = 0.0;
            const double projected =
                norm(space, std::span<const Entry>(work.data(), work.size()));
            for (int t = 0; t < perturbations; ++t) {
                // y_k = x_k (1 + u) on gamma, so (x - y)_k = -x_k u.
                for (int p : kept) {
                    const double u = rng.uniform(-1.5, 1.5);
                    work[static_cast<std::size_t>(p)].second =
                        -entries[static_cast<std::size_t>(p)].second * u;
                }
                const double perturbed =
                    norm(space, std::span<const Entry>(work.data(), work.size()));
                if (perturbed < projected * (1.0 - rel_tol)) {
                    ok = false;
                    break;
                }
            }
            for (int p : kept) {
                work[static_cast<std::size_t>(p)] = entries[static_cast<std::size_t>(p)];
            }
        });
    }
    return ok;
}

EfficiencyResult greedy_efficiency(const SpaceSpec& space,
                                   std::span<const SparseVector> corpus, int n,
                                   SigmaOptions options) {
    if (corpus.empty()) throw ArgumentError("corpus must be nonempty");
    EfficiencyResult result;
    bool first = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const SparseVector& x = corpus[i];
        if (x.empty()) {
            throw ArgumentError("corpus element " + std::to_string(i) +
                                " has empty support");
        }
        const double greedy_error = norm(space, residual(x, n));
        const ApproximationResult tilde = sigma_tilde(space, x, n, options);
        // sigma == sigma_tilde on the implemented monotone spaces.
        const double best = tilde.value;
        const double ratio =
            best == 0.0 ? (greedy_error == 0.0
                               ? 1.0
                               : std::numeric_limits<double>::infinity())
                        : greedy_error / best;
        if (first || ratio > result.e_hat) {
            result.e_hat = ratio;
            result.e_tilde_hat = ratio;
            result.argmax_index = i;
            result.argmax_sigma = best;
            result.argmax_sigma_tilde = tilde.value;
            first = false;
        }
    }
    return result;
}

WitnessResult adversarial_witness(const SpaceSpec& space, int n, double eps,
                                  int window) {
    if (!(eps > 0.0)) throw ArgumentError("witness eps must be > 0");
    const DemocracyExtrema global = democracy_bruteforce(space, n, window);

    WitnessResult result;
    result.max_set = global.max_set;
    IndexSet universe;
    for (Index k = 1; k <= window; ++k) universe.push_back(k);
    if (set_intersection(global.max_set, global.min_set).empty()) {
        result.min_set = global.min_set;
    } else {
        // Re-select the minimizer among sets disjoint from the maximizer.
        const IndexSet rest = set_difference(universe, global.max_set);
        if (static_cast<int>(rest.size()) < n) {
            throw WindowError("window M=" + std::to_string(window) +
                              " cannot hold disjoint extremal sets of size " +
                              std::to_string(n));
        }
        result.min_set = democracy_extrema_over(space, n, rest).min_set;
    }

    result.vector = SparseVector::indicator(result.max_set) +
                    (1.0 + eps) * SparseVector::indicator(result.min_set);
    const double min_norm = indicator_norm(space, result.min_set);
    result.lower_bound = global.h_r / ((1.0 + eps) * min_norm);
    return result;
}

} // namespace qg
