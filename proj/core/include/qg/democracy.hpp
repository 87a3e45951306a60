#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "qg/space.hpp"

namespace qg {

struct DemocracyPair {
    double h_r = 0.0; // sup_{|gamma|=N} ||1_gamma||
    double h_l = 0.0; // inf_{|gamma|=N} ||1_gamma||
};

struct DemocracyExtrema {
    double h_r = 0.0;
    double h_l = 0.0;
    IndexSet max_set; // canonical argmax (see tie-break note in democracy.cpp)
    IndexSet min_set; // canonical argmin
};

// Exact extrema of ||1_gamma|| over all gamma in {1..window} with
// |gamma| = n, by subset enumeration. Requires window >= n and, for
// direct sums, at least n window indices in every component (otherwise
// the extremum could be missed). threads > 1 splits the enumeration by
// leading element; results are bit-identical to the sequential run.
DemocracyExtrema democracy_bruteforce(const SpaceSpec& space, int n, int window,
                                      int threads = 1);

// Same extrema over n-subsets of an arbitrary sorted universe
// (sequential; used to re-select disjoint witness sets).
DemocracyExtrema democracy_extrema_over(const SpaceSpec& space, int n,
                                        const IndexSet& universe);

// Analytic values: Lp -> n^(1/p); Lorentz(p,w) -> (sum_{k<=n} w_k)^(1/p);
// direct sums by extremal split-profile enumeration.
DemocracyPair democracy_closed_form(const SpaceSpec& space, int n);

// mu[N-1] = max_{k<=N} h_r(k)/h_l(k), the running supremum of ratios.
std::vector<double> mu_table(std::span<const double> h_r, std::span<const double> h_l);

// v[N-1] = sum_{k<=N} mu(k)/k, the Lebesgue factor.
std::vector<double> v_table(std::span<const double> mu);

// Prefix sums of mu(k)/k up to n (v(0) = 0).
double v_of(std::span<const double> mu, int n);

struct DoublingEntry {
    int k = 0;
    double ratio = 0.0; // mu(2k)/mu(k)
    double bound = 0.0; // 2K^2, the worst case of the even/odd split
};

struct DoublingReport {
    std::vector<DoublingEntry> entries;
    double max_ratio = 0.0;
    bool all_within_bound = true;
};

DoublingReport doubling_report(std::span<const double> mu, double K);

struct DilationReport {
    std::vector<double> ratios; // v(N)/mu(N)
    double sup_ratio = 0.0;
    int sup_at = 0;
    // mu(N_max)/mu(ceil(N_max/2)); < 1.1 marks the democratic log regime
    // (mu failed to grow over the last octave, so v/mu tracks H_N).
    double mu_octave_ratio = 0.0;
    bool log_regime = false;
};

DilationReport dilation_remark_check(std::span<const double> mu,
                                     std::span<const double> v);

struct DemocracyTable {
    int n_max = 0;
    int window = 0; // 0 when built from the closed form
    std::vector<double> h_r, h_l, mu, v;
};

DemocracyTable build_democracy_table_closed(const SpaceSpec& space, int n_max);
DemocracyTable build_democracy_table_brute(const SpaceSpec& space, int n_max,
                                           int window, int threads = 1);

// Columns N,h_r,h_l,mu,v,doubling_ratio at 17 significant digits;
// doubling_ratio is empty where 2N exceeds the table.
void write_democracy_csv(const DemocracyTable& table, std::ostream& out);

} // namespace qg
