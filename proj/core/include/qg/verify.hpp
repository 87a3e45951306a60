#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qg/approx.hpp"
#include "qg/space.hpp"
#include "qg/sparse_vector.hpp"

namespace qg {

// Relative tolerance for every inequality verdict.
inline constexpr double kCheckRelTol = 1e-9;

struct VerificationReport {
    std::string check_id;
    std::string inputs_digest;
    double lhs = 0.0;
    double rhs = 0.0;
    std::map<std::string, double> constants; // K, C1, C2, C_eta, slack_factor
    bool pass = false;
    double slack_ratio = 0.0; // lhs/rhs, 0 when both sides vanish
};

// pass <=> lhs <= rhs * (1 + kCheckRelTol); fills slack_ratio.
VerificationReport make_report(std::string check_id, std::string inputs_digest,
                               double lhs, double rhs,
                               std::map<std::string, double> constants);

// K^ = max over x and 0 <= N <= |supp(x)| of
// max(||G_N x||, ||x - G_N x||) / ||x||. Exactly 1.0 on the implemented
// coordinate-monotone spaces. Note K^ only bounds the true constant from
// below on other spaces, so a failure against K^ is inconclusive there.
double estimate_quasi_greedy_constant(const SpaceSpec& space,
                                      std::span<const SparseVector> corpus);

// Two-sided indicator equivalence for x supported on gamma:
//   (1/4K^2)(min |x_k|)||1_gamma|| <= ||x|| <= (2K)(max |x_k|)||1_gamma||.
std::pair<VerificationReport, VerificationReport>
check_two_sided_indicator(const SpaceSpec& space, const SparseVector& x, double K);

using EtaFn = std::function<double(std::int64_t)>;

// ||x|| <= 2 K C_eta sum_k a*_k eta(k)/k, under the hypothesis
// ||1_gamma|| <= C1 eta(|gamma|) for eta increasing and doubling.
// The hypothesis is verified numerically (monotonicity up to 2|supp|,
// spot checks on sample sets) before the check runs; violations throw
// HypothesisError. When C_eta is not given it defaults to 4 D_eta where
// D_eta = max_{k<=|supp|} eta(2k)/eta(k); the dyadic-block argument
// needs 2 D_eta, so the default keeps a 2x margin.
VerificationReport check_lemma_2_1(const SpaceSpec& space, const SparseVector& x,
                                   const EtaFn& eta, double C1, double K,
                                   std::optional<double> C_eta = std::nullopt);

// sup_k a*_k(x) eta(k) <= C2 (4K^3) ||x||, under the hypothesis
// (1/C2) eta(|gamma|) <= ||1_gamma|| (spot-checked; HypothesisError).
VerificationReport check_lemma_2_2(const SpaceSpec& space, const SparseVector& x,
                                   const EtaFn& eta, double C2, double K);

// ||S_gamma(x)|| <= slack * 8K^4 * v(|gamma|) * ||x||.
VerificationReport check_lemma_2_3(const SpaceSpec& space, const SparseVector& x,
                                   const IndexSet& gamma, double K,
                                   std::span<const double> mu, double slack = 1.0);

// ||x - G_N(x)|| <= slack * 8K^5 * v(N) * sigma_N(x); when sigma_N = 0
// the pass condition degenerates to lhs = 0. N >= 1.
VerificationReport check_theorem_1(const SpaceSpec& space, const SparseVector& x,
                                   int n, double K, double slack,
                                   std::span<const double> mu,
                                   SigmaOptions options = {});

// ||1_B|| <= K ||1_A|| for B subset of A.
VerificationReport check_nested_indicator(const SpaceSpec& space, const IndexSet& B,
                                          const IndexSet& A, double K);

// Step-by-step replay of the Lebesgue-inequality proof for one (x, N,
// p_N): the triangle decomposition, the projection bounds on both split
// sets, the threshold comparison between the discarded and kept
// coefficients, and the cardinality identity |P\G| = |G\P|.
struct TheoremTrace {
    IndexSet greedy_indices;  // G, the N greedy indices
    IndexSet p_minus_greedy;  // P \ G
    IndexSet greedy_minus_p;  // G \ P
    double term_approx = 0.0;     // ||x - p_N||
    double term_inside = 0.0;     // ||S_P(x - p_N)||
    double term_swap = 0.0;       // ||S_P(x) - S_G(x)||
    bool cardinality_ok = false;
    bool threshold_ok = false;
    std::vector<VerificationReport> steps;
    bool all_pass = false;
};

TheoremTrace theorem_1_trace(const SpaceSpec& space, const SparseVector& x, int n,
                             const SparseVector& p_n, double K, double slack,
                             std::span<const double> mu);

} // namespace qg
