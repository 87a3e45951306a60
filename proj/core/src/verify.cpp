#include "qg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qg/democracy.hpp"
#include "qg/errors.hpp"
#include "qg/greedy.hpp"

namespace qg {

VerificationReport make_report(std::string check_id, std::string inputs_digest,
                               double lhs, double rhs,
                               std::map<std::string, double> constants) {
    VerificationReport report;
    report.check_id = std::move(check_id);
    report.inputs_digest = std::move(inputs_digest);
    report.lhs = lhs;
    report.rhs = rhs;
    report.constants = std::move(constants);
    report.pass = lhs <= rhs * (1.0 + kCheckRelTol);
    if (rhs == 0.0) {
        report.pass = lhs == 0.0;
        report.slack_ratio = report.pass ? 0.0 : std::numeric_limits<double>::infinity();
    } else {
        report.slack_ratio = lhs / rhs;
    }
    return report;
}

double estimate_quasi_greedy_constant(const SpaceSpec& space,
                                      std::span<const SparseVector> corpus) {
    if (corpus.empty()) throw ArgumentError("corpus must be nonempty");
    double k_hat = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const SparseVector& x = corpus[i];
        if (x.empty()) {
            throw ArgumentError("corpus element " + std::to_string(i) +
                                " is the zero vector");
        }
        const double denom = norm(space, x);
        const int s = static_cast<int>(x.support_size());
        for (int n = 0; n <= s; ++n) {
            const SparseVector kept = greedy_sum(x, n);
            const double ratio =
                std::max(norm(space, kept), norm(space, x - kept)) / denom;
            k_hat = std::max(k_hat, ratio);
        }
    }
    return k_hat;
}

namespace {

std::string vector_digest(const SparseVector& x) {
    return "supp=" + std::to_string(x.support_size());
}

} // namespace

std::pair<VerificationReport, VerificationReport>
check_two_sided_indicator(const SpaceSpec& space, const SparseVector& x, double K) {
    if (x.empty()) throw ArgumentError("coefficient set must be nonempty");
    const IndexSet gamma = x.support();
    const double ind = indicator_norm(space, gamma);
    const double mid = norm(space, x);
    double min_mag = std::numeric_limits<double>::infinity();
    double max_mag = 0.0;
    for (const Entry& e : x.entries()) {
        min_mag = std::min(min_mag, std::abs(e.second));
        max_mag = std::max(max_mag, std::abs(e.second));
    }
    const std::string digest = vector_digest(x);
    auto lower = make_report("two_sided_lower", digest,
                             min_mag * ind / (4.0 * K * K), mid, {{"K", K}});
    auto upper = make_report("two_sided_upper", digest, mid,
                             2.0 * K * max_mag * ind, {{"K", K}});
    return {lower, upper};
}

namespace {

// Spot-verifies the hypothesis of a lemma before the check runs. The
// upper hypothesis (||1_gamma|| <= C eta) additionally needs eta
// increasing through 2|supp| for the dyadic-block argument; the lower
// hypothesis only needs positivity.
void verify_eta_hypothesis(const SpaceSpec& space, const EtaFn& eta, int s,
                           double C1, bool upper_hypothesis) {
    if (s < 1) return;
    if (!(eta(1) > 0.0)) throw HypothesisError("eta must be positive");
    if (upper_hypothesis) {
        for (int k = 1; k < 2 * s; ++k) {
            if (eta(k + 1) < eta(k) * (1.0 - kCheckRelTol)) {
                throw HypothesisError("eta is not increasing at k=" + std::to_string(k));
            }
        }
    }
    // Spot-check against prefix indicator sets {1..m}; the implemented
    // norms are rearrangement-invariant within components, so prefixes
    // exercise the inequality at every cardinality.
    for (int m = 1; m <= s; ++m) {
        IndexSet gamma;
        for (Index k = 1; k <= m; ++k) gamma.push_back(k);
        const double ind = indicator_norm(space, gamma);
        if (upper_hypothesis) {
            if (ind > C1 * eta(m) * (1.0 + kCheckRelTol)) {
                throw HypothesisError("||1_gamma|| <= C1 eta(|gamma|) fails at |gamma|=" +
                                      std::to_string(m));
            }
        } else {
            if (eta(m) / C1 > ind * (1.0 + kCheckRelTol)) {
                throw HypothesisError("eta(|gamma|)/C2 <= ||1_gamma|| fails at |gamma|=" +
                                      std::to_string(m));
            }
        }
    }
}

double measured_doubling(const EtaFn& eta, int s) {
    double d = 1.0;
    for (int k = 1; k <= s; ++k) d = std::max(d, eta(2 * k) / eta(k));
    return d;
}

} // namespace

VerificationReport check_lemma_2_1(const SpaceSpec& space, const SparseVector& x,
                                   const EtaFn& eta, double C1, double K,
                                   std::optional<double> C_eta) {
    const int s = static_cast<int>(x.support_size());
    verify_eta_hypothesis(space, eta, s, C1, /*upper_hypothesis=*/true);
    const double c_eta = C_eta.value_or(4.0 * measured_doubling(eta, std::max(s, 1)));

    const GreedyOrdering ordering = greedy_ordering(x);
    double weighted_sum = 0.0;
    for (int k = 1; k <= s; ++k) {
        weighted_sum +=
            ordering.rearranged[static_cast<std::size_t>(k - 1)] * eta(k) / k;
    }
    return make_report("lemma_2_1", vector_digest(x), norm(space, x),
                       2.0 * K * c_eta * weighted_sum,
                       {{"K", K}, {"C1", C1}, {"C_eta", c_eta}});
}

VerificationReport check_lemma_2_2(const SpaceSpec& space, const SparseVector& x,
                                   const EtaFn& eta, double C2, double K) {
    const int s = static_cast<int>(x.support_size());
    verify_eta_hypothesis(space, eta, s, C2, /*upper_hypothesis=*/false);

    const GreedyOrdering ordering = greedy_ordering(x);
    double sup = 0.0;
    for (int k = 1; k <= s; ++k) {
        sup = std::max(sup, ordering.rearranged[static_cast<std::size_t>(k - 1)] * eta(k));
    }
    return make_report("lemma_2_2", vector_digest(x), sup,
                       C2 * 4.0 * K * K * K * norm(space, x),
                       {{"K", K}, {"C2", C2}});
}

VerificationReport check_lemma_2_3(const SpaceSpec& space, const SparseVector& x,
                                   const IndexSet& gamma, double K,
                                   std::span<const double> mu, double slack) {
    const double lhs = norm(space, project(x, gamma));
    const double k4 = K * K * K * K;
    const double rhs =
        slack * 8.0 * k4 * v_of(mu, static_cast<int>(gamma.size())) * norm(space, x);
    return make_report("lemma_2_3",
                       vector_digest(x) + " |Gamma|=" + std::to_string(gamma.size()),
                       lhs, rhs, {{"K", K}, {"slack_factor", slack}});
}

VerificationReport check_theorem_1(const SpaceSpec& space, const SparseVector& x,
                                   int n, double K, double slack,
                                   std::span<const double> mu, SigmaOptions options) {
    if (n < 1) throw ArgumentError("theorem 1 check needs N >= 1");
    const double lhs = norm(space, residual(x, n));
    const double k5 = K * K * K * K * K;
    const double sigma_n = sigma(space, x, n, options).value;
    const double rhs = slack * 8.0 * k5 * v_of(mu, n) * sigma_n;
    return make_report("theorem_1", vector_digest(x) + " N=" + std::to_string(n),
                       lhs, rhs, {{"K", K}, {"slack_factor", slack}});
}

VerificationReport check_nested_indicator(const SpaceSpec& space, const IndexSet& B,
                                          const IndexSet& A, double K) {
    if (!is_subset(B, A)) throw ArgumentError("nested indicator check needs B subset of A");
    return make_report("nested_indicator",
                       "|B|=" + std::to_string(B.size()) + " |A|=" + std::to_string(A.size()),
                       indicator_norm(space, B), K * indicator_norm(space, A), {{"K", K}});
}

TheoremTrace theorem_1_trace(const SpaceSpec& space, const SparseVector& x, int n,
                             const SparseVector& p_n, double K, double slack,
                             std::span<const double> mu) {
    if (static_cast<int>(p_n.support_size()) != n) {
        throw ArgumentError("p_N must have support size exactly N=" + std::to_string(n));
    }
    if (static_cast<int>(x.support_size()) < n) {
        throw ArgumentError("trace needs |supp(x)| >= N so the greedy set has size N");
    }

    TheoremTrace trace;
    const IndexSet P = p_n.support();
    trace.greedy_indices = greedy_set(x, n);
    trace.p_minus_greedy = set_difference(P, trace.greedy_indices);
    trace.greedy_minus_p = set_difference(trace.greedy_indices, P);
    trace.cardinality_ok = trace.p_minus_greedy.size() == trace.greedy_minus_p.size();

    const SparseVector diff = x - p_n;
    trace.term_approx = norm(space, diff);
    trace.term_inside = norm(space, project(diff, P));
    trace.term_swap = norm(space, project(x, P) - project(x, trace.greedy_indices));

    const double greedy_error = norm(space, residual(x, n));
    const std::string digest = vector_digest(x) + " N=" + std::to_string(n);
    const std::map<std::string, double> constants{{"K", K}, {"slack_factor", slack}};
    const double k4 = K * K * K * K;
    const double k5 = k4 * K;

    trace.steps.push_back(make_report(
        "theorem_1_trace/triangle", digest, greedy_error,
        trace.term_approx + trace.term_inside + trace.term_swap, constants));
    trace.steps.push_back(make_report(
        "theorem_1_trace/projection", digest, trace.term_inside,
        slack * 8.0 * k4 * v_of(mu, n) * trace.term_approx, constants));

    const double swap_out = norm(space, project(x, trace.p_minus_greedy));
    const double swap_in = norm(space, project(x, trace.greedy_minus_p));
    trace.steps.push_back(make_report("theorem_1_trace/swap_split", digest,
                                      trace.term_swap, swap_out + swap_in, constants));
    // The kept-side projection lives off supp(p_N), so the right-hand
    // reference is ||x - p_N||.
    trace.steps.push_back(make_report(
        "theorem_1_trace/kept_side", digest, swap_in,
        slack * 8.0 * k4 * v_of(mu, static_cast<int>(trace.greedy_minus_p.size())) *
            trace.term_approx,
        constants));
    trace.steps.push_back(make_report(
        "theorem_1_trace/discarded_side", digest, swap_out,
        slack * 8.0 * k5 * v_of(mu, n) * trace.term_approx, constants));

    // Every coefficient the greedy pass discarded is dominated by every
    // coefficient it kept.
    double max_discarded = 0.0;
    for (Index k : trace.p_minus_greedy) {
        max_discarded = std::max(max_discarded, std::abs(x.coeff(k)));
    }
    double min_kept = std::numeric_limits<double>::infinity();
    for (Index k : trace.greedy_minus_p) {
        min_kept = std::min(min_kept, std::abs(x.coeff(k)));
    }
    trace.threshold_ok = max_discarded <= min_kept;

    trace.all_pass = trace.cardinality_ok && trace.threshold_ok;
    for (const VerificationReport& step : trace.steps) {
        trace.all_pass = trace.all_pass && step.pass;
    }
    return trace;
}

} // namespace qg
