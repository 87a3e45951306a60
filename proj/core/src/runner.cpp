#include "qg/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <future>
#include <string>

#include "qg/democracy.hpp"
#include "qg/errors.hpp"
#include "qg/greedy.hpp"
#include "qg/rng.hpp"

namespace qg {

namespace {

std::string element_tag(std::size_t index) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "x[%04zu]", index);
    return buf;
}

bool check_enabled(const RunConfig& config, const std::string& id) {
    return std::find(config.checks.begin(), config.checks.end(), id) !=
           config.checks.end();
}

// All checks for one corpus element. Auxiliary inputs (projection set,
// nested pair, trace approximant) are drawn from a stream keyed by the
// element index, independent of evaluation order.
std::vector<VerificationReport> checks_for_element(const RunConfig& config,
                                                   const SparseVector& x,
                                                   std::size_t index, double K,
                                                   std::span<const double> mu) {
    std::vector<VerificationReport> reports;
    const std::string tag = element_tag(index);
    Rng rng(Rng::mix(config.corpus.seed, index));
    const int s = static_cast<int>(x.support_size());
    const EtaFn eta_r = [&config](std::int64_t k) {
        return democracy_closed_form(config.space, static_cast<int>(k)).h_r;
    };
    const EtaFn eta_l = [&config](std::int64_t k) {
        return democracy_closed_form(config.space, static_cast<int>(k)).h_l;
    };

    auto retag = [&tag](VerificationReport report) {
        report.inputs_digest = tag + " " + report.inputs_digest;
        return report;
    };

    if (check_enabled(config, "two_sided_lower") ||
        check_enabled(config, "two_sided_upper")) {
        auto [lower, upper] = check_two_sided_indicator(config.space, x, K);
        if (check_enabled(config, "two_sided_lower")) reports.push_back(retag(lower));
        if (check_enabled(config, "two_sided_upper")) reports.push_back(retag(upper));
    }
    if (check_enabled(config, "lemma_2_1")) {
        reports.push_back(retag(check_lemma_2_1(config.space, x, eta_r, 1.0, K)));
    }
    if (check_enabled(config, "lemma_2_2")) {
        reports.push_back(retag(check_lemma_2_2(config.space, x, eta_l, 1.0, K)));
    }
    if (check_enabled(config, "lemma_2_3")) {
        const int size = static_cast<int>(rng.uniform_int(0, s));
        IndexSet gamma;
        if (size > 0) {
            const std::vector<Index> picks = rng.sample_distinct(size, 1, s);
            const auto entries = x.entries();
            for (Index p : picks) gamma.push_back(entries[static_cast<std::size_t>(p - 1)].first);
        }
        reports.push_back(retag(
            check_lemma_2_3(config.space, x, gamma, K, mu, config.slack_factor)));
    }
    if (check_enabled(config, "theorem_1")) {
        const int n = static_cast<int>(rng.uniform_int(1, std::max(1, std::min(config.n_max, s))));
        reports.push_back(retag(check_theorem_1(config.space, x, n, K,
                                                config.slack_factor, mu)));
    }
    if (check_enabled(config, "nested_indicator")) {
        const int outer = static_cast<int>(
            rng.uniform_int(1, std::min<std::int64_t>(config.window, 10)));
        const IndexSet A = rng.sample_distinct(outer, 1, config.window);
        const int inner = static_cast<int>(rng.uniform_int(0, outer));
        IndexSet B;
        if (inner > 0) {
            const std::vector<Index> picks = rng.sample_distinct(inner, 1, outer);
            for (Index p : picks) B.push_back(A[static_cast<std::size_t>(p - 1)]);
        }
        reports.push_back(retag(check_nested_indicator(config.space, B, A, K)));
    }
    if (check_enabled(config, "theorem_1_trace")) {
        const int n = static_cast<int>(rng.uniform_int(1, std::max(1, std::min(config.n_max, s))));
        // Approximant on a random support inside supp(x), coefficients
        // jittered so the inner projection term is nonzero.
        const std::vector<Index> picks = rng.sample_distinct(n, 1, s);
        std::vector<Entry> approx_entries;
        const auto entries = x.entries();
        for (Index p : picks) {
            const Entry& e = entries[static_cast<std::size_t>(p - 1)];
            approx_entries.emplace_back(e.first, e.second * (1.0 + rng.uniform(-0.3, 0.3)));
        }
        const SparseVector p_n = SparseVector::from_entries(std::move(approx_entries));
        const TheoremTrace trace = theorem_1_trace(config.space, x, n, p_n, K,
                                                   config.slack_factor, mu);
        // Compressed to one report; the triangle bound carries the slack
        // and `pass` folds in every step plus both identities.
        VerificationReport summary = trace.steps.front();
        summary.check_id = "theorem_1_trace";
        summary.inputs_digest = tag + " " + summary.inputs_digest;
        summary.pass = trace.all_pass;
        reports.push_back(summary);
    }
    return reports;
}

} // namespace

VerifyOutcome run_verification(const RunConfig& config) {
    config.validate();
    const std::vector<SparseVector> corpus = generate_corpus(config);

    VerifyOutcome outcome;
    outcome.k_hat = estimate_quasi_greedy_constant(config.space, corpus);

    int longest_support = 0;
    for (const SparseVector& x : corpus) {
        longest_support = std::max(longest_support, static_cast<int>(x.support_size()));
    }
    const DemocracyTable table = build_democracy_table_closed(
        config.space, std::max({config.n_max, longest_support, 1}));

    std::vector<std::vector<VerificationReport>> per_element(corpus.size());
    auto work = [&](std::size_t i) {
        per_element[i] = checks_for_element(config, corpus[i], i, outcome.k_hat,
                                            table.mu);
    };
    if (config.threads <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
    } else {
        std::vector<std::future<void>> futures;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < config.threads; ++t) {
            futures.push_back(std::async(std::launch::async, [&]() {
                for (std::size_t i = next.fetch_add(1); i < corpus.size();
                     i = next.fetch_add(1)) {
                    work(i);
                }
            }));
        }
        for (auto& f : futures) f.get();
    }

    for (auto& reports : per_element) {
        for (auto& report : reports) outcome.reports.push_back(std::move(report));
    }
    std::sort(outcome.reports.begin(), outcome.reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  if (a.check_id != b.check_id) return a.check_id < b.check_id;
                  return a.inputs_digest < b.inputs_digest;
              });
    outcome.all_pass = std::all_of(outcome.reports.begin(), outcome.reports.end(),
                                   [](const VerificationReport& r) { return r.pass; });
    return outcome;
}

Json verify_outcome_to_json(const VerifyOutcome& outcome) {
    Json j = Json::array();
    for (const VerificationReport& report : outcome.reports) {
        j.push_back(report_to_json(report));
    }
    return j;
}

std::vector<EfficiencyRecord> efficiency_curve(const RunConfig& config,
                                               std::span<const SparseVector> corpus) {
    std::vector<EfficiencyRecord> records;
    for (int n = 1; n <= config.n_max; ++n) {
        EfficiencyRecord record;
        record.n = n;
        const WitnessResult witness = adversarial_witness(
            config.space, n, config.corpus.witness_eps, config.window);
        record.witness_lower_bound = witness.lower_bound;
        record.witness_vector = witness.vector;
        const EfficiencyResult eff = greedy_efficiency(config.space, corpus, n);
        record.e_n_hat = eff.e_hat;
        record.e_tilde_n_hat = eff.e_tilde_hat;
        record.sigma = eff.argmax_sigma;
        record.sigma_tilde = eff.argmax_sigma_tilde;
        records.push_back(std::move(record));
    }
    return records;
}

Json efficiency_to_json(const std::vector<EfficiencyRecord>& records) {
    Json j = Json::array();
    for (const EfficiencyRecord& record : records) {
        Json item;
        item["N"] = record.n;
        item["sigma"] = record.sigma;
        item["sigma_tilde"] = record.sigma_tilde;
        item["e_N_hat"] = record.e_n_hat;
        item["e_tilde_N_hat"] = record.e_tilde_n_hat;
        item["witness_lower_bound"] = record.witness_lower_bound;
        item["witness_vector"] = vector_to_json(record.witness_vector);
        j.push_back(item);
    }
    return j;
}

} // namespace qg
