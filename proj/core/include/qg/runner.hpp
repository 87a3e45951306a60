#pragma once

#include <string>
#include <vector>

#include "qg/approx.hpp"
#include "qg/config.hpp"
#include "qg/serialize.hpp"
#include "qg/verify.hpp"

namespace qg {

struct VerifyOutcome {
    std::vector<VerificationReport> reports; // sorted by (check_id, digest)
    double k_hat = 0.0;
    bool all_pass = false;
};

// Runs every configured check over the generated corpus. Per-element
// auxiliary inputs (projection sets, trace approximants, nested pairs)
// come from streams keyed by (seed, element index), so the parallel map
// and the sequential map produce identical reports.
VerifyOutcome run_verification(const RunConfig& config);

Json verify_outcome_to_json(const VerifyOutcome& outcome);

// Greedy-efficiency analysis for one N: corpus supremum ratios plus the
// certified witness lower bound. `sigma`/`sigma_tilde` belong to the
// corpus element attaining e_N_hat.
struct EfficiencyRecord {
    int n = 0;
    double sigma = 0.0;
    double sigma_tilde = 0.0;
    double e_n_hat = 1.0;
    double e_tilde_n_hat = 1.0;
    double witness_lower_bound = 0.0;
    SparseVector witness_vector;
};

std::vector<EfficiencyRecord> efficiency_curve(const RunConfig& config,
                                               std::span<const SparseVector> corpus);

Json efficiency_to_json(const std::vector<EfficiencyRecord>& records);

} // namespace qg
