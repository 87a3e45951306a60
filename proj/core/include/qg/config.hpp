#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qg/space.hpp"
#include "qg/sparse_vector.hpp"

namespace qg {

enum class CorpusType { random, witness, file };
enum class CoeffDist { uniform, normal, geometric_decay };

struct CorpusSpec {
    CorpusType type = CorpusType::random;
    int size = 100;
    std::uint64_t seed = 1;
    std::pair<int, int> support_size_range{2, 10};
    CoeffDist dist = CoeffDist::uniform;
    double rho = 0.5;        // geometric-decay ratio
    double witness_eps = 0.01;
    std::string path;        // file corpus: JSON array of vectors
};

// Canonical check ids, in report order.
const std::vector<std::string>& all_check_ids();

struct RunConfig {
    SpaceSpec space = SpaceSpec::lp(2.0);
    int n_max = 8;
    int window = 16;
    CorpusSpec corpus;
    std::vector<std::string> checks = all_check_ids();
    double slack_factor = 1.0;
    std::string output_dir = ".";
    int threads = 1;

    // window >= n_max, per-component feasibility for direct sums,
    // known check ids, sane corpus parameters. Throws ConfigError.
    void validate() const;
};

// Seed-determined corpus. `random` draws supports inside the window with
// the configured coefficient distribution; `witness` emits adversarial
// witnesses cycling n = 1..n_max; `file` loads a JSON array.
std::vector<SparseVector> generate_corpus(const RunConfig& config);

} // namespace qg
