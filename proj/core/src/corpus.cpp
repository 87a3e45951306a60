#include "qg/config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qg/approx.hpp"
#include "qg/errors.hpp"
#include "qg/rng.hpp"
#include "qg/serialize.hpp"

namespace qg {

const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids{
        "two_sided_lower", "two_sided_upper", "lemma_2_1",        "lemma_2_2",
        "lemma_2_3",       "theorem_1",       "nested_indicator", "theorem_1_trace",
    };
    return ids;
}

void RunConfig::validate() const {
    if (n_max < 1) throw ConfigError("n_max must be >= 1");
    if (window < n_max) {
        throw ConfigError("window (" + std::to_string(window) +
                          ") must be >= n_max (" + std::to_string(n_max) + ")");
    }
    if (space.is_direct_sum()) {
        for (int c = 0; c < space.component_count(); ++c) {
            int count = 0;
            for (Index k = 1; k <= window; ++k) {
                if (space.component_of(k) == c) ++count;
            }
            if (count < n_max) {
                throw ConfigError("window " + std::to_string(window) +
                                  " holds fewer than n_max indices of component " +
                                  std::to_string(c + 1));
            }
        }
    }
    if (corpus.size < 1) throw ConfigError("corpus size must be >= 1");
    if (corpus.support_size_range.first < 1 ||
        corpus.support_size_range.second < corpus.support_size_range.first) {
        throw ConfigError("support_size_range must satisfy 1 <= lo <= hi");
    }
    if (corpus.type == CorpusType::random &&
        corpus.support_size_range.second > window) {
        throw ConfigError("support_size_range exceeds the window");
    }
    if (corpus.dist == CoeffDist::geometric_decay &&
        !(corpus.rho > 0.0 && corpus.rho < 1.0)) {
        throw ConfigError("geometric-decay rho must lie in (0, 1)");
    }
    if (!(corpus.witness_eps > 0.0)) throw ConfigError("witness eps must be > 0");
    if (corpus.type == CorpusType::file && corpus.path.empty()) {
        throw ConfigError("file corpus needs a path");
    }
    if (slack_factor < 0.0) throw ConfigError("slack_factor must be >= 0");
    if (threads < 1) throw ConfigError("threads must be >= 1");
    for (const std::string& id : checks) {
        const auto& known = all_check_ids();
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            throw ConfigError("unknown check id '" + id + "'");
        }
    }
}

namespace {

double draw_coefficient(Rng& rng, CoeffDist dist) {
    double value = 0.0;
    do {
        switch (dist) {
        case CoeffDist::uniform:
            value = rng.uniform(-1.0, 1.0);
            break;
        case CoeffDist::normal:
            value = rng.normal();
            break;
        case CoeffDist::geometric_decay:
            value = rng.sign(); // magnitude applied by the caller
            break;
        }
    } while (value == 0.0);
    return value;
}

SparseVector random_vector(Rng& rng, const RunConfig& config) {
    const auto [lo, hi] = config.corpus.support_size_range;
    const int size = static_cast<int>(rng.uniform_int(lo, std::min(hi, config.window)));
    const std::vector<Index> support = rng.sample_distinct(size, 1, config.window);
    std::vector<Entry> entries;
    entries.reserve(support.size());
    double magnitude = 1.0;
    for (Index k : support) {
        double coeff = draw_coefficient(rng, config.corpus.dist);
        if (config.corpus.dist == CoeffDist::geometric_decay) {
            coeff *= magnitude;
            magnitude *= config.corpus.rho;
        }
        entries.emplace_back(k, coeff);
    }
    return SparseVector::from_entries(std::move(entries));
}

} // namespace

std::vector<SparseVector> generate_corpus(const RunConfig& config) {
    config.validate();
    std::vector<SparseVector> corpus;
    corpus.reserve(static_cast<std::size_t>(config.corpus.size));
    switch (config.corpus.type) {
    case CorpusType::random: {
        Rng rng(config.corpus.seed);
        for (int i = 0; i < config.corpus.size; ++i) {
            corpus.push_back(random_vector(rng, config));
        }
        break;
    }
    case CorpusType::witness: {
        for (int i = 0; i < config.corpus.size; ++i) {
            const int n = 1 + i % config.n_max;
            corpus.push_back(adversarial_witness(config.space, n,
                                                 config.corpus.witness_eps,
                                                 config.window)
                                 .vector);
        }
        break;
    }
    case CorpusType::file:
        corpus = load_corpus_file(config.corpus.path);
        if (corpus.empty()) {
            throw ConfigError("corpus file '" + config.corpus.path + "' is empty");
        }
        break;
    }
    return corpus;
}

} // namespace qg
