#include "qg/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "qg/errors.hpp"

namespace qg {

namespace {

Json weights_to_json(const LorentzWeights& weights) {
    Json j;
    j["prefix"] = weights.prefix;
    Json tail;
    if (const auto* geo = std::get_if<GeometricTail>(&weights.tail)) {
        tail["type"] = "geometric";
        tail["param"] = geo->ratio;
    } else {
        tail["type"] = "power";
        tail["param"] = std::get<PowerTail>(weights.tail).alpha;
    }
    j["tail"] = tail;
    return j;
}

LorentzWeights weights_from_json(const Json& j) {
    LorentzWeights weights;
    if (j.contains("prefix")) {
        weights.prefix = j.at("prefix").get<std::vector<double>>();
    }
    if (j.contains("tail")) {
        const Json& tail = j.at("tail");
        const std::string type = tail.at("type").get<std::string>();
        const double param = tail.at("param").get<double>();
        if (type == "geometric") {
            weights.tail = GeometricTail{param};
        } else if (type == "power") {
            weights.tail = PowerTail{param};
        } else {
            throw ConfigError("unknown lorentz tail type '" + type + "'");
        }
    }
    return weights;
}

double p_from_json(const Json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf" || s == "infinity") return kInfinity;
        throw ConfigError("p must be a number or \"inf\", got \"" + s + "\"");
    }
    if (!j.is_number()) throw ConfigError("p must be a number or \"inf\"");
    return j.get<double>();
}

} // namespace

Json space_to_json(const SpaceSpec& space) {
    Json j;
    if (space.is_lp()) {
        j["kind"] = "lp";
        const double p = space.as_lp().p;
        if (std::isinf(p)) {
            j["p"] = "inf";
        } else {
            j["p"] = p;
        }
        return j;
    }
    if (space.is_lorentz()) {
        const auto& lz = space.as_lorentz();
        j["kind"] = "lorentz";
        j["p"] = lz.p;
        j["weights"] = weights_to_json(lz.weights);
        return j;
    }
    const auto& ds = space.as_direct_sum();
    j["kind"] = "direct_sum";
    Json components = Json::array();
    for (const SpaceSpec& c : ds.components) components.push_back(space_to_json(c));
    j["components"] = components;
    j["component_map"] = Json{{"type", "mod"}, {"modulus", ds.components.size()}};
    j["aggregation"] = ds.aggregation == Aggregation::sum ? "sum" : "max";
    return j;
}

SpaceSpec space_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw ConfigError("space spec must be an object with a \"kind\" field");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "lp") {
        return SpaceSpec::lp(p_from_json(j.at("p")));
    }
    if (kind == "lorentz") {
        LorentzWeights weights;
        if (j.contains("weights")) weights = weights_from_json(j.at("weights"));
        return SpaceSpec::lorentz(p_from_json(j.at("p")), std::move(weights));
    }
    if (kind == "direct_sum") {
        std::vector<SpaceSpec> components;
        for (const Json& c : j.at("components")) components.push_back(space_from_json(c));
        Aggregation agg = Aggregation::sum;
        if (j.contains("aggregation")) {
            const std::string a = j.at("aggregation").get<std::string>();
            if (a == "sum") {
                agg = Aggregation::sum;
            } else if (a == "max") {
                agg = Aggregation::max;
            } else {
                throw ConfigError("aggregation must be \"sum\" or \"max\"");
            }
        }
        if (j.contains("component_map")) {
            const Json& map = j.at("component_map");
            if (map.at("type").get<std::string>() != "mod") {
                throw ConfigError("only the \"mod\" component map is supported");
            }
            const auto modulus = map.at("modulus").get<std::size_t>();
            if (modulus != components.size()) {
                throw ConfigError("component_map modulus must equal the component count");
            }
        }
        return SpaceSpec::direct_sum(std::move(components), agg);
    }
    throw ConfigError("unknown space kind '" + kind + "'");
}

Json vector_to_json(const SparseVector& x) {
    Json j = Json::object();
    for (const Entry& e : x.entries()) j[std::to_string(e.first)] = e.second;
    return j;
}

SparseVector vector_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ConfigError("sparse vector must be a JSON object of index -> value");
    }
    std::vector<Entry> entries;
    for (const auto& [key, value] : j.items()) {
        Index index = 0;
        try {
            std::size_t consumed = 0;
            index = std::stoll(key, &consumed);
            if (consumed != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ConfigError("sparse vector key '" + key + "' is not a decimal index");
        }
        entries.emplace_back(index, value.get<double>());
    }
    return SparseVector::from_entries(std::move(entries));
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["check_id"] = report.check_id;
    j["inputs_digest"] = report.inputs_digest;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    Json constants = Json::object();
    for (const auto& [name, value] : report.constants) constants[name] = value;
    j["constants"] = constants;
    j["pass"] = report.pass;
    j["slack_ratio"] = report.slack_ratio;
    return j;
}

namespace {

CorpusSpec corpus_from_json(const Json& j) {
    CorpusSpec corpus;
    if (j.contains("type")) {
        const std::string type = j.at("type").get<std::string>();
        if (type == "random") {
            corpus.type = CorpusType::random;
        } else if (type == "witness") {
            corpus.type = CorpusType::witness;
        } else if (type == "file") {
            corpus.type = CorpusType::file;
        } else {
            throw ConfigError("unknown corpus type '" + type + "'");
        }
    }
    if (j.contains("size")) corpus.size = j.at("size").get<int>();
    if (j.contains("seed")) corpus.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("support_size_range")) {
        const auto range = j.at("support_size_range").get<std::vector<int>>();
        if (range.size() != 2) {
            throw ConfigError("support_size_range must be a [lo, hi] pair");
        }
        corpus.support_size_range = {range[0], range[1]};
    }
    if (j.contains("coefficient_distribution")) {
        const std::string dist = j.at("coefficient_distribution").get<std::string>();
        if (dist == "uniform") {
            corpus.dist = CoeffDist::uniform;
        } else if (dist == "normal") {
            corpus.dist = CoeffDist::normal;
        } else if (dist == "geometric-decay") {
            corpus.dist = CoeffDist::geometric_decay;
        } else {
            throw ConfigError("unknown coefficient distribution '" + dist + "'");
        }
    }
    if (j.contains("rho")) corpus.rho = j.at("rho").get<double>();
    if (j.contains("witness_eps")) corpus.witness_eps = j.at("witness_eps").get<double>();
    if (j.contains("path")) corpus.path = j.at("path").get<std::string>();
    return corpus;
}

} // namespace

RunConfig config_from_json(const Json& j) {
    RunConfig config;
    if (j.contains("space")) config.space = space_from_json(j.at("space"));
    if (j.contains("n_max")) config.n_max = j.at("n_max").get<int>();
    if (j.contains("window")) config.window = j.at("window").get<int>();
    if (j.contains("corpus")) config.corpus = corpus_from_json(j.at("corpus"));
    if (j.contains("checks")) {
        config.checks = j.at("checks").get<std::vector<std::string>>();
    }
    if (j.contains("slack_factor")) config.slack_factor = j.at("slack_factor").get<double>();
    if (j.contains("output_dir")) config.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("threads")) config.threads = j.at("threads").get<int>();
    config.validate();
    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

std::vector<SparseVector> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open corpus file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("corpus file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_array()) throw ConfigError("corpus file must hold a JSON array of vectors");
    std::vector<SparseVector> corpus;
    for (const Json& item : j) corpus.push_back(vector_from_json(item));
    return corpus;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::filesystem::path target(path);
    if (target.has_parent_path()) {
        std::filesystem::create_directories(target.parent_path());
    }
    const std::filesystem::path temp = target.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + temp.string() + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    }
    std::filesystem::rename(temp, target);
}

} // namespace qg
