#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qg/config.hpp"
#include "qg/space.hpp"
#include "qg/sparse_vector.hpp"
#include "qg/verify.hpp"

namespace qg {

using Json = nlohmann::ordered_json;

// SpaceSpec <-> {"kind": "lp"|"lorentz"|"direct_sum", ...}; p may be the
// string "inf" for the sup-norm. See README for the full schema.
Json space_to_json(const SpaceSpec& space);
SpaceSpec space_from_json(const Json& j);

// SparseVector <-> JSON object mapping decimal index strings to numbers.
Json vector_to_json(const SparseVector& x);
SparseVector vector_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);

RunConfig config_from_json(const Json& j);
RunConfig load_config_file(const std::string& path);

std::vector<SparseVector> load_corpus_file(const std::string& path);

// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& contents);

} // namespace qg
