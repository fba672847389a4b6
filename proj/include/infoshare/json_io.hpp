#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "infoshare/gaussian.hpp"
#include "infoshare/joint_pmf.hpp"

namespace infoshare {

// Interchange shape: {"cardinalities": [..], "probabilities": [..]} with a
// flat row-major probability array, last variable fastest. Probabilities
// serialize at full precision so a round trip is bit-exact.
nlohmann::ordered_json pmf_to_json(const JointPmf& p);
JointPmf pmf_from_json(const nlohmann::json& j);

// Gaussian shape: {"sigma": [s1,s2,s3], "corr": {"a":., "b":., "g":.}}.
nlohmann::ordered_json gaussian_to_json(const GaussianTriple& g);
GaussianTriple gaussian_from_json(const nlohmann::json& j);

// Stable content hashes used as report input digests.
std::string input_digest(const JointPmf& p);
std::string input_digest(const GaussianTriple& g);

// Deterministic report serialization: insertion-ordered keys, doubles
// rendered with 12 significant digits.
void write_report(std::ostream& os, const nlohmann::ordered_json& j);
std::string report_to_string(const nlohmann::ordered_json& j);

}  // namespace infoshare
