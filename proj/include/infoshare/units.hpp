#pragma once

#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>

#include "infoshare/errors.hpp"

namespace infoshare {

enum class InfoUnits { bits, nats };

inline constexpr const char* to_string(InfoUnits u) {
  return u == InfoUnits::bits ? "bits" : "nats";
}

InfoUnits units_from_string(std::string_view s);

// Scale a value measured in bits into the requested units.
inline double from_bits(double value_bits, InfoUnits u) {
  return u == InfoUnits::bits ? value_bits : value_bits * std::numbers::ln2;
}

// Scale a value measured in nats into the requested units.
inline double from_nats(double value_nats, InfoUnits u) {
  return u == InfoUnits::nats ? value_nats : value_nats / std::numbers::ln2;
}

namespace tol {
// Normalization tolerance for ingested distributions.
inline constexpr double normalization = 1e-12;
// Agreement required between overlapping target marginals.
inline constexpr double marginal_consistency = 1e-10;
// IPF stops when every fitted marginal is within this L1 distance of
// its target, or at the sweep cap.
inline constexpr double ipf_residual = 1e-10;
inline constexpr int ipf_max_sweeps = 100000;
// Negative rounding residue on a non-negative measure: clamped to zero
// below this magnitude, rejected above it.
inline constexpr double negative_residue = 1e-10;
// Interval width (in bits) below which a decomposition counts as unique.
inline constexpr double uniqueness = 1e-9;
// Numerical slack for the predictability axiom checks (bits).
inline constexpr double axiom_check = 1e-9;
}  // namespace tol

namespace diag {
// Thread-local counters recording how often a small negative rounding
// residue was clamped to zero. The CLI surfaces them as report warnings.
std::size_t clamp_count();
double max_clamp_magnitude();
void reset_clamps();
}  // namespace diag

// Clamp a tiny negative rounding residue to zero. Values at or below
// -threshold are not rounding noise and raise InternalConsistencyError.
double clamp_nonneg(double value, double threshold = tol::negative_residue);

}  // namespace infoshare
