#include "infoshare/units.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace infoshare {

InfoUnits units_from_string(std::string_view s) {
  if (s == "bits") return InfoUnits::bits;
  if (s == "nats") return InfoUnits::nats;
  throw InvalidInputError("unknown units '" + std::string(s) +
                          "' (expected 'bits' or 'nats')");
}

namespace diag {
namespace {
thread_local std::size_t g_clamp_count = 0;
thread_local double g_max_clamp = 0.0;
}  // namespace

std::size_t clamp_count() { return g_clamp_count; }
double max_clamp_magnitude() { return g_max_clamp; }
void reset_clamps() {
  g_clamp_count = 0;
  g_max_clamp = 0.0;
}
}  // namespace diag

double clamp_nonneg(double value, double threshold) {
  if (value >= 0.0) return value;
  if (value > -threshold) {
    ++diag::g_clamp_count;
    diag::g_max_clamp = std::max(diag::g_max_clamp, -value);
    return 0.0;
  }
  std::ostringstream msg;
  msg << "non-negative measure came out " << value
      << ", beyond the rounding threshold " << -threshold;
  throw InternalConsistencyError(msg.str());
}

}  // namespace infoshare
