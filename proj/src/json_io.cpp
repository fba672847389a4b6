#include "infoshare/json_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace infoshare {

namespace {

double require_number(const nlohmann::json& j, const char* where) {
  if (!j.is_number())
    throw InvalidInputError(std::string("expected a number in ") + where);
  return j.get<double>();
}

// FNV-1a over a canonical byte rendering of the input.
class Fnv1a {
 public:
  void feed(const std::string& s) {
    for (unsigned char c : s) {
      state_ ^= c;
      state_ *= 0x100000001b3ULL;
    }
  }
  void feed(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g|", v);
    feed(std::string(buf));
  }
  std::string hex() const {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, state_);
    return buf;
  }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

void write_value(std::ostream& os, const nlohmann::ordered_json& j);

void write_double(std::ostream& os, double v) {
  if (v == static_cast<std::int64_t>(v) && std::abs(v) < 1e15) {
    // Integral values print without an exponent or trailing digits.
    os << static_cast<std::int64_t>(v);
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  os << buf;
}

void write_string(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default: os << c;
    }
  }
  os << '"';
}

void write_value(std::ostream& os, const nlohmann::ordered_json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ", ";
        first = false;
        write_string(os, it.key());
        os << ": ";
        write_value(os, it.value());
      }
      os << '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      os << '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ", ";
        first = false;
        write_value(os, v);
      }
      os << ']';
      break;
    }
    case nlohmann::json::value_t::string:
      write_string(os, j.get<std::string>());
      break;
    case nlohmann::json::value_t::boolean:
      os << (j.get<bool>() ? "true" : "false");
      break;
    case nlohmann::json::value_t::number_integer:
      os << j.get<std::int64_t>();
      break;
    case nlohmann::json::value_t::number_unsigned:
      os << j.get<std::uint64_t>();
      break;
    case nlohmann::json::value_t::number_float:
      write_double(os, j.get<double>());
      break;
    default:
      os << "null";
  }
}

}  // namespace

nlohmann::ordered_json pmf_to_json(const JointPmf& p) {
  nlohmann::ordered_json j;
  j["cardinalities"] = p.cardinalities();
  std::vector<double> probs(p.probabilities().data(),
                            p.probabilities().data() + p.size());
  j["probabilities"] = probs;
  return j;
}

JointPmf pmf_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cardinalities") ||
      !j.contains("probabilities"))
    throw InvalidInputError(
        "a distribution document needs 'cardinalities' and 'probabilities'");
  if (!j["cardinalities"].is_array() || !j["probabilities"].is_array())
    throw InvalidInputError(
        "'cardinalities' and 'probabilities' must be arrays");

  std::vector<int> cards;
  for (const auto& c : j["cardinalities"]) {
    if (!c.is_number_integer())
      throw InvalidInputError("cardinalities must be integers");
    cards.push_back(c.get<int>());
  }
  Eigen::ArrayXd probs(j["probabilities"].size());
  Eigen::Index i = 0;
  for (const auto& v : j["probabilities"])
    probs[i++] = require_number(v, "'probabilities'");
  return JointPmf(std::move(cards), std::move(probs));
}

nlohmann::ordered_json gaussian_to_json(const GaussianTriple& g) {
  nlohmann::ordered_json j;
  j["sigma"] = {g.sigma(0), g.sigma(1), g.sigma(2)};
  j["corr"] = {{"a", g.alpha()}, {"b", g.beta()}, {"g", g.gamma()}};
  return j;
}

GaussianTriple gaussian_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("corr"))
    throw InvalidInputError("a Gaussian document needs a 'corr' object");
  double s1 = 1.0, s2 = 1.0, s3 = 1.0;
  if (j.contains("sigma")) {
    const auto& s = j["sigma"];
    if (!s.is_array() || s.size() != 3)
      throw InvalidInputError("'sigma' must be an array of three numbers");
    s1 = require_number(s[0], "'sigma'");
    s2 = require_number(s[1], "'sigma'");
    s3 = require_number(s[2], "'sigma'");
  }
  const auto& corr = j["corr"];
  if (!corr.contains("a") || !corr.contains("b") || !corr.contains("g"))
    throw InvalidInputError("'corr' needs entries 'a', 'b' and 'g'");
  return GaussianTriple(s1, s2, s3, require_number(corr["a"], "'corr'"),
                        require_number(corr["b"], "'corr'"),
                        require_number(corr["g"], "'corr'"));
}

std::string input_digest(const JointPmf& p) {
  Fnv1a h;
  h.feed("pmf|");
  for (int c : p.cardinalities()) h.feed(static_cast<double>(c));
  for (Eigen::Index i = 0; i < p.size(); ++i) h.feed(p.probabilities()[i]);
  return h.hex();
}

std::string input_digest(const GaussianTriple& g) {
  Fnv1a h;
  h.feed("gaussian|");
  for (int i = 0; i < 3; ++i) h.feed(g.sigma(i));
  h.feed(g.alpha());
  h.feed(g.beta());
  h.feed(g.gamma());
  return h.hex();
}

void write_report(std::ostream& os, const nlohmann::ordered_json& j) {
  write_value(os, j);
  os << '\n';
}

std::string report_to_string(const nlohmann::ordered_json& j) {
  std::ostringstream os;
  write_report(os, j);
  return os.str();
}

}  // namespace infoshare
