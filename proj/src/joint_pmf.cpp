#include "infoshare/joint_pmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace infoshare {

namespace {

std::vector<Eigen::Index> compute_strides(const std::vector<int>& cards) {
  std::vector<Eigen::Index> strides(cards.size());
  Eigen::Index run = 1;
  for (std::size_t j = cards.size(); j-- > 0;) {
    strides[j] = run;
    run *= cards[j];
  }
  return strides;
}

Eigen::Index total_size(const std::vector<int>& cards) {
  Eigen::Index n = 1;
  for (int c : cards) n *= c;
  return n;
}

}  // namespace

VariableSubset::VariableSubset(std::initializer_list<int> indices)
    : indices_(indices) {}

VariableSubset::VariableSubset(std::vector<int> indices)
    : indices_(std::move(indices)) {}

VariableSubset VariableSubset::all(int n_variables) {
  std::vector<int> idx(static_cast<std::size_t>(n_variables));
  std::iota(idx.begin(), idx.end(), 0);
  return VariableSubset(std::move(idx));
}

VariableSubset VariableSubset::complement(const VariableSubset& s,
                                          int n_variables) {
  std::vector<int> idx;
  for (int j = 0; j < n_variables; ++j)
    if (!s.contains(j)) idx.push_back(j);
  return VariableSubset(std::move(idx));
}

bool VariableSubset::contains(int index) const {
  return std::find(indices_.begin(), indices_.end(), index) != indices_.end();
}

bool VariableSubset::disjoint_from(const VariableSubset& other) const {
  for (int j : other.indices_)
    if (contains(j)) return false;
  return true;
}

VariableSubset VariableSubset::united(const VariableSubset& other) const {
  if (!disjoint_from(other))
    throw InvalidSubsetError("subsets overlap where disjoint ones are required");
  std::vector<int> idx = indices_;
  idx.insert(idx.end(), other.indices_.begin(), other.indices_.end());
  return VariableSubset(std::move(idx));
}

void VariableSubset::validate_for(int n_variables) const {
  std::vector<bool> seen(static_cast<std::size_t>(n_variables), false);
  for (int j : indices_) {
    if (j < 0 || j >= n_variables) {
      std::ostringstream msg;
      msg << "variable index " << j << " out of range [0, " << n_variables
          << ")";
      throw InvalidSubsetError(msg.str());
    }
    if (seen[static_cast<std::size_t>(j)]) {
      std::ostringstream msg;
      msg << "duplicate variable index " << j << " in subset";
      throw InvalidSubsetError(msg.str());
    }
    seen[static_cast<std::size_t>(j)] = true;
  }
}

JointPmf::JointPmf(std::vector<int> cardinalities, Eigen::ArrayXd probabilities)
    : cards_(std::move(cardinalities)), probs_(std::move(probabilities)) {
  if (cards_.empty())
    throw InvalidInputError("a joint pmf needs at least one variable");
  for (int c : cards_) {
    if (c < 1)
      throw InvalidInputError("cardinalities must be positive integers");
  }
  strides_ = compute_strides(cards_);
  if (probs_.size() != total_size(cards_)) {
    std::ostringstream msg;
    msg << "probability tensor has " << probs_.size()
        << " entries but the cardinalities imply " << total_size(cards_);
    throw InvalidInputError(msg.str());
  }
  if ((probs_ < 0.0).any())
    throw InvalidInputError("probabilities must be non-negative");
  const double sum = probs_.sum();
  if (std::abs(sum - 1.0) > tol::normalization) {
    std::ostringstream msg;
    msg << "probabilities sum to " << sum << ", outside the 1e-12 tolerance";
    throw InvalidInputError(msg.str());
  }
  probs_ /= sum;  // renormalized exactly once
}

JointPmf JointPmf::uniform(std::vector<int> cardinalities) {
  const Eigen::Index n = total_size(cardinalities);
  return JointPmf(std::move(cardinalities),
                  Eigen::ArrayXd::Constant(n, 1.0 / static_cast<double>(n)));
}

JointPmf JointPmf::point_mass(std::vector<int> cardinalities,
                              std::span<const int> outcome) {
  if (outcome.size() != cardinalities.size())
    throw InvalidInputError("outcome tuple length does not match variable count");
  const std::vector<Eigen::Index> strides = compute_strides(cardinalities);
  Eigen::ArrayXd probs = Eigen::ArrayXd::Zero(total_size(cardinalities));
  Eigen::Index flat = 0;
  for (std::size_t j = 0; j < cardinalities.size(); ++j) {
    if (outcome[j] < 0 || outcome[j] >= cardinalities[j])
      throw InvalidInputError("outcome value out of the variable's alphabet");
    flat += strides[j] * outcome[j];
  }
  probs[flat] = 1.0;
  return JointPmf(std::move(cardinalities), std::move(probs));
}

double JointPmf::at(std::span<const int> outcome) const {
  return probs_[flat_index(outcome)];
}

double JointPmf::at(std::initializer_list<int> outcome) const {
  return at(std::span<const int>(outcome.begin(), outcome.size()));
}

Eigen::Index JointPmf::flat_index(std::span<const int> outcome) const {
  if (outcome.size() != cards_.size())
    throw InvalidInputError("outcome tuple length does not match variable count");
  Eigen::Index flat = 0;
  for (std::size_t j = 0; j < cards_.size(); ++j) {
    if (outcome[j] < 0 || outcome[j] >= cards_[j])
      throw InvalidInputError("outcome value out of the variable's alphabet");
    flat += strides_[j] * outcome[j];
  }
  return flat;
}

void JointPmf::decode(Eigen::Index flat, std::span<int> outcome) const {
  for (std::size_t j = 0; j < cards_.size(); ++j)
    outcome[j] = static_cast<int>((flat / strides_[j]) % cards_[j]);
}

JointPmf marginalize(const JointPmf& p, const VariableSubset& keep) {
  keep.validate_for(p.variable_count());
  if (keep.empty())
    throw InvalidSubsetError("cannot marginalize onto an empty subset");

  std::vector<int> out_cards;
  out_cards.reserve(static_cast<std::size_t>(keep.size()));
  for (int j : keep.indices()) out_cards.push_back(p.cardinality(j));

  std::vector<Eigen::Index> out_strides = compute_strides(out_cards);
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(total_size(out_cards));

  std::vector<int> coords(static_cast<std::size_t>(p.variable_count()));
  for (Eigen::Index t = 0; t < p.size(); ++t) {
    p.decode(t, coords);
    Eigen::Index dest = 0;
    for (int i = 0; i < keep.size(); ++i)
      dest += out_strides[static_cast<std::size_t>(i)] *
              coords[static_cast<std::size_t>(keep[i])];
    out[dest] += p.probabilities()[t];
  }
  return JointPmf(std::move(out_cards), std::move(out));
}

JointPmf condition(const JointPmf& p, const VariableSubset& on,
                   std::span<const int> value) {
  on.validate_for(p.variable_count());
  if (on.empty()) throw InvalidSubsetError("conditioning subset is empty");
  if (on.size() == p.variable_count())
    throw InvalidSubsetError("conditioning on every variable leaves nothing");
  if (static_cast<int>(value.size()) != on.size())
    throw InvalidInputError("conditioning value length does not match subset");
  for (int i = 0; i < on.size(); ++i) {
    if (value[static_cast<std::size_t>(i)] < 0 ||
        value[static_cast<std::size_t>(i)] >= p.cardinality(on[i]))
      throw InvalidInputError("conditioning value out of the variable's alphabet");
  }

  const VariableSubset rest = VariableSubset::complement(on, p.variable_count());
  std::vector<int> out_cards;
  for (int j : rest.indices()) out_cards.push_back(p.cardinality(j));
  std::vector<Eigen::Index> out_strides = compute_strides(out_cards);
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(total_size(out_cards));

  std::vector<int> coords(static_cast<std::size_t>(p.variable_count()));
  double event_mass = 0.0;
  for (Eigen::Index t = 0; t < p.size(); ++t) {
    p.decode(t, coords);
    bool match = true;
    for (int i = 0; i < on.size(); ++i) {
      if (coords[static_cast<std::size_t>(on[i])] !=
          value[static_cast<std::size_t>(i)]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    Eigen::Index dest = 0;
    for (int i = 0; i < rest.size(); ++i)
      dest += out_strides[static_cast<std::size_t>(i)] *
              coords[static_cast<std::size_t>(rest[i])];
    out[dest] += p.probabilities()[t];
    event_mass += p.probabilities()[t];
  }
  if (event_mass <= 0.0)
    throw DegenerateConditionError("conditioning event has probability zero");
  out /= event_mass;
  return JointPmf(std::move(out_cards), std::move(out));
}

JointPmf product_of_marginals(const JointPmf& p) {
  const int n = p.variable_count();
  std::vector<Eigen::ArrayXd> unary;
  unary.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    unary.push_back(marginalize(p, VariableSubset{j}).probabilities());

  Eigen::ArrayXd out(p.size());
  std::vector<int> coords(static_cast<std::size_t>(n));
  for (Eigen::Index t = 0; t < p.size(); ++t) {
    p.decode(t, coords);
    double prod = 1.0;
    for (int j = 0; j < n; ++j)
      prod *= unary[static_cast<std::size_t>(j)][coords[static_cast<std::size_t>(j)]];
    out[t] = prod;
  }
  return JointPmf(p.cardinalities(), std::move(out));
}

JointPmf deterministic_output_triple(int K, std::span<const int> table) {
  if (K < 1) throw InvalidInputError("alphabet size must be positive");
  if (table.size() != static_cast<std::size_t>(K) * static_cast<std::size_t>(K))
    throw InvalidInputError("function table must have K*K entries");
  for (int v : table)
    if (v < 0 || v >= K)
      throw InvalidInputError("function table value out of the output alphabet");

  std::vector<int> cards{K, K, K};
  Eigen::ArrayXd probs =
      Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(K) * K * K);
  const double w = 1.0 / (static_cast<double>(K) * K);
  for (int n = 0; n < K; ++n)
    for (int m = 0; m < K; ++m) {
      const int z = table[static_cast<std::size_t>(n * K + m)];
      probs[(static_cast<Eigen::Index>(n) * K + m) * K + z] += w;
    }
  return JointPmf(std::move(cards), std::move(probs));
}

double max_abs_difference(const JointPmf& a, const JointPmf& b) {
  if (a.cardinalities() != b.cardinalities())
    throw InvalidInputError("pmfs have different shapes");
  return (a.probabilities() - b.probabilities()).abs().maxCoeff();
}

}  // namespace infoshare
