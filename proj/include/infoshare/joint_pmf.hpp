#pragma once

#include <Eigen/Core>
#include <initializer_list>
#include <span>
#include <vector>

#include "infoshare/errors.hpp"
#include "infoshare/units.hpp"

namespace infoshare {

// An ordered set of distinct variable positions, used to name the
// targets of marginalization and conditioning.
class VariableSubset {
 public:
  VariableSubset() = default;
  VariableSubset(std::initializer_list<int> indices);
  explicit VariableSubset(std::vector<int> indices);

  static VariableSubset all(int n_variables);
  static VariableSubset complement(const VariableSubset& s, int n_variables);

  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  const std::vector<int>& indices() const { return indices_; }
  int operator[](int i) const { return indices_[static_cast<std::size_t>(i)]; }

  bool contains(int index) const;
  bool disjoint_from(const VariableSubset& other) const;
  // Concatenation of two disjoint subsets; throws InvalidSubsetError on overlap.
  VariableSubset united(const VariableSubset& other) const;

  // Checks indices lie in [0, n_variables) with no duplicates.
  void validate_for(int n_variables) const;

 private:
  std::vector<int> indices_;
};

// Dense joint probability mass function over N finite-alphabet variables.
// Probabilities are stored flat in row-major order, last variable fastest.
// Values are immutable after construction; all operations on them are pure.
class JointPmf {
 public:
  JointPmf(std::vector<int> cardinalities, Eigen::ArrayXd probabilities);

  static JointPmf uniform(std::vector<int> cardinalities);
  static JointPmf point_mass(std::vector<int> cardinalities,
                             std::span<const int> outcome);

  int variable_count() const { return static_cast<int>(cards_.size()); }
  const std::vector<int>& cardinalities() const { return cards_; }
  int cardinality(int variable) const {
    return cards_[static_cast<std::size_t>(variable)];
  }
  const Eigen::ArrayXd& probabilities() const { return probs_; }
  Eigen::Index size() const { return probs_.size(); }

  double at(std::span<const int> outcome) const;
  double at(std::initializer_list<int> outcome) const;

  Eigen::Index flat_index(std::span<const int> outcome) const;
  void decode(Eigen::Index flat, std::span<int> outcome) const;

 private:
  std::vector<int> cards_;
  std::vector<Eigen::Index> strides_;
  Eigen::ArrayXd probs_;
};

// Sum out every variable not in `keep`; the result's axes follow the
// order listed in `keep`.
JointPmf marginalize(const JointPmf& p, const VariableSubset& keep);

// Distribution of the remaining variables given that the variables in
// `on` took `value`; throws DegenerateConditionError when the event has
// zero probability.
JointPmf condition(const JointPmf& p, const VariableSubset& on,
                   std::span<const int> value);

// Outer product of the N unary marginals.
JointPmf product_of_marginals(const JointPmf& p);

// Triple (X1, X2, X3) with X1, X2 independent uniform over {0..K-1} and
// X3 = table[x1*K + x2]. The output alphabet is K as well.
JointPmf deterministic_output_triple(int K, std::span<const int> table);

// Largest absolute difference between two same-shaped pmfs.
double max_abs_difference(const JointPmf& a, const JointPmf& b);

}  // namespace infoshare
