#include "infoshare/measures.hpp"

#include <cmath>

namespace infoshare {

namespace {

// Entropy of a flat probability array in nats, skipping zero cells.
double entropy_nats(const Eigen::ArrayXd& probs) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    const double p = probs[i];
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

}  // namespace

double entropy(const JointPmf& p, const VariableSubset& over, InfoUnits units) {
  over.validate_for(p.variable_count());
  if (over.size() == p.variable_count())
    return from_nats(entropy_nats(p.probabilities()), units);
  const JointPmf m = marginalize(p, over);
  return from_nats(entropy_nats(m.probabilities()), units);
}

double entropy(const JointPmf& p, InfoUnits units) {
  return from_nats(entropy_nats(p.probabilities()), units);
}

double conditional_entropy(const JointPmf& p, const VariableSubset& of,
                           const VariableSubset& given, InfoUnits units) {
  of.validate_for(p.variable_count());
  given.validate_for(p.variable_count());
  const VariableSubset joint = of.united(given);  // rejects overlap
  if (given.empty()) return entropy(p, of, units);
  const double h = entropy(p, joint, units) - entropy(p, given, units);
  return clamp_nonneg(h);
}

double mutual_information(const JointPmf& p, const VariableSubset& a,
                          const VariableSubset& b, InfoUnits units) {
  a.validate_for(p.variable_count());
  b.validate_for(p.variable_count());
  const VariableSubset joint = a.united(b);
  const double mi =
      entropy(p, a, units) + entropy(p, b, units) - entropy(p, joint, units);
  return clamp_nonneg(mi);
}

double conditional_mutual_information(const JointPmf& p,
                                      const VariableSubset& a,
                                      const VariableSubset& b,
                                      const VariableSubset& given,
                                      InfoUnits units) {
  a.validate_for(p.variable_count());
  b.validate_for(p.variable_count());
  given.validate_for(p.variable_count());
  if (given.empty()) return mutual_information(p, a, b, units);
  const VariableSubset ag = a.united(given);
  const VariableSubset bg = b.united(given);
  const VariableSubset abg = ag.united(b);
  // H(a,g) + H(b,g) - H(g) - H(a,b,g)
  const double cmi = entropy(p, ag, units) + entropy(p, bg, units) -
                     entropy(p, given, units) - entropy(p, abg, units);
  return clamp_nonneg(cmi);
}

double co_information(const JointPmf& p, const VariableSubset& a,
                      const VariableSubset& b, const VariableSubset& c,
                      InfoUnits units) {
  if (a.size() != 1 || b.size() != 1 || c.size() != 1)
    throw InvalidSubsetError("co-information takes three singleton subsets");
  a.validate_for(p.variable_count());
  a.united(b).united(c).validate_for(p.variable_count());  // distinctness
  return mutual_information(p, a, b, units) -
         conditional_mutual_information(p, a, b, c, units);
}

double total_correlation(const JointPmf& p, InfoUnits units) {
  double sum = 0.0;
  for (int j = 0; j < p.variable_count(); ++j)
    sum += entropy(p, VariableSubset{j}, units);
  return clamp_nonneg(sum - entropy(p, units));
}

double dual_total_correlation(const JointPmf& p, InfoUnits units) {
  return clamp_nonneg(entropy(p, units) - exclusive_information_sum(p, units));
}

double negentropy(const JointPmf& p, InfoUnits units) {
  double capacity = 0.0;
  for (int c : p.cardinalities()) capacity += std::log(c);
  return clamp_nonneg(from_nats(capacity, units) - entropy(p, units));
}

double exclusive_information_sum(const JointPmf& p, InfoUnits units) {
  const int n = p.variable_count();
  const double joint = entropy(p, units);
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const VariableSubset rest =
        VariableSubset::complement(VariableSubset{j}, n);
    if (rest.empty())
      sum += joint;  // single-variable system: nothing to condition on
    else
      sum += clamp_nonneg(joint - entropy(p, rest, units));
  }
  return sum;
}

double kl_divergence(const JointPmf& p, const JointPmf& q, InfoUnits units) {
  if (p.cardinalities() != q.cardinalities())
    throw InvalidInputError("KL divergence needs identically-shaped pmfs");
  double d = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const double pi = p.probabilities()[i];
    if (pi <= 0.0) continue;
    const double qi = q.probabilities()[i];
    if (qi <= 0.0)
      throw AbsoluteContinuityError(
          "D(p||q) undefined: p puts mass where q vanishes");
    d += pi * std::log(pi / qi);
  }
  return from_nats(clamp_nonneg(d), units);
}

}  // namespace infoshare
