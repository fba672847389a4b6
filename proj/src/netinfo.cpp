#include "infoshare/netinfo.hpp"

#include <cmath>
#include <sstream>

namespace infoshare {

RateRegion::RateRegion(std::vector<std::string> rate_names,
                       std::vector<RateInequality> inequalities)
    : names_(std::move(rate_names)), ineqs_(std::move(inequalities)) {
  for (const RateInequality& q : ineqs_) {
    if (q.coefficients.size() != static_cast<Eigen::Index>(names_.size()))
      throw InvalidInputError("inequality arity does not match the rate names");
    if (!std::isfinite(q.bound))
      throw InvalidInputError("rate-region bounds must be finite");
  }
}

bool RateRegion::contains(const Eigen::VectorXd& rates, double tolerance) const {
  if (rates.size() != static_cast<Eigen::Index>(names_.size()))
    throw InvalidInputError("rate tuple arity does not match the region");
  for (const RateInequality& q : ineqs_) {
    const double v = q.coefficients.dot(rates);
    if (q.sense == RateInequality::Sense::ge ? v < q.bound - tolerance
                                             : v > q.bound + tolerance)
      return false;
  }
  return true;
}

RateRegion slepian_wolf_region(const JointPmf& p,
                               const SymmetricDecomposition& d) {
  if (p.variable_count() != 3)
    throw InvalidInputError("the Slepian-Wolf rewrite covers three sources");
  validate_decomposition(p, d);

  std::vector<RateInequality> ineqs;
  auto unit = [](int i) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(3);
    c[i] = 1.0;
    return c;
  };

  for (int i = 0; i < 3; ++i) {
    std::ostringstream label;
    label << "R~" << i + 1 << " >= 0 (excess rate above the exclusive "
          << "information H(X" << i + 1 << "|rest))";
    ineqs.push_back({unit(i), RateInequality::Sense::ge, 0.0, label.str()});
  }
  for (int k = 2; k >= 0; --k) {
    const VariableSubset pair = VariableSubset::complement(VariableSubset{k}, 3);
    const int i = pair[0], j = pair[1];
    const double bound =
        d.private_excluding[static_cast<std::size_t>(k)] + d.synergy;
    std::ostringstream label;
    label << "R~" << i + 1 << " + R~" << j + 1 << " >= Un(" << i + 1 << ","
          << j + 1 << "|" << k + 1 << ") + Syn";
    ineqs.push_back({unit(i) + unit(j), RateInequality::Sense::ge, bound,
                     label.str()});
  }
  const double dtc = d.private_excluding[0] + d.private_excluding[1] +
                     d.private_excluding[2] + d.shared + 2.0 * d.synergy;
  ineqs.push_back({Eigen::VectorXd::Ones(3), RateInequality::Sense::ge, dtc,
                   "R~1 + R~2 + R~3 >= dH_(2) + dH_(3) (the DTC)"});

  return RateRegion({"R~1", "R~2", "R~3"}, std::move(ineqs));
}

RateRegion mac_region(const JointPmf& p, int in_a, int in_b, int out,
                      InfoUnits units) {
  if (p.variable_count() != 3)
    throw InvalidInputError("the MAC rewrite covers two senders and one receiver");
  VariableSubset{in_a}.united(VariableSubset{in_b}).united(VariableSubset{out})
      .validate_for(3);
  const double mi_inputs = mutual_information(p, VariableSubset{in_a},
                                              VariableSubset{in_b}, units);
  if (mi_inputs >= from_bits(tol::uniqueness, units)) {
    std::ostringstream msg;
    msg << "MAC inputs must be independent; I(X" << in_a + 1 << ";X" << in_b + 1
        << ") = " << mi_inputs << " " << to_string(units);
    throw NotPairwiseIndependentError(msg.str());
  }

  const double c1 =
      mutual_information(p, VariableSubset{in_a}, VariableSubset{out}, units);
  const double c2 =
      mutual_information(p, VariableSubset{in_b}, VariableSubset{out}, units);
  const double cs = conditional_mutual_information(
      p, VariableSubset{in_a}, VariableSubset{in_b}, VariableSubset{out}, units);

  auto vec = [](double x, double y) {
    Eigen::VectorXd c(2);
    c << x, y;
    return c;
  };
  std::ostringstream l1, l2, l3;
  l1 << "R1 <= C1 + C_S, C1 = I(X" << in_a + 1 << ";X" << out + 1
     << "), C_S = I(X" << in_a + 1 << ";X" << in_b + 1 << "|X" << out + 1 << ")";
  l2 << "R2 <= C2 + C_S, C2 = I(X" << in_b + 1 << ";X" << out + 1 << ")";
  l3 << "R1 + R2 <= C1 + C2 + C_S";
  std::vector<RateInequality> ineqs;
  ineqs.push_back({vec(1, 0), RateInequality::Sense::le, c1 + cs, l1.str()});
  ineqs.push_back({vec(0, 1), RateInequality::Sense::le, c2 + cs, l2.str()});
  ineqs.push_back({vec(1, 1), RateInequality::Sense::le, c1 + c2 + cs, l3.str()});
  ineqs.push_back({vec(1, 0), RateInequality::Sense::ge, 0.0, "R1 >= 0"});
  ineqs.push_back({vec(0, 1), RateInequality::Sense::ge, 0.0, "R2 >= 0"});
  return RateRegion({"R1", "R2"}, std::move(ineqs));
}

WiretapCapacities wiretap_capacities(const JointPmf& p, InfoUnits units) {
  if (p.variable_count() != 3)
    throw InvalidInputError("the wiretap analysis covers three variables");
  const double cmi = conditional_mutual_information(
      p, VariableSubset{0}, VariableSubset{2}, VariableSubset{1}, units);
  if (cmi >= from_bits(tol::uniqueness, units)) {
    std::ostringstream msg;
    msg << "the eavesdropper is not degraded: I(X1;X3|X2) = " << cmi << " "
        << to_string(units);
    throw NotMarkovError(msg.str());
  }
  const double mi_12 =
      mutual_information(p, VariableSubset{0}, VariableSubset{1}, units);
  const double mi_13 =
      mutual_information(p, VariableSubset{0}, VariableSubset{2}, units);
  WiretapCapacities caps;
  caps.units = units;
  caps.secrecy = clamp_nonneg(mi_12 - mi_13);
  caps.eavesdrop = mi_13;
  return caps;
}

BroadcastCapacities gaussian_broadcast_capacities(const GaussianTriple& g,
                                                  int sender, InfoUnits units) {
  if (sender < 0 || sender > 2)
    throw InvalidSubsetError("sender index must lie in {0,1,2}");
  std::array<int, 2> receivers{};
  int w = 0;
  for (int j = 0; j < 3; ++j)
    if (j != sender) receivers[static_cast<std::size_t>(w++)] = j;

  const double mi_a = gaussian_mi(g, sender, receivers[0], units);
  const double mi_b = gaussian_mi(g, sender, receivers[1], units);

  BroadcastCapacities caps;
  caps.units = units;
  caps.public_rate = std::min(mi_a, mi_b);
  // The private message goes to the stronger receiver; its surplus over
  // the weaker link is what can stay confidential.
  caps.private_rate = std::max(mi_a, mi_b) - caps.public_rate;
  caps.strong_receiver = mi_a >= mi_b ? receivers[0] : receivers[1];
  return caps;
}

}  // namespace infoshare
