#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "infoshare/decomposition.hpp"
#include "infoshare/gaussian.hpp"
#include "infoshare/joint_pmf.hpp"

namespace infoshare {

// One linear constraint over the named rates.
struct RateInequality {
  enum class Sense { ge, le };
  Eigen::VectorXd coefficients;
  Sense sense = Sense::ge;
  double bound = 0.0;
  std::string label;  // provenance of the bound
};

// A rate region as an explicit list of linear inequalities with a closed
// membership predicate (boundary points are feasible).
class RateRegion {
 public:
  RateRegion(std::vector<std::string> rate_names,
             std::vector<RateInequality> inequalities);

  const std::vector<std::string>& rate_names() const { return names_; }
  const std::vector<RateInequality>& inequalities() const { return ineqs_; }

  bool contains(const Eigen::VectorXd& rates, double tolerance = 1e-9) const;

 private:
  std::vector<std::string> names_;
  std::vector<RateInequality> ineqs_;
};

// Slepian-Wolf bounds for three sources in excess-rate coordinates
// R~k = R_k - H(X_k | rest): seven inequalities expressed through the
// decomposition terms. The decomposition must be unique or an explicit
// caller-chosen point consistent with p.
RateRegion slepian_wolf_region(const JointPmf& p,
                               const SymmetricDecomposition& d);

// Multiple-access-channel region for independent inputs (in_a, in_b) and
// output: R1 <= C1 + C_S, R2 <= C2 + C_S, R1 + R2 <= C1 + C2 + C_S with
// C1, C2 the private-channel terms and C_S the synergistic extra capacity.
RateRegion mac_region(const JointPmf& p, int in_a, int in_b, int out,
                      InfoUnits units = InfoUnits::bits);

// Degraded wiretap channel X1 -> X2 with eavesdropper X3 (X1 - X2 - X3
// Markov): secrecy capacity I(X1;X2) - I(X1;X3) and eavesdropping
// capacity I(X1;X3).
struct WiretapCapacities {
  double secrecy = 0.0;
  double eavesdrop = 0.0;
  InfoUnits units = InfoUnits::bits;
};
WiretapCapacities wiretap_capacities(const JointPmf& p,
                                     InfoUnits units = InfoUnits::bits);

// Gaussian broadcast channel: public rate min over the receivers' MIs;
// private rate the positive-part surplus of the stronger link.
struct BroadcastCapacities {
  double public_rate = 0.0;
  double private_rate = 0.0;
  int strong_receiver = -1;
  InfoUnits units = InfoUnits::bits;
};
BroadcastCapacities gaussian_broadcast_capacities(const GaussianTriple& g,
                                                  int sender,
                                                  InfoUnits units = InfoUnits::bits);

}  // namespace infoshare
