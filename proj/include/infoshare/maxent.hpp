#pragma once

#include <functional>
#include <string>
#include <vector>

#include "infoshare/joint_pmf.hpp"
#include "infoshare/measures.hpp"
#include "infoshare/units.hpp"

namespace infoshare {

struct MarginalConstraint {
  VariableSubset subset;
  JointPmf marginal;
};

// The full family of k-marginal targets over a variable system. Validates
// that every k-subset is present exactly once and that overlapping targets
// agree on their shared sub-marginals within 1e-10.
class MarginalConstraintSet {
 public:
  MarginalConstraintSet(std::vector<int> cardinalities,
                        std::vector<MarginalConstraint> constraints);

  // All k-subset marginals of an existing joint distribution.
  static MarginalConstraintSet from_pmf(const JointPmf& p, int order);

  int order() const { return order_; }
  int variable_count() const { return static_cast<int>(cards_.size()); }
  const std::vector<int>& cardinalities() const { return cards_; }
  const std::vector<MarginalConstraint>& constraints() const {
    return constraints_;
  }

 private:
  std::vector<int> cards_;
  int order_;
  std::vector<MarginalConstraint> constraints_;
};

struct IpfOptions {
  double residual_tolerance = tol::ipf_residual;
  int max_sweeps = tol::ipf_max_sweeps;
  // Invoked after every sweep with the current (normalized) iterate.
  std::function<void(int sweep, const Eigen::ArrayXd& iterate)> sweep_observer;
};

// Iterative proportional fitting outcome. When the sweep cap is reached
// before every fitted marginal is within tolerance, `converged` is false
// and `residual` reports how far the worst marginal still is.
struct IpfResult {
  JointPmf pmf;
  bool converged = true;
  double residual = 0.0;
  int sweeps = 0;
};

// Maximum-entropy distribution consistent with the given k-marginals.
// k = 1 is the closed-form product of marginals; k >= 2 cycles the subsets
// in lexicographic order until the L1 marginal residual drops below the
// tolerance or the sweep cap is hit.
IpfResult maxent_projection(const MarginalConstraintSet& constraints,
                            const IpfOptions& options = {});

// The ladder of external (k-marginal maximum-entropy) and, for N = 3,
// internal (information-sharing) entropies around the joint entropy.
struct EntropySpectrum {
  std::vector<double> external;        // H^(1) .. H^(N)
  std::vector<double> delta_external;  // dH^(2) .. dH^(N)
  std::vector<double> internal;        // H_(1), H_(2), H_(3)  (N = 3 only)
  std::vector<double> delta_internal;  // dH_(2), dH_(3)       (N = 3 only)
  double joint_entropy = 0.0;
  double tc = 0.0;
  double dtc = 0.0;
  InfoUnits units = InfoUnits::bits;
  bool converged = true;
  double max_residual = 0.0;
  std::vector<std::string> warnings;
};

// External half of the spectrum: H^(k) for k = 1..N via maxent projections,
// plus TC/DTC. Guarded to N <= 4. IPF trouble is flagged, not thrown.
EntropySpectrum external_spectrum(const JointPmf& p,
                                  InfoUnits units = InfoUnits::bits,
                                  const IpfOptions& options = {});

// external_spectrum plus the internal layers from the default symmetric
// decomposition when N = 3.
EntropySpectrum complete_spectrum(const JointPmf& p,
                                  InfoUnits units = InfoUnits::bits,
                                  const IpfOptions& options = {});

// Fraction of the total correlation lost when keeping only k0-marginals:
// D(p || proj_k0) / TC. Undefined (throws) when TC vanishes.
double lost_tc_fraction(const JointPmf& p, int k0,
                        const IpfOptions& options = {});

// Synergy split of an N = 3 system: dH^(3) plus the Lemma-2 interval for
// the synergy of the pairwise maximum-entropy projection. The interval
// collapses to a point when the projection's decomposition is unique.
struct SynergySplit {
  double delta_h3 = 0.0;
  bool pme_unique = false;
  double pme_syn_lo = 0.0;
  double pme_syn_hi = 0.0;
  bool converged = true;
  double residual = 0.0;
  InfoUnits units = InfoUnits::bits;
};

SynergySplit delta_h3_synergy_split(const JointPmf& p,
                                    InfoUnits units = InfoUnits::bits,
                                    const IpfOptions& options = {});

// Maximum-entropy join of two pairwise distributions sharing the middle
// variable: p(x1,x2,x3) = p12(x1,x2) p23(x2,x3) / p2(x2), the Markov chain
// X1 - X2 - X3. The X2 marginals must agree within 1e-10.
JointPmf markov_join(const JointPmf& p12, const JointPmf& p23);

}  // namespace infoshare
