#pragma once

#include "infoshare/joint_pmf.hpp"
#include "infoshare/units.hpp"

namespace infoshare {

// Shannon entropy of the marginal on `over`, with 0*log 0 := 0.
double entropy(const JointPmf& p, const VariableSubset& over,
               InfoUnits units = InfoUnits::bits);

// Joint entropy H(X) of all variables.
double entropy(const JointPmf& p, InfoUnits units = InfoUnits::bits);

// H(of | given) = H(of, given) - H(given); the subsets must be disjoint.
double conditional_entropy(const JointPmf& p, const VariableSubset& of,
                           const VariableSubset& given,
                           InfoUnits units = InfoUnits::bits);

// I(a; b) = H(a) + H(b) - H(a,b), clamped against negative rounding residue.
double mutual_information(const JointPmf& p, const VariableSubset& a,
                          const VariableSubset& b,
                          InfoUnits units = InfoUnits::bits);

// I(a; b | given) = I(a; b,given) - I(a; given). No clamp against the
// unconditioned mutual information: conditioning may legitimately raise it.
double conditional_mutual_information(const JointPmf& p,
                                      const VariableSubset& a,
                                      const VariableSubset& b,
                                      const VariableSubset& given,
                                      InfoUnits units = InfoUnits::bits);

// Co-information I(X_a;X_b;X_c) = I(X_a;X_b) - I(X_a;X_b|X_c) for three
// distinct singletons. Signed, and symmetric in all three arguments.
double co_information(const JointPmf& p, const VariableSubset& a,
                      const VariableSubset& b, const VariableSubset& c,
                      InfoUnits units = InfoUnits::bits);

// TC = sum_j H(X_j) - H(X).
double total_correlation(const JointPmf& p, InfoUnits units = InfoUnits::bits);

// DTC = H(X) - sum_j H(X_j | X_j^c).
double dual_total_correlation(const JointPmf& p,
                              InfoUnits units = InfoUnits::bits);

// Negentropy = sum_j log |Omega_j| - H(X), the gap to the uniform joint.
double negentropy(const JointPmf& p, InfoUnits units = InfoUnits::bits);

// H_(1) = sum_j H(X_j | X_j^c), the total exclusive information.
double exclusive_information_sum(const JointPmf& p,
                                 InfoUnits units = InfoUnits::bits);

// D(p || q) over identically-shaped pmfs; throws AbsoluteContinuityError
// where p > 0 meets q = 0.
double kl_divergence(const JointPmf& p, const JointPmf& q,
                     InfoUnits units = InfoUnits::bits);

}  // namespace infoshare
