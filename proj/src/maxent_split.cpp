// Operations that tie the maximum-entropy machinery to the symmetric
// decomposition: the synergy split over the PME projection and the
// assembly of the full (internal + external) entropy spectrum.

#include <algorithm>
#include <cmath>

#include "infoshare/decomposition.hpp"
#include "infoshare/maxent.hpp"

namespace infoshare {

SynergySplit delta_h3_synergy_split(const JointPmf& p, InfoUnits units,
                                    const IpfOptions& options) {
  if (p.variable_count() != 3)
    throw InvalidInputError("the synergy split is defined for N = 3 systems");

  const IpfResult proj =
      maxent_projection(MarginalConstraintSet::from_pmf(p, 2), options);

  SynergySplit split;
  split.units = units;
  split.converged = proj.converged;
  split.residual = proj.residual;
  split.delta_h3 =
      clamp_nonneg(entropy(proj.pmf, units) - entropy(p, units), 1e-8);

  // Lemma-2 interval for the projection's synergy; it collapses to a point
  // exactly when the projection's decomposition is unique.
  const VariableSubset v1{0}, v2{1}, v3{2};
  const double coi = co_information(proj.pmf, v1, v2, v3, units);
  const double cmi_12 =
      conditional_mutual_information(proj.pmf, v1, v2, v3, units);
  const double cmi_13 =
      conditional_mutual_information(proj.pmf, v1, v3, v2, units);
  const double cmi_23 =
      conditional_mutual_information(proj.pmf, v2, v3, v1, units);
  split.pme_syn_lo = std::max(-coi, 0.0);
  split.pme_syn_hi = std::min({cmi_12, cmi_13, cmi_23});
  split.pme_unique = uniqueness_status(proj.pmf, units).unique;
  return split;
}

EntropySpectrum complete_spectrum(const JointPmf& p, InfoUnits units,
                                  const IpfOptions& options) {
  EntropySpectrum spec = external_spectrum(p, units, options);
  if (p.variable_count() != 3) return spec;

  const SymmetricDecomposition d = decompose(p, units);
  const EntropyLayers layers = entropy_three_layer(p, d);
  spec.internal = {layers.exclusive, layers.exclusive + layers.pairwise,
                   layers.exclusive + layers.pairwise + layers.triple};
  spec.delta_internal = {layers.pairwise, layers.triple};
  if (!d.unique)
    spec.warnings.push_back(
        "internal layers use the min-MI decomposition point; the shared "
        "information is only pinned to an interval");
  return spec;
}

}  // namespace infoshare
