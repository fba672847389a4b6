#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "infoshare/joint_pmf.hpp"
#include "infoshare/measures.hpp"
#include "infoshare/units.hpp"

namespace infoshare {

// The five-way symmetric split of a three-variable system: shared
// information, the three private pair terms, and synergy, together with
// the feasible interval for the shared term and whether the axioms pin
// the decomposition to a single point.
struct SymmetricDecomposition {
  double shared = 0.0;  // Red
  // private_excluding[k] = Un(Xi;Xj|Xk) with {i,j} the complement of k.
  std::array<double, 3> private_excluding{0.0, 0.0, 0.0};
  double synergy = 0.0;  // Syn
  bool unique = false;
  double interval_lo = 0.0;  // c1 = [coI]^+
  double interval_hi = 0.0;  // c2 = min pairwise MI
  InfoUnits units = InfoUnits::bits;

  // Un between variables i and j (the term excluding the third).
  double private_between(int i, int j) const;
};

// Checks the five consistency identities of a decomposition against the
// distribution it claims to describe; throws InternalConsistencyError.
void validate_decomposition(const JointPmf& p, const SymmetricDecomposition& d,
                            double tolerance = tol::axiom_check);

// A directed redundancy measure: redundancy(p, a, b, target) is the
// predictability of `target` provided by both predictors. Unique
// predictability follows by subtraction from the mutual information.
struct PredictabilityDecomposition {
  std::string name;
  std::function<double(const JointPmf& p, int predictor_a, int predictor_b,
                       int target, InfoUnits units)>
      redundancy;
};

// min{ I(X_a;Y), I(X_b;Y) }: the largest redundancy the axioms allow.
double predictability_min(const JointPmf& p, int predictor_a, int predictor_b,
                          int target, InfoUnits units = InfoUnits::bits);
PredictabilityDecomposition predictability_min_decomposition();

// min of the three pairwise mutual informations (the canonical
// symmetrization of predictability_min).
double red_min_mi(const JointPmf& p, InfoUnits units = InfoUnits::bits);

// Numeric check of predictability axioms (1) and (3) for a concrete
// redundancy value on a concrete distribution. Axiom (2) is definitional
// and (4) concerns the function, not a value.
struct AxiomCheck {
  bool ok = true;
  std::vector<int> violated;  // axiom numbers
  double axiom3_slack = 0.0;  // the implied synergistic predictability
};
AxiomCheck check_predictability_axioms(const JointPmf& p, int predictor_a,
                                       int predictor_b, int target,
                                       double redundancy_value,
                                       double tolerance = tol::axiom_check,
                                       InfoUnits units = InfoUnits::bits);

enum class UniquenessWitness {
  none,
  mi_12,
  mi_13,
  mi_23,
  cmi_12_given_3,
  cmi_13_given_2,
  cmi_23_given_1,
};
const char* to_string(UniquenessWitness w);

// Which of the six quantities {three MIs, three CMIs} vanishes, if any,
// and the feasible interval [c1, c2] for the shared information. The
// decomposition is unique exactly when the interval degenerates.
struct UniquenessStatus {
  bool unique = false;
  UniquenessWitness witness = UniquenessWitness::none;
  double interval_lo = 0.0;
  double interval_hi = 0.0;
  InfoUnits units = InfoUnits::bits;
};
UniquenessStatus uniqueness_status(const JointPmf& p,
                                   InfoUnits units = InfoUnits::bits);

// Lemma-3 symmetrization: Red = min over the three role assignments of the
// directed redundancy, validated against the axioms on this distribution.
SymmetricDecomposition canonical_symmetrization(
    const PredictabilityDecomposition& d, const JointPmf& p,
    InfoUnits units = InfoUnits::bits);

// Closed form when variables i and j are pairwise independent.
SymmetricDecomposition decompose_pairwise_independent(
    const JointPmf& p, int i, int j, InfoUnits units = InfoUnits::bits);

// Closed form for a Markov chain through the given middle variable.
SymmetricDecomposition decompose_markov(const JointPmf& p, int middle,
                                        InfoUnits units = InfoUnits::bits);

// Default decomposition of a three-variable system: the closed forms when
// a uniqueness witness exists, otherwise the canonical symmetrization of
// predictability_min with the feasible interval attached.
SymmetricDecomposition decompose(const JointPmf& p,
                                 InfoUnits units = InfoUnits::bits);

// Joint-entropy layers H_(1), dH_(2), dH_(3); they sum to H(X).
struct EntropyLayers {
  double exclusive = 0.0;  // H_(1)
  double pairwise = 0.0;   // dH_(2) = sum of private terms
  double triple = 0.0;     // dH_(3) = Red + 2 Syn
  InfoUnits units = InfoUnits::bits;
};
EntropyLayers entropy_three_layer(const JointPmf& p,
                                  const SymmetricDecomposition& d);

// Synergy of X3 = table(X1, X2) under independent uniform inputs.
double synergy_of_gate(int K, std::span<const int> table,
                       InfoUnits units = InfoUnits::bits);

// Search for the gate maximizing synergy over inputs uniform on {0..K-1}.
// K = 2 scans all 16 binary gates exhaustively; K in [3, 8] verifies that
// modular addition attains the log K bound. Ties are broken by
// lexicographic table order.
struct SynergySearchResult {
  int alphabet = 0;
  bool exhaustive = false;
  std::vector<int> best_table;
  double max_synergy = 0.0;
  std::vector<std::vector<int>> attaining;  // exhaustive mode only
  InfoUnits units = InfoUnits::bits;
};
SynergySearchResult max_synergy_search(int K, InfoUnits units = InfoUnits::bits);

}  // namespace infoshare
