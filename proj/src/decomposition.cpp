#include "infoshare/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace infoshare {

namespace {

void require_triple(const JointPmf& p) {
  if (p.variable_count() != 3)
    throw InvalidInputError("this decomposition is defined for N = 3 systems");
}

struct PairwiseTerms {
  // mi[k] and cmi[k] pair up the two variables other than k.
  std::array<double, 3> mi;   // mi[2] = I(X1;X2), mi[1] = I(X1;X3), mi[0] = I(X2;X3)
  std::array<double, 3> cmi;  // cmi[2] = I(X1;X2|X3), etc.
  double coinformation;       // any mi[k] - cmi[k]
};

PairwiseTerms pairwise_terms(const JointPmf& p, InfoUnits units) {
  PairwiseTerms t{};
  for (int k = 0; k < 3; ++k) {
    const VariableSubset pair = VariableSubset::complement(VariableSubset{k}, 3);
    const VariableSubset a{pair[0]}, b{pair[1]};
    t.mi[static_cast<std::size_t>(k)] = mutual_information(p, a, b, units);
    t.cmi[static_cast<std::size_t>(k)] =
        conditional_mutual_information(p, a, b, VariableSubset{k}, units);
  }
  // Evaluate the co-information from the least noisy pairing.
  t.coinformation = t.mi[2] - t.cmi[2];
  return t;
}

std::pair<double, double> shared_interval(const PairwiseTerms& t) {
  const double c1 = std::max(t.coinformation, 0.0);
  const double c2 = std::min({t.mi[0], t.mi[1], t.mi[2]});
  return {c1, c2};
}

int excluded_of_pair(int i, int j) { return 3 - i - j; }

}  // namespace

double SymmetricDecomposition::private_between(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2)
    throw InvalidSubsetError("private terms pair two distinct variables in {0,1,2}");
  return private_excluding[static_cast<std::size_t>(excluded_of_pair(i, j))];
}

void validate_decomposition(const JointPmf& p, const SymmetricDecomposition& d,
                            double tolerance) {
  require_triple(p);
  const PairwiseTerms t = pairwise_terms(p, d.units);
  const auto fail = [](const std::string& what) {
    throw InternalConsistencyError("decomposition inconsistent with the "
                                   "distribution: " + what);
  };
  if (std::abs((d.shared - d.synergy) - t.coinformation) > tolerance)
    fail("Red - Syn must equal the co-information");
  for (int k = 0; k < 3; ++k) {
    const std::size_t ks = static_cast<std::size_t>(k);
    if (std::abs(d.shared + d.private_excluding[ks] - t.mi[ks]) > tolerance)
      fail("Red + Un must equal the pairwise mutual information");
    if (std::abs(d.private_excluding[ks] + d.synergy - t.cmi[ks]) > tolerance)
      fail("Un + Syn must equal the conditional mutual information");
  }
  if (d.shared < -tolerance || d.synergy < -tolerance ||
      *std::min_element(d.private_excluding.begin(), d.private_excluding.end()) <
          -tolerance)
    fail("all five terms must be non-negative");
}

double predictability_min(const JointPmf& p, int predictor_a, int predictor_b,
                          int target, InfoUnits units) {
  require_triple(p);
  VariableSubset{predictor_a}.united(VariableSubset{predictor_b})
      .united(VariableSubset{target})
      .validate_for(3);
  return std::min(
      mutual_information(p, VariableSubset{predictor_a}, VariableSubset{target}, units),
      mutual_information(p, VariableSubset{predictor_b}, VariableSubset{target}, units));
}

PredictabilityDecomposition predictability_min_decomposition() {
  return {"min-mutual-information",
          [](const JointPmf& p, int a, int b, int target, InfoUnits units) {
            return predictability_min(p, a, b, target, units);
          }};
}

double red_min_mi(const JointPmf& p, InfoUnits units) {
  require_triple(p);
  const PairwiseTerms t = pairwise_terms(p, units);
  return std::min({t.mi[0], t.mi[1], t.mi[2]});
}

AxiomCheck check_predictability_axioms(const JointPmf& p, int predictor_a,
                                       int predictor_b, int target,
                                       double redundancy_value,
                                       double tolerance, InfoUnits units) {
  require_triple(p);
  const double mi_a =
      mutual_information(p, VariableSubset{predictor_a}, VariableSubset{target}, units);
  const double mi_b =
      mutual_information(p, VariableSubset{predictor_b}, VariableSubset{target}, units);
  const double mi_joint = mutual_information(
      p, VariableSubset{predictor_a}.united(VariableSubset{predictor_b}),
      VariableSubset{target}, units);

  AxiomCheck check;
  const double unique_a = mi_a - redundancy_value;
  const double unique_b = mi_b - redundancy_value;
  if (redundancy_value < -tolerance || unique_a < -tolerance ||
      unique_b < -tolerance)
    check.violated.push_back(1);
  check.axiom3_slack = mi_joint - (redundancy_value + unique_a + unique_b);
  if (check.axiom3_slack < -tolerance) check.violated.push_back(3);
  check.ok = check.violated.empty();
  return check;
}

UniquenessStatus uniqueness_status(const JointPmf& p, InfoUnits units) {
  require_triple(p);
  const PairwiseTerms t = pairwise_terms(p, units);

  UniquenessStatus s;
  s.units = units;
  std::tie(s.interval_lo, s.interval_hi) = shared_interval(t);

  const std::array<std::pair<double, UniquenessWitness>, 6> candidates{{
      {t.mi[2], UniquenessWitness::mi_12},
      {t.mi[1], UniquenessWitness::mi_13},
      {t.mi[0], UniquenessWitness::mi_23},
      {t.cmi[2], UniquenessWitness::cmi_12_given_3},
      {t.cmi[1], UniquenessWitness::cmi_13_given_2},
      {t.cmi[0], UniquenessWitness::cmi_23_given_1},
  }};
  const auto smallest = std::min_element(
      candidates.begin(), candidates.end(),
      [](const auto& x, const auto& y) { return x.first < y.first; });
  const double uniq_tol = from_bits(tol::uniqueness, units);
  if (smallest->first < uniq_tol) {
    s.unique = true;
    s.witness = smallest->second;
  }
  return s;
}

const char* to_string(UniquenessWitness w) {
  switch (w) {
    case UniquenessWitness::none: return "none";
    case UniquenessWitness::mi_12: return "I(X1;X2)";
    case UniquenessWitness::mi_13: return "I(X1;X3)";
    case UniquenessWitness::mi_23: return "I(X2;X3)";
    case UniquenessWitness::cmi_12_given_3: return "I(X1;X2|X3)";
    case UniquenessWitness::cmi_13_given_2: return "I(X1;X3|X2)";
    case UniquenessWitness::cmi_23_given_1: return "I(X2;X3|X1)";
  }
  return "?";
}

SymmetricDecomposition canonical_symmetrization(
    const PredictabilityDecomposition& d, const JointPmf& p, InfoUnits units) {
  require_triple(p);
  if (!d.redundancy)
    throw InvalidInputError("predictability decomposition has no redundancy");

  const double axiom_tol = from_bits(tol::axiom_check, units);
  double red = std::numeric_limits<double>::infinity();
  for (int target = 0; target < 3; ++target) {
    const VariableSubset pair =
        VariableSubset::complement(VariableSubset{target}, 3);
    const int a = pair[0], b = pair[1];
    const double r = d.redundancy(p, a, b, target, units);
    const double r_swapped = d.redundancy(p, b, a, target, units);
    if (std::abs(r - r_swapped) > axiom_tol) {
      std::ostringstream msg;
      msg << "'" << d.name << "' violates axiom 4 (weak symmetry) for target X"
          << target + 1;
      throw InvalidPredictabilityError(msg.str(), 4);
    }
    const AxiomCheck check =
        check_predictability_axioms(p, a, b, target, r, axiom_tol, units);
    if (!check.ok) {
      std::ostringstream msg;
      msg << "'" << d.name << "' violates axiom " << check.violated.front()
          << " for target X" << target + 1;
      throw InvalidPredictabilityError(msg.str(), check.violated.front());
    }
    red = std::min(red, r);
  }

  const PairwiseTerms t = pairwise_terms(p, units);
  SymmetricDecomposition out;
  out.units = units;
  out.shared = clamp_nonneg(red);
  for (int k = 0; k < 3; ++k)
    out.private_excluding[static_cast<std::size_t>(k)] =
        clamp_nonneg(t.mi[static_cast<std::size_t>(k)] - out.shared);
  out.synergy = clamp_nonneg(out.shared - t.coinformation);

  const UniquenessStatus s = uniqueness_status(p, units);
  out.unique = s.unique;
  out.interval_lo = s.interval_lo;
  out.interval_hi = s.interval_hi;
  return out;
}

SymmetricDecomposition decompose_pairwise_independent(const JointPmf& p, int i,
                                                      int j, InfoUnits units) {
  require_triple(p);
  VariableSubset{i}.united(VariableSubset{j}).validate_for(3);
  const double mi_ij =
      mutual_information(p, VariableSubset{i}, VariableSubset{j}, units);
  if (mi_ij >= from_bits(tol::uniqueness, units)) {
    std::ostringstream msg;
    msg << "variables X" << i + 1 << " and X" << j + 1
        << " are not pairwise independent (I = " << mi_ij << " " << to_string(units)
        << ")";
    throw NotPairwiseIndependentError(msg.str());
  }
  const int k = excluded_of_pair(i, j);

  SymmetricDecomposition out;
  out.units = units;
  out.shared = 0.0;
  out.private_excluding[static_cast<std::size_t>(k)] = 0.0;
  out.private_excluding[static_cast<std::size_t>(j)] =
      mutual_information(p, VariableSubset{i}, VariableSubset{k}, units);
  out.private_excluding[static_cast<std::size_t>(i)] =
      mutual_information(p, VariableSubset{j}, VariableSubset{k}, units);
  out.synergy = conditional_mutual_information(p, VariableSubset{i},
                                               VariableSubset{j},
                                               VariableSubset{k}, units);
  const UniquenessStatus s = uniqueness_status(p, units);
  out.unique = true;
  out.interval_lo = s.interval_lo;
  out.interval_hi = s.interval_hi;
  return out;
}

SymmetricDecomposition decompose_markov(const JointPmf& p, int middle,
                                        InfoUnits units) {
  require_triple(p);
  VariableSubset{middle}.validate_for(3);
  const VariableSubset ends = VariableSubset::complement(VariableSubset{middle}, 3);
  const int first = ends[0], last = ends[1];
  const double cmi = conditional_mutual_information(
      p, VariableSubset{first}, VariableSubset{last}, VariableSubset{middle}, units);
  if (cmi >= from_bits(tol::uniqueness, units)) {
    std::ostringstream msg;
    msg << "X" << first + 1 << " - X" << middle + 1 << " - X" << last + 1
        << " is not a Markov chain (conditional MI = " << cmi << " "
        << to_string(units) << ")";
    throw NotMarkovError(msg.str());
  }

  const double red =
      mutual_information(p, VariableSubset{first}, VariableSubset{last}, units);
  SymmetricDecomposition out;
  out.units = units;
  out.shared = red;
  out.private_excluding[static_cast<std::size_t>(middle)] = 0.0;
  out.private_excluding[static_cast<std::size_t>(last)] = clamp_nonneg(
      mutual_information(p, VariableSubset{first}, VariableSubset{middle}, units) -
      red);
  out.private_excluding[static_cast<std::size_t>(first)] = clamp_nonneg(
      mutual_information(p, VariableSubset{middle}, VariableSubset{last}, units) -
      red);
  out.synergy = 0.0;
  const UniquenessStatus s = uniqueness_status(p, units);
  out.unique = true;
  out.interval_lo = s.interval_lo;
  out.interval_hi = s.interval_hi;
  return out;
}

SymmetricDecomposition decompose(const JointPmf& p, InfoUnits units) {
  require_triple(p);
  const UniquenessStatus s = uniqueness_status(p, units);
  switch (s.witness) {
    case UniquenessWitness::mi_12:
      return decompose_pairwise_independent(p, 0, 1, units);
    case UniquenessWitness::mi_13:
      return decompose_pairwise_independent(p, 0, 2, units);
    case UniquenessWitness::mi_23:
      return decompose_pairwise_independent(p, 1, 2, units);
    case UniquenessWitness::cmi_12_given_3:
      return decompose_markov(p, 2, units);
    case UniquenessWitness::cmi_13_given_2:
      return decompose_markov(p, 1, units);
    case UniquenessWitness::cmi_23_given_1:
      return decompose_markov(p, 0, units);
    case UniquenessWitness::none:
      break;
  }
  return canonical_symmetrization(predictability_min_decomposition(), p, units);
}

EntropyLayers entropy_three_layer(const JointPmf& p,
                                  const SymmetricDecomposition& d) {
  require_triple(p);
  validate_decomposition(p, d);

  EntropyLayers layers;
  layers.units = d.units;
  layers.exclusive = exclusive_information_sum(p, d.units);
  layers.pairwise = d.private_excluding[0] + d.private_excluding[1] +
                    d.private_excluding[2];
  layers.triple = d.shared + 2.0 * d.synergy;

  const double total = layers.exclusive + layers.pairwise + layers.triple;
  const double h = entropy(p, d.units);
  if (std::abs(total - h) > from_bits(tol::axiom_check, d.units)) {
    std::ostringstream msg;
    msg << "entropy layers sum to " << total << " but H(X) = " << h;
    throw InternalConsistencyError(msg.str());
  }
  return layers;
}

double synergy_of_gate(int K, std::span<const int> table, InfoUnits units) {
  const JointPmf p = deterministic_output_triple(K, table);
  // Inputs are independent, so the synergy is I(X1;X2|X3).
  return conditional_mutual_information(p, VariableSubset{0}, VariableSubset{1},
                                        VariableSubset{2}, units);
}

SynergySearchResult max_synergy_search(int K, InfoUnits units) {
  if (K < 2 || K > 8)
    throw UnsupportedSizeError(
        "synergy search supports alphabet sizes 2 through 8");

  SynergySearchResult result;
  result.alphabet = K;
  result.units = units;

  if (K == 2) {
    result.exhaustive = true;
    double best = -1.0;
    std::vector<std::vector<int>> tables;
    for (int code = 0; code < 16; ++code) {
      std::vector<int> table(4);
      for (int cell = 0; cell < 4; ++cell) table[static_cast<std::size_t>(cell)] = (code >> (3 - cell)) & 1;
      tables.push_back(std::move(table));
    }
    std::sort(tables.begin(), tables.end());
    const double atol = from_bits(tol::uniqueness, units);
    for (const std::vector<int>& table : tables) {
      const double syn = synergy_of_gate(2, table, units);
      if (syn > best + atol) {
        best = syn;
        result.best_table = table;
        result.attaining.clear();
        result.attaining.push_back(table);
      } else if (std::abs(syn - best) <= atol) {
        result.attaining.push_back(table);
      }
    }
    result.max_synergy = best;
    return result;
  }

  // Verification mode: modular addition meets the log K ceiling.
  result.exhaustive = false;
  std::vector<int> table(static_cast<std::size_t>(K) * K);
  for (int n = 0; n < K; ++n)
    for (int m = 0; m < K; ++m)
      table[static_cast<std::size_t>(n * K + m)] = (n + m) % K;
  const double syn = synergy_of_gate(K, table, units);
  const double bound = from_bits(std::log2(static_cast<double>(K)), units);
  if (std::abs(syn - bound) > from_bits(1e-9, units) || syn > bound + 1e-12)
    throw InternalConsistencyError(
        "modular addition failed to attain the synergy ceiling");
  result.best_table = std::move(table);
  result.max_synergy = syn;
  return result;
}

}  // namespace infoshare
