#include "infoshare/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace infoshare {

namespace {

Eigen::Index product(const std::vector<int>& cards) {
  Eigen::Index n = 1;
  for (int c : cards) n *= c;
  return n;
}

std::vector<Eigen::Index> strides_of(const std::vector<int>& cards) {
  std::vector<Eigen::Index> s(cards.size());
  Eigen::Index run = 1;
  for (std::size_t j = cards.size(); j-- > 0;) {
    s[j] = run;
    run *= cards[j];
  }
  return s;
}

// For each cell of the full tensor, the flat index of its image under
// marginalization onto `subset`. Precomputed once per constraint.
std::vector<Eigen::Index> cell_to_marginal_map(const std::vector<int>& cards,
                                               const std::vector<int>& subset) {
  const std::vector<Eigen::Index> full_strides = strides_of(cards);
  std::vector<int> sub_cards;
  for (int j : subset) sub_cards.push_back(cards[static_cast<std::size_t>(j)]);
  const std::vector<Eigen::Index> sub_strides = strides_of(sub_cards);

  const Eigen::Index n = product(cards);
  std::vector<Eigen::Index> map(static_cast<std::size_t>(n));
  for (Eigen::Index t = 0; t < n; ++t) {
    Eigen::Index dest = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const std::size_t j = static_cast<std::size_t>(subset[i]);
      dest += sub_strides[i] * ((t / full_strides[j]) % cards[j]);
    }
    map[static_cast<std::size_t>(t)] = dest;
  }
  return map;
}

Eigen::ArrayXd marginal_of(const Eigen::ArrayXd& p,
                           const std::vector<Eigen::Index>& map,
                           Eigen::Index marginal_size) {
  Eigen::ArrayXd m = Eigen::ArrayXd::Zero(marginal_size);
  for (Eigen::Index t = 0; t < p.size(); ++t) m[map[static_cast<std::size_t>(t)]] += p[t];
  return m;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

MarginalConstraintSet::MarginalConstraintSet(
    std::vector<int> cardinalities, std::vector<MarginalConstraint> constraints)
    : cards_(std::move(cardinalities)), constraints_(std::move(constraints)) {
  const int n = static_cast<int>(cards_.size());
  if (constraints_.empty())
    throw InvalidInputError("constraint set needs at least one marginal");
  order_ = constraints_.front().subset.size();
  if (order_ < 1 || order_ > n)
    throw InvalidInputError("constraint order must lie in [1, N]");

  for (const MarginalConstraint& c : constraints_) {
    c.subset.validate_for(n);
    if (c.subset.size() != order_)
      throw InvalidInputError("all constraint subsets must share one order k");
    for (int i = 0; i < c.subset.size(); ++i) {
      if (c.marginal.cardinality(i) != cards_[static_cast<std::size_t>(c.subset[i])])
        throw InvalidInputError("target marginal shape does not match its subset");
    }
  }

  // Every k-subset must appear exactly once (sorted index sets).
  std::vector<std::vector<int>> expected = k_subsets(n, order_);
  std::vector<std::vector<int>> got;
  for (const MarginalConstraint& c : constraints_) {
    std::vector<int> s = c.subset.indices();
    std::sort(s.begin(), s.end());
    got.push_back(std::move(s));
  }
  std::sort(got.begin(), got.end());
  if (got != expected)
    throw InvalidInputError(
        "constraint set must contain every k-subset exactly once");

  // Overlapping targets must agree on shared sub-marginals.
  for (std::size_t a = 0; a < constraints_.size(); ++a) {
    for (std::size_t b = a + 1; b < constraints_.size(); ++b) {
      std::vector<int> shared;
      for (int j : constraints_[a].subset.indices())
        if (constraints_[b].subset.contains(j)) shared.push_back(j);
      if (shared.empty()) continue;
      // Positions of the shared variables within each constraint's marginal.
      std::vector<int> pos_a, pos_b;
      for (int j : shared) {
        const auto& ia = constraints_[a].subset.indices();
        const auto& ib = constraints_[b].subset.indices();
        pos_a.push_back(static_cast<int>(std::find(ia.begin(), ia.end(), j) - ia.begin()));
        pos_b.push_back(static_cast<int>(std::find(ib.begin(), ib.end(), j) - ib.begin()));
      }
      const JointPmf ma = marginalize(constraints_[a].marginal, VariableSubset(pos_a));
      const JointPmf mb = marginalize(constraints_[b].marginal, VariableSubset(pos_b));
      const double l1 = (ma.probabilities() - mb.probabilities()).abs().sum();
      if (l1 > tol::marginal_consistency) {
        std::ostringstream msg;
        msg << "target marginals disagree on a shared sub-marginal (L1 = " << l1
            << ")";
        throw InfeasibleConstraintsError(msg.str());
      }
    }
  }
}

MarginalConstraintSet MarginalConstraintSet::from_pmf(const JointPmf& p,
                                                      int order) {
  if (order < 1 || order > p.variable_count())
    throw InvalidInputError("marginal order must lie in [1, N]");
  std::vector<MarginalConstraint> cs;
  for (const std::vector<int>& s : k_subsets(p.variable_count(), order))
    cs.push_back({VariableSubset(s), marginalize(p, VariableSubset(s))});
  return MarginalConstraintSet(p.cardinalities(), std::move(cs));
}

IpfResult maxent_projection(const MarginalConstraintSet& constraints,
                            const IpfOptions& options) {
  const std::vector<int>& cards = constraints.cardinalities();

  if (constraints.order() == 1) {
    // Closed form: the product of the unary targets.
    const Eigen::Index n = product(cards);
    Eigen::ArrayXd p = Eigen::ArrayXd::Ones(n);
    for (const MarginalConstraint& c : constraints.constraints()) {
      const std::vector<Eigen::Index> map =
          cell_to_marginal_map(cards, c.subset.indices());
      for (Eigen::Index t = 0; t < n; ++t)
        p[t] *= c.marginal.probabilities()[map[static_cast<std::size_t>(t)]];
    }
    return {JointPmf(cards, std::move(p)), true, 0.0, 0};
  }

  struct Prepared {
    std::vector<Eigen::Index> map;
    const Eigen::ArrayXd* target;
  };
  std::vector<Prepared> prepared;
  for (const MarginalConstraint& c : constraints.constraints())
    prepared.push_back({cell_to_marginal_map(cards, c.subset.indices()),
                        &c.marginal.probabilities()});

  const Eigen::Index n = product(cards);
  Eigen::ArrayXd p = Eigen::ArrayXd::Constant(n, 1.0 / static_cast<double>(n));

  double residual = std::numeric_limits<double>::infinity();
  int sweep = 0;
  while (sweep < options.max_sweeps) {
    ++sweep;
    for (const Prepared& c : prepared) {
      const Eigen::ArrayXd m = marginal_of(p, c.map, c.target->size());
      // Multiplicative scaling toward the target marginal. A cell of the
      // iterate that carries no mass cannot serve a positive target.
      Eigen::ArrayXd factor(m.size());
      for (Eigen::Index i = 0; i < m.size(); ++i) {
        if (m[i] > 0.0) {
          factor[i] = (*c.target)[i] / m[i];
        } else if ((*c.target)[i] <= 0.0) {
          factor[i] = 0.0;
        } else {
          throw InfeasibleConstraintsError(
              "constraints force zero mass on an event required to be "
              "positive; the targets admit no joint distribution");
        }
      }
      for (Eigen::Index t = 0; t < n; ++t)
        p[t] *= factor[c.map[static_cast<std::size_t>(t)]];
    }

    residual = 0.0;
    for (const Prepared& c : prepared) {
      const Eigen::ArrayXd m = marginal_of(p, c.map, c.target->size());
      residual = std::max(residual, (m - *c.target).abs().sum());
    }
    if (options.sweep_observer) options.sweep_observer(sweep, p);
    if (residual < options.residual_tolerance) break;
  }

  p /= p.sum();
  return {JointPmf(cards, std::move(p)),
          residual < options.residual_tolerance, residual, sweep};
}

EntropySpectrum external_spectrum(const JointPmf& p, InfoUnits units,
                                  const IpfOptions& options) {
  const int n = p.variable_count();
  if (n > 4)
    throw UnsupportedSizeError(
        "entropy spectra are limited to systems of at most 4 variables");

  EntropySpectrum spec;
  spec.units = units;
  spec.joint_entropy = entropy(p, units);

  for (int k = 1; k <= n; ++k) {
    double hk = 0.0;
    if (k == 1) {
      for (int j = 0; j < n; ++j) hk += entropy(p, VariableSubset{j}, units);
    } else if (k == n) {
      hk = spec.joint_entropy;
    } else {
      const IpfResult r = maxent_projection(MarginalConstraintSet::from_pmf(p, k), options);
      hk = entropy(r.pmf, units);
      spec.max_residual = std::max(spec.max_residual, r.residual);
      if (!r.converged) {
        spec.converged = false;
        std::ostringstream w;
        w << "IPF for the " << k << "-marginal projection stopped at the sweep "
          << "cap with residual " << r.residual;
        spec.warnings.push_back(w.str());
      }
    }
    spec.external.push_back(hk);
  }

  for (int k = 2; k <= n; ++k) {
    const double d = spec.external[static_cast<std::size_t>(k - 2)] -
                     spec.external[static_cast<std::size_t>(k - 1)];
    if (d < -1e-8 && spec.converged) {
      std::ostringstream msg;
      msg << "external entropy increased from order " << k - 1 << " to " << k
          << " by " << -d;
      throw InternalConsistencyError(msg.str());
    }
    if (d < 0.0 && !spec.converged)
      spec.warnings.push_back("negative external increment clamped to zero "
                              "(unconverged projection)");
    spec.delta_external.push_back(std::max(d, 0.0));
  }

  spec.tc = total_correlation(p, units);
  spec.dtc = dual_total_correlation(p, units);
  return spec;
}

double lost_tc_fraction(const JointPmf& p, int k0, const IpfOptions& options) {
  if (k0 < 1 || k0 > p.variable_count())
    throw InvalidInputError("marginal order k0 must lie in [1, N]");
  const double tc = total_correlation(p, InfoUnits::nats);
  if (tc <= 1e-12)
    throw UndefinedFractionError(
        "lost-TC fraction undefined: the total correlation is zero");
  if (k0 == p.variable_count()) return 0.0;

  const IpfResult proj =
      maxent_projection(MarginalConstraintSet::from_pmf(p, k0), options);
  const double d = kl_divergence(p, proj.pmf, InfoUnits::nats);
  const double frac = clamp_nonneg(d / tc, 1e-9);
  if (frac > 1.0 + 1e-9)
    throw InternalConsistencyError("lost-TC fraction exceeded one");
  return std::min(frac, 1.0);
}

JointPmf markov_join(const JointPmf& p12, const JointPmf& p23) {
  if (p12.variable_count() != 2 || p23.variable_count() != 2)
    throw InvalidInputError("markov_join expects two pairwise distributions");
  if (p12.cardinality(1) != p23.cardinality(0))
    throw InvalidInputError(
        "the shared variable's alphabet differs between the two inputs");

  const Eigen::ArrayXd m2_left = marginalize(p12, VariableSubset{1}).probabilities();
  const Eigen::ArrayXd m2_right = marginalize(p23, VariableSubset{0}).probabilities();
  const double l1 = (m2_left - m2_right).abs().sum();
  if (l1 > tol::marginal_consistency) {
    std::ostringstream msg;
    msg << "the X2 marginals of the two inputs disagree (L1 = " << l1 << ")";
    throw InfeasibleConstraintsError(msg.str());
  }

  const int c1 = p12.cardinality(0);
  const int c2 = p12.cardinality(1);
  const int c3 = p23.cardinality(1);
  Eigen::ArrayXd joint(static_cast<Eigen::Index>(c1) * c2 * c3);
  for (int x1 = 0; x1 < c1; ++x1)
    for (int x2 = 0; x2 < c2; ++x2) {
      const double a = p12.at({x1, x2});
      const double z = m2_right[x2];
      for (int x3 = 0; x3 < c3; ++x3) {
        const double b = p23.at({x2, x3});
        joint[(static_cast<Eigen::Index>(x1) * c2 + x2) * c3 + x3] =
            z > 0.0 ? a * b / z : 0.0;
      }
    }
  joint /= joint.sum();
  return JointPmf({c1, c2, c3}, std::move(joint));
}

}  // namespace infoshare
