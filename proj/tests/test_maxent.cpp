#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "infoshare/gallery.hpp"
#include "infoshare/maxent.hpp"
#include "infoshare/measures.hpp"
#include "test_helpers.hpp"

using namespace infoshare;

namespace {
const VariableSubset v1{0}, v2{1}, v3{2};

JointPmf copy_pair() {
  Eigen::ArrayXd probs(4);
  probs << 0.5, 0.0, 0.0, 0.5;
  return JointPmf({2, 2}, probs);
}

JointPmf anticopy_pair() {
  Eigen::ArrayXd probs(4);
  probs << 0.0, 0.5, 0.5, 0.0;
  return JointPmf({2, 2}, probs);
}
}  // namespace

TEST_CASE("constraint sets validate completeness and mutual consistency") {
  const JointPmf xorp = xor_triple();
  CHECK_NOTHROW(MarginalConstraintSet::from_pmf(xorp, 2));
  CHECK_THROWS_AS(MarginalConstraintSet::from_pmf(xorp, 0), InvalidInputError);
  CHECK_THROWS_AS(MarginalConstraintSet::from_pmf(xorp, 4), InvalidInputError);

  // A missing subset is rejected.
  std::vector<MarginalConstraint> partial;
  partial.push_back({VariableSubset{0, 1}, marginalize(xorp, VariableSubset{0, 1})});
  CHECK_THROWS_AS(MarginalConstraintSet({2, 2, 2}, partial), InvalidInputError);

  // Disagreeing shared sub-marginals are infeasible: X1 uniform in one
  // target, heavily biased in another.
  Eigen::ArrayXd biased(4);
  biased << 0.7, 0.1, 0.1, 0.1;
  std::vector<MarginalConstraint> clash;
  clash.push_back({VariableSubset{0, 1}, JointPmf({2, 2}, biased)});
  clash.push_back({VariableSubset{0, 2}, marginalize(xorp, VariableSubset{0, 2})});
  clash.push_back({VariableSubset{1, 2}, marginalize(xorp, VariableSubset{1, 2})});
  CHECK_THROWS_AS(MarginalConstraintSet({2, 2, 2}, clash),
                  InfeasibleConstraintsError);
}

TEST_CASE("order-1 projection is the closed-form product of marginals") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const JointPmf p = testing::random_joint(rng, {2, 3, 2});
    const IpfResult r = maxent_projection(MarginalConstraintSet::from_pmf(p, 1));
    CHECK(r.converged);
    CHECK(r.sweeps == 0);
    CHECK(max_abs_difference(r.pmf, product_of_marginals(p)) < 1e-14);
  }
}

TEST_CASE("XOR pairwise marginals project to the uniform distribution") {
  const IpfResult r =
      maxent_projection(MarginalConstraintSet::from_pmf(xor_triple(), 2));
  CHECK(r.converged);
  CHECK(entropy(r.pmf) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(max_abs_difference(r.pmf, JointPmf::uniform({2, 2, 2})) < 1e-12);
}

TEST_CASE("AND pairwise marginals: boundary projection reaches the sweep cap") {
  // The unique distribution with these pairwise marginals is the AND gate
  // itself, which sits on the simplex boundary; the multiplicative updates
  // approach it only at a 1/sweeps rate, so the cap fires with a small
  // residual and the truncation is reported rather than hidden.
  const JointPmf andp = and_triple();
  const IpfResult r = maxent_projection(MarginalConstraintSet::from_pmf(andp, 2));
  CHECK_FALSE(r.converged);
  CHECK(r.residual < 1e-5);
  CHECK(r.residual > 0.0);
  CHECK(std::abs(entropy(r.pmf) - entropy(andp)) < 1e-4);  // dH^(3) = 0
}

TEST_CASE("IPF reproduces every target marginal within the reported residual") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const JointPmf p = testing::random_joint(rng, {2, 2, 3});
    const MarginalConstraintSet cs = MarginalConstraintSet::from_pmf(p, 2);
    const IpfResult r = maxent_projection(cs);
    CHECK(r.converged);
    for (const MarginalConstraint& c : cs.constraints()) {
      const JointPmf fitted = marginalize(r.pmf, c.subset);
      const double l1 =
          (fitted.probabilities() - c.marginal.probabilities()).abs().sum();
      CHECK(l1 <= r.residual + 1e-12);
    }
  }
}

TEST_CASE("pairwise-inconsistent targets are detected during fitting") {
  // Copy, copy, anti-copy: pairwise consistent (all unary marginals are
  // uniform) yet no joint distribution exists.
  std::vector<MarginalConstraint> cs;
  cs.push_back({VariableSubset{0, 1}, copy_pair()});
  cs.push_back({VariableSubset{0, 2}, anticopy_pair()});
  cs.push_back({VariableSubset{1, 2}, copy_pair()});
  const MarginalConstraintSet set({2, 2, 2}, cs);
  CHECK_THROWS_AS(maxent_projection(set), InfeasibleConstraintsError);
}

TEST_CASE("KL distance to any feasible point contracts across IPF sweeps") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const JointPmf p = testing::random_joint(rng, {2, 2, 2});
    std::vector<double> divergences;
    IpfOptions opts;
    opts.sweep_observer = [&](int, const Eigen::ArrayXd& iterate) {
      double d = 0.0;
      for (Eigen::Index i = 0; i < iterate.size(); ++i)
        d += p.probabilities()[i] * std::log(p.probabilities()[i] / iterate[i]);
      divergences.push_back(d);
    };
    maxent_projection(MarginalConstraintSet::from_pmf(p, 2), opts);
    REQUIRE(divergences.size() >= 2);
    for (std::size_t i = 1; i < divergences.size(); ++i)
      CHECK(divergences[i] <= divergences[i - 1] + 1e-12);
  }
}

TEST_CASE("external spectrum of the canonical systems") {
  const EntropySpectrum xs = external_spectrum(xor_triple());
  REQUIRE(xs.external.size() == 3);
  CHECK(xs.external[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(xs.external[1] == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(xs.external[2] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(xs.delta_external[0] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(xs.delta_external[1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(xs.converged);

  const EntropySpectrum is = external_spectrum(independent_bits(3));
  CHECK(is.delta_external[0] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(is.delta_external[1] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(is.tc == doctest::Approx(0.0));

  const EntropySpectrum cs = external_spectrum(copy_triple());
  CHECK(cs.delta_external[0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(cs.delta_external[1] == doctest::Approx(0.0).epsilon(1e-10));

  CHECK_THROWS_AS(external_spectrum(independent_bits(5)), UnsupportedSizeError);
}

TEST_CASE("Pythagorean split of the total correlation on random systems") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    const JointPmf p = testing::random_joint(rng, {2, 2, 2});
    const EntropySpectrum s = external_spectrum(p);
    REQUIRE(s.converged);
    const double sum = s.delta_external[0] + s.delta_external[1];
    CHECK(s.tc == doctest::Approx(sum).epsilon(1e-6));

    // Same increments as KL divergences between successive projections.
    const JointPmf p1 = product_of_marginals(p);
    const IpfResult p2 = maxent_projection(MarginalConstraintSet::from_pmf(p, 2));
    CHECK(kl_divergence(p2.pmf, p1) ==
          doctest::Approx(s.delta_external[0]).epsilon(1e-6));
    CHECK(kl_divergence(p, p2.pmf) ==
          doctest::Approx(s.delta_external[1]).epsilon(1e-6));
  }
}

TEST_CASE("lost TC fraction: all in the third layer for XOR, none for copies") {
  CHECK(lost_tc_fraction(xor_triple(), 2) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(lost_tc_fraction(copy_triple(), 2) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(lost_tc_fraction(and_triple(), 3) == 0.0);
  CHECK_THROWS_AS(lost_tc_fraction(independent_bits(3), 2),
                  UndefinedFractionError);
}

TEST_CASE("markov_join composes pairwise links into a chain") {
  // Two perfect copies chain into three identical bits.
  const JointPmf chain_of_copies = markov_join(copy_pair(), copy_pair());
  CHECK(max_abs_difference(chain_of_copies, copy_triple()) < 1e-14);

  // An independent first link breaks the chain at X2.
  Eigen::ArrayXd indep(4);
  indep << 0.35, 0.35, 0.15, 0.15;  // X1 biased, X2 uniform and independent
  const JointPmf indep_pair({2, 2}, indep);
  const JointPmf broken = markov_join(indep_pair, copy_pair());
  CHECK(mutual_information(broken, v1, v3) == doctest::Approx(0.0).epsilon(1e-12));

  // Two 10% bit-flip links compose into an 18% flip end to end.
  const JointPmf bsc = bsc_chain_triple(0.1);
  CHECK(conditional_mutual_information(bsc, v1, v3, v2) ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(mutual_information(bsc, v1, v3) ==
        doctest::Approx(0.3199229542717204).epsilon(1e-10));
  CHECK(mutual_information(bsc, v1, v2) ==
        doctest::Approx(0.5310044064107187).epsilon(1e-10));

  // Both pairwise marginals are reproduced.
  const JointPmf m12 = marginalize(bsc, VariableSubset{0, 1});
  const JointPmf m23 = marginalize(bsc, VariableSubset{1, 2});
  Eigen::ArrayXd link(4);
  link << 0.45, 0.05, 0.05, 0.45;
  CHECK((m12.probabilities() - link).abs().maxCoeff() < 1e-12);
  CHECK((m23.probabilities() - link).abs().maxCoeff() < 1e-12);

  // Mismatched shared marginals are rejected.
  Eigen::ArrayXd skew(4);
  skew << 0.7, 0.1, 0.1, 0.1;
  CHECK_THROWS_AS(markov_join(JointPmf({2, 2}, skew), copy_pair()),
                  InfeasibleConstraintsError);
}

TEST_CASE("markov_join output maximizes entropy among consistent competitors") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const JointPmf p12 = testing::random_joint(rng, {2, 2});
    // Share the middle marginal by construction.
    const JointPmf p2 = marginalize(p12, VariableSubset{1});
    Eigen::ArrayXd link(4);
    const std::vector<double> fwd0 = oracle::random_pmf(rng, 2);
    const std::vector<double> fwd1 = oracle::random_pmf(rng, 2);
    link << p2.at({0}) * fwd0[0], p2.at({0}) * fwd0[1], p2.at({1}) * fwd1[0],
        p2.at({1}) * fwd1[1];
    const JointPmf p23({2, 2}, link);

    const JointPmf chain = markov_join(p12, p23);
    const double h_chain = entropy(chain);

    // Perturbations that leave both pairwise marginals untouched.
    for (int k = 0; k < 30; ++k) {
      Eigen::ArrayXd q = chain.probabilities();
      for (int x2 = 0; x2 < 2; ++x2) {
        const double t = 0.05 * unit(rng);
        for (int x1 = 0; x1 < 2; ++x1)
          for (int x3 = 0; x3 < 2; ++x3) {
            const double sign = ((x1 + x3) % 2 == 0) ? 1.0 : -1.0;
            q[(x1 * 2 + x2) * 2 + x3] += t * sign;
          }
      }
      if ((q < 0.0).any()) continue;
      const JointPmf competitor({2, 2, 2}, q);
      CHECK(max_abs_difference(marginalize(competitor, VariableSubset{0, 1}), p12) <
            1e-12);
      CHECK(entropy(competitor) <= h_chain + 1e-9);
    }
  }
}

TEST_CASE("synergy split: XOR is pure dH3, AND is pure PME synergy") {
  const SynergySplit xs = delta_h3_synergy_split(xor_triple());
  CHECK(xs.delta_h3 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(xs.pme_unique);
  CHECK(xs.pme_syn_lo == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(xs.pme_syn_hi == doctest::Approx(0.0).epsilon(1e-9));

  const SynergySplit as = delta_h3_synergy_split(and_triple());
  CHECK(std::abs(as.delta_h3) < 1e-4);
  CHECK(as.pme_unique);
  CHECK(as.pme_syn_lo == doctest::Approx(0.1887218755408671).epsilon(1e-3));
  CHECK(as.pme_syn_hi == doctest::Approx(0.1887218755408671).epsilon(1e-3));
  CHECK_FALSE(as.converged);  // boundary case: truncation stays visible

  // Markov chains carry no synergy at all.
  const SynergySplit ms = delta_h3_synergy_split(bsc_chain_triple(0.1));
  CHECK(std::abs(ms.delta_h3) < 1e-9);
  CHECK(ms.pme_syn_lo + ms.delta_h3 == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("PME projections minimize synergy over the constraint fiber") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int comparisons = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const JointPmf p = testing::random_pairwise_independent_triple(rng);
    const IpfResult proj = maxent_projection(MarginalConstraintSet::from_pmf(p, 2));
    REQUIRE(proj.converged);
    // Every element of the fiber keeps X1 and X2 independent, so its
    // synergy is I(X1;X2|X3).
    const double syn_proj =
        conditional_mutual_information(proj.pmf, v1, v2, v3);
    for (int k = 0; k < 40; ++k) {
      Eigen::ArrayXd q = p.probabilities();
      const double t = 0.05 * unit(rng);
      for (Eigen::Index cell = 0; cell < q.size(); ++cell) {
        const int x1 = static_cast<int>(cell / 4), x2 = (cell / 2) % 2,
                  x3 = static_cast<int>(cell % 2);
        q[cell] += t * (((x1 + x2 + x3) % 2 == 0) ? 1.0 : -1.0);
      }
      if ((q < 0.0).any()) continue;
      const JointPmf competitor({2, 2, 2}, q);
      const double syn_comp =
          conditional_mutual_information(competitor, v1, v2, v3);
      CHECK(syn_proj <= syn_comp + 1e-6);
      ++comparisons;
    }
  }
  CHECK(comparisons > 50);
}
