#include <doctest.h>

#include <cmath>
#include <random>

#include "infoshare/gallery.hpp"
#include "infoshare/measures.hpp"
#include "test_helpers.hpp"

using namespace infoshare;

namespace {
const VariableSubset v1{0}, v2{1}, v3{2};
}

TEST_CASE("entropy: XOR, point masses and uniform alphabets") {
  const JointPmf xorp = xor_triple();
  CHECK(entropy(xorp) == doctest::Approx(2.0).epsilon(1e-12));

  const JointPmf point = JointPmf::point_mass({2, 2, 2}, std::vector<int>{1, 0, 1});
  CHECK(entropy(point) == 0.0);

  const JointPmf u = JointPmf::uniform({3, 4});
  CHECK(entropy(u) == doctest::Approx(std::log2(12.0)).epsilon(1e-12));
  CHECK(entropy(u, VariableSubset{0}) == doctest::Approx(std::log2(3.0)));

  // Units follow the request.
  CHECK(entropy(xorp, InfoUnits::nats) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("conditional entropy: XOR output is determined, AND leaves half a bit") {
  const JointPmf xorp = xor_triple();
  CHECK(conditional_entropy(xorp, v3, VariableSubset{0, 1}) ==
        doctest::Approx(0.0).epsilon(1e-12));

  std::mt19937_64 rng(5);
  const JointPmf indep = product_of_marginals(testing::random_joint(rng, {2, 2}));
  CHECK(conditional_entropy(indep, v1, v2) ==
        doctest::Approx(entropy(indep, v1)).epsilon(1e-12));

  const JointPmf andp = and_triple();
  // Only the (X2,X3) = (0,0) branch is ambiguous; it carries weight 1/2.
  CHECK(conditional_entropy(andp, v1, VariableSubset{1, 2}) ==
        doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(conditional_entropy(andp, v1, VariableSubset{0, 2}),
                  InvalidSubsetError);
}

TEST_CASE("mutual information on the XOR triple") {
  const JointPmf xorp = xor_triple();
  CHECK(mutual_information(xorp, v1, v3) == doctest::Approx(0.0));
  CHECK(mutual_information(xorp, VariableSubset{0, 1}, v3) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const JointPmf cp = copy_triple();
  CHECK(mutual_information(cp, v1, v2) ==
        doctest::Approx(entropy(cp, v1)).epsilon(1e-12));

  CHECK_THROWS_AS(mutual_information(xorp, VariableSubset{0, 1}, v1),
                  InvalidSubsetError);
}

TEST_CASE("conditional mutual information: AND gate value and Markov vanishing") {
  const JointPmf andp = and_triple();
  CHECK(conditional_mutual_information(andp, v1, v2, v3) ==
        doctest::Approx(0.1887218755408671).epsilon(1e-10));

  const JointPmf chain = bsc_chain_triple(0.1);
  CHECK(conditional_mutual_information(chain, v1, v3, v2) ==
        doctest::Approx(0.0).epsilon(1e-12));

  const JointPmf xorp = xor_triple();
  CHECK(conditional_mutual_information(xorp, v1, v2, v3) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("co-information: XOR is -1 bit, chains reduce to I(X1;X3)") {
  const JointPmf xorp = xor_triple();
  CHECK(co_information(xorp, v1, v2, v3) == doctest::Approx(-1.0).epsilon(1e-12));

  const JointPmf chain = bsc_chain_triple(0.1);
  CHECK(co_information(chain, v1, v2, v3) ==
        doctest::Approx(mutual_information(chain, v1, v3)).epsilon(1e-9));

  const JointPmf indep = independent_bits(3);
  CHECK(co_information(indep, v1, v2, v3) == doctest::Approx(0.0));

  CHECK_THROWS_AS(co_information(xorp, VariableSubset{0, 1}, v2, v3),
                  InvalidSubsetError);
  CHECK_THROWS_AS(co_information(xorp, v1, v1, v3), InvalidSubsetError);
}

TEST_CASE("total correlation, DTC, negentropy and H_(1) on the canonical systems") {
  const JointPmf xorp = xor_triple();
  CHECK(total_correlation(xorp) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dual_total_correlation(xorp) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(negentropy(xorp) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(exclusive_information_sum(xorp) == doctest::Approx(0.0));

  const JointPmf indep = independent_bits(3);
  CHECK(total_correlation(indep) == doctest::Approx(0.0));
  CHECK(dual_total_correlation(indep) == doctest::Approx(0.0));
  CHECK(negentropy(indep) == doctest::Approx(0.0));
  CHECK(exclusive_information_sum(indep) == doctest::Approx(3.0));

  const JointPmf cp = copy_triple();
  CHECK(total_correlation(cp) == doctest::Approx(2.0).epsilon(1e-12));

  const JointPmf point = JointPmf::point_mass({2, 2, 2}, std::vector<int>{0, 0, 0});
  CHECK(negentropy(point) == doctest::Approx(3.0).epsilon(1e-12));

  const JointPmf andp = and_triple();
  CHECK(exclusive_information_sum(andp) == doctest::Approx(1.0).epsilon(1e-12));

  // For a pair the DTC reduces to the mutual information.
  std::mt19937_64 rng(17);
  const JointPmf pair = testing::random_joint(rng, {2, 3});
  CHECK(dual_total_correlation(pair) ==
        doctest::Approx(mutual_information(pair, v1, v2)).epsilon(1e-12));
}

TEST_CASE("random systems agree with the brute-force oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const JointPmf p = testing::random_joint(rng, {2, 3, 2});
    const std::vector<double> flat = testing::flat(p);
    const std::vector<int> cards = p.cardinalities();

    CHECK(entropy(p) ==
          doctest::Approx(oracle::entropy_bits(flat)).epsilon(1e-11));
    CHECK(mutual_information(p, v1, v3) ==
          doctest::Approx(oracle::mi_bits(flat, cards, {0}, {2})).epsilon(1e-11));
    CHECK(conditional_mutual_information(p, v1, v2, v3) ==
          doctest::Approx(oracle::cmi_bits(flat, cards, {0}, {1}, {2}))
              .epsilon(1e-11));
  }
}

TEST_CASE("identities: chain rule, permutation symmetry, DTC split, negentropy") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const JointPmf p = testing::random_joint(rng, {2, 2, 2});

    // Chain rule I(a,b;c) = I(a;c) + I(b;c|a).
    const double lhs = mutual_information(p, VariableSubset{0, 1}, v3);
    const double rhs = mutual_information(p, v1, v3) +
                       conditional_mutual_information(p, v2, v3, v1);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));

    // Co-information is invariant under the 6 argument orders.
    const double coi = co_information(p, v1, v2, v3);
    for (const auto& [a, b, c] :
         {std::array{0, 2, 1}, std::array{1, 0, 2}, std::array{1, 2, 0},
          std::array{2, 0, 1}, std::array{2, 1, 0}}) {
      CHECK(co_information(p, VariableSubset{a}, VariableSubset{b},
                           VariableSubset{c}) ==
            doctest::Approx(coi).epsilon(1e-12));
    }

    // DTC = sum of cyclic conditional MIs + co-information.
    const double dtc = dual_total_correlation(p);
    const double split = conditional_mutual_information(p, v1, v2, v3) +
                         conditional_mutual_information(p, v2, v3, v1) +
                         conditional_mutual_information(p, v3, v1, v2) + coi;
    CHECK(dtc == doctest::Approx(split).epsilon(1e-9));

    // Negentropy = D(product || uniform) + TC.
    const JointPmf prod = product_of_marginals(p);
    const JointPmf unif = JointPmf::uniform(p.cardinalities());
    CHECK(negentropy(p) ==
          doctest::Approx(kl_divergence(prod, unif) + total_correlation(p))
              .epsilon(1e-9));

    // Conditioning reduces entropy.
    CHECK(conditional_entropy(p, v1, v2) <= entropy(p, v1) + 1e-12);
  }
}

TEST_CASE("KL divergence needs absolute continuity") {
  const JointPmf xorp = xor_triple();
  const JointPmf prod = product_of_marginals(xorp);
  CHECK(kl_divergence(xorp, prod) == doctest::Approx(1.0).epsilon(1e-12));
  // The reverse direction hits prod > 0 where xor vanishes.
  CHECK_THROWS_AS(kl_divergence(prod, xorp), AbsoluteContinuityError);
}
