#include "infoshare/gallery.hpp"

#include <cmath>
#include <vector>

#include "infoshare/maxent.hpp"

namespace infoshare {

JointPmf xor_triple() {
  const std::vector<int> table{0, 1, 1, 0};
  return deterministic_output_triple(2, table);
}

JointPmf and_triple() {
  const std::vector<int> table{0, 0, 0, 1};
  return deterministic_output_triple(2, table);
}

JointPmf modk_triple(int K) {
  std::vector<int> table(static_cast<std::size_t>(K) * K);
  for (int n = 0; n < K; ++n)
    for (int m = 0; m < K; ++m)
      table[static_cast<std::size_t>(n * K + m)] = (n + m) % K;
  return deterministic_output_triple(K, table);
}

JointPmf copy_triple() {
  Eigen::ArrayXd probs = Eigen::ArrayXd::Zero(8);
  probs[0] = 0.5;  // (0,0,0)
  probs[7] = 0.5;  // (1,1,1)
  return JointPmf({2, 2, 2}, std::move(probs));
}

JointPmf independent_bits(int n) {
  std::vector<int> cards(static_cast<std::size_t>(n), 2);
  return JointPmf::uniform(std::move(cards));
}

JointPmf bsc_chain_triple(double flip_probability) {
  const double e = flip_probability;
  if (e < 0.0 || e > 1.0)
    throw InvalidInputError("flip probability must lie in [0, 1]");
  Eigen::ArrayXd link(4);
  // Uniform input through a symmetric bit-flip channel.
  link << 0.5 * (1.0 - e), 0.5 * e, 0.5 * e, 0.5 * (1.0 - e);
  const JointPmf pair({2, 2}, link);
  return markov_join(pair, pair);
}

const std::vector<GalleryEntry>& examples_gallery() {
  static const std::vector<GalleryEntry> entries = [] {
    std::vector<GalleryEntry> g;
    g.push_back({"xor",
                 "uniform independent bits with X3 = X1 xor X2; pure synergy",
                 GalleryEntry::Kind::discrete, xor_triple(), std::nullopt});
    g.push_back({"and-gate",
                 "uniform independent bits with X3 = X1 and X2; synergy "
                 "0.1887 bits survives in the pairwise marginals",
                 GalleryEntry::Kind::discrete, and_triple(), std::nullopt});
    g.push_back({"modk-3",
                 "uniform independent ternary inputs with X3 = X1 + X2 mod 3; "
                 "synergy log2(3) bits",
                 GalleryEntry::Kind::discrete, modk_triple(3), std::nullopt});
    g.push_back({"bsc-chain",
                 "Markov chain of two 10% bit-flip links; no synergy, shared "
                 "information I(X1;X3)",
                 GalleryEntry::Kind::discrete, bsc_chain_triple(0.1),
                 std::nullopt});
    g.push_back({"copy",
                 "three identical uniform bits; fully shared information",
                 GalleryEntry::Kind::discrete, copy_triple(), std::nullopt});
    g.push_back({"gauss-common",
                 "standard Gaussians with all correlations 0.5; shared "
                 "information dominates",
                 GalleryEntry::Kind::gaussian, std::nullopt,
                 GaussianTriple::standard(0.5, 0.5, 0.5)});
    g.push_back({"gauss-synergy",
                 "standard Gaussians with alpha = beta = 0.5, gamma = 0; an "
                 "independent pair makes the synergy unique",
                 GalleryEntry::Kind::gaussian, std::nullopt,
                 GaussianTriple::standard(0.5, 0.5, 0.0)});
    return g;
  }();
  return entries;
}

const GalleryEntry* find_example(std::string_view name) {
  for (const GalleryEntry& e : examples_gallery())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace infoshare
