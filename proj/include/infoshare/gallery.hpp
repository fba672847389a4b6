#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infoshare/gaussian.hpp"
#include "infoshare/joint_pmf.hpp"

namespace infoshare {

// Canonical systems used throughout the library's documentation and tests.
JointPmf xor_triple();                  // X3 = X1 xor X2, uniform inputs
JointPmf and_triple();                  // X3 = X1 and X2, uniform inputs
JointPmf modk_triple(int K);            // X3 = X1 + X2 mod K, uniform inputs
JointPmf copy_triple();                 // three identical uniform bits
JointPmf independent_bits(int n);       // n independent uniform bits
// Chain X1 - X2 - X3 of two symmetric bit-flip links with uniform input.
JointPmf bsc_chain_triple(double flip_probability);

struct GalleryEntry {
  std::string name;
  std::string description;
  enum class Kind { discrete, gaussian } kind = Kind::discrete;
  std::optional<JointPmf> pmf;
  std::optional<GaussianTriple> gaussian;
};

// The built-in example systems, in listing order.
const std::vector<GalleryEntry>& examples_gallery();

// nullptr when the name is unknown.
const GalleryEntry* find_example(std::string_view name);

}  // namespace infoshare
