#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace infoshare {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: malformed distributions, out-of-range subsets,
// violated preconditions. The CLI maps these to exit code 1.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class InvalidSubsetError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// Conditioning on an event of probability zero.
class DegenerateConditionError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// Marginal constraints that contradict each other (or admit no joint).
class InfeasibleConstraintsError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

class NotPairwiseIndependentError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

class NotMarkovError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// A correlation of magnitude one (or a singular covariance) makes the
// requested mutual information diverge.
class InfiniteInformationError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// Latent-weight construction needs correlations sorted as a >= b >= g >= 0;
// carries the variable permutation that would achieve the ordering.
class ReorderRequiredError : public InvalidInputError {
 public:
  ReorderRequiredError(const std::string& what, std::array<int, 3> perm)
      : InvalidInputError(what), permutation(perm) {}
  std::array<int, 3> permutation;
};

class InfeasibleParametersError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// Lost-TC fraction is undefined when the total correlation vanishes.
class UndefinedFractionError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

class UnsupportedSizeError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// A candidate predictability decomposition failed an axiom check;
// `axiom` is the 1-based index of the first violated axiom.
class InvalidPredictabilityError : public InvalidInputError {
 public:
  InvalidPredictabilityError(const std::string& what, int which_axiom)
      : InvalidInputError(what), axiom(which_axiom) {}
  int axiom;
};

// KL divergence D(p||q) with p > 0 on a point where q = 0.
class AbsoluteContinuityError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// A computed quantity violated an identity it must satisfy; indicates
// inconsistent caller-supplied values or a genuine defect.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace infoshare
