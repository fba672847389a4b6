#include "infoshare/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace infoshare {

namespace {

constexpr double kGaussianClamp = 1e-12;

void require_index(int i) {
  if (i < 0 || i > 2)
    throw InvalidSubsetError("Gaussian variable indices lie in {0,1,2}");
}

double one_minus_sq(double rho) { return (1.0 - rho) * (1.0 + rho); }

}  // namespace

GaussianTriple::GaussianTriple(double sigma1, double sigma2, double sigma3,
                               double alpha, double beta, double gamma)
    : sigmas_{sigma1, sigma2, sigma3}, alpha_(alpha), beta_(beta), gamma_(gamma) {
  for (double s : sigmas_)
    if (!(s > 0.0))
      throw InvalidInputError("standard deviations must be positive");
  for (double r : {alpha_, beta_, gamma_})
    if (std::abs(r) > 1.0)
      throw InvalidInputError("correlations must lie in [-1, 1]");
  if (correlation_determinant() < -1e-12) {
    std::ostringstream msg;
    msg << "correlations (" << alpha_ << ", " << beta_ << ", " << gamma_
        << ") do not form a positive semi-definite matrix";
    throw InfeasibleParametersError(msg.str());
  }
}

GaussianTriple GaussianTriple::standard(double alpha, double beta, double gamma) {
  return GaussianTriple(1.0, 1.0, 1.0, alpha, beta, gamma);
}

double GaussianTriple::correlation(int i, int j) const {
  require_index(i);
  require_index(j);
  if (i == j) return 1.0;
  const int lo = std::min(i, j), hi = std::max(i, j);
  if (lo == 0 && hi == 1) return alpha_;
  if (lo == 0 && hi == 2) return beta_;
  return gamma_;
}

Eigen::Matrix3d GaussianTriple::covariance() const {
  Eigen::Matrix3d cov;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      cov(i, j) = correlation(i, j) * sigmas_[static_cast<std::size_t>(i)] *
                  sigmas_[static_cast<std::size_t>(j)];
  return cov;
}

double GaussianTriple::correlation_determinant() const {
  return 1.0 + 2.0 * alpha_ * beta_ * gamma_ - alpha_ * alpha_ -
         beta_ * beta_ - gamma_ * gamma_;
}

double gaussian_mi(const GaussianTriple& g, int i, int j, InfoUnits units) {
  require_index(i);
  require_index(j);
  if (i == j) throw InvalidSubsetError("mutual information needs two distinct variables");
  const double rho = g.correlation(i, j);
  const double denom = one_minus_sq(rho);
  if (denom <= 0.0)
    throw InfiniteInformationError(
        "a correlation of magnitude one carries infinite information");
  return from_nats(-0.5 * std::log(denom), units);
}

double gaussian_mi_with_rest(const GaussianTriple& g, int i, InfoUnits units) {
  require_index(i);
  std::array<int, 2> rest{};
  int w = 0;
  for (int j = 0; j < 3; ++j)
    if (j != i) rest[static_cast<std::size_t>(w++)] = j;
  const double det = g.correlation_determinant();
  if (det <= 0.0)
    throw InfiniteInformationError("singular covariance: information diverges");
  const double rho_rest = g.correlation(rest[0], rest[1]);
  return from_nats(0.5 * std::log(one_minus_sq(rho_rest) / det), units);
}

double gaussian_cmi(const GaussianTriple& g, int i, int j, int given,
                    InfoUnits units) {
  require_index(i);
  require_index(j);
  require_index(given);
  if (i == j || i == given || j == given)
    throw InvalidSubsetError("conditional MI needs three distinct variables");
  const double det = g.correlation_determinant();
  if (det <= 0.0)
    throw InfiniteInformationError("singular covariance: information diverges");
  // The two correlations that involve the conditioning variable.
  const double r_ik = g.correlation(i, given);
  const double r_jk = g.correlation(j, given);
  return from_nats(
      0.5 * std::log(one_minus_sq(r_ik) * one_minus_sq(r_jk) / det), units);
}

double gaussian_coinformation(const GaussianTriple& g, InfoUnits units) {
  const double det = g.correlation_determinant();
  if (det <= 0.0)
    throw InfiniteInformationError("singular covariance: information diverges");
  const double denom = one_minus_sq(g.alpha()) * one_minus_sq(g.beta()) *
                       one_minus_sq(g.gamma());
  return from_nats(0.5 * std::log(det / denom), units);
}

Eigen::Matrix3d LatentWeights::reconstructed_covariance(
    const std::array<double, 3>& sigmas) const {
  // Rows list each variable's loadings on (W123, W12, W13, W1, W2, W3).
  Eigen::Matrix<double, 3, 6> loading;
  loading << s123, s12, s13, s1, 0.0, 0.0,
             s123, s12, 0.0, 0.0, s2, 0.0,
             s123, 0.0, s13, 0.0, 0.0, s3;
  Eigen::Matrix3d cov = loading * loading.transpose();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      cov(i, j) *= sigmas[static_cast<std::size_t>(i)] *
                   sigmas[static_cast<std::size_t>(j)];
  return cov;
}

LatentWeights latent_decomposition(const GaussianTriple& g) {
  const double a = g.alpha(), b = g.beta(), c = g.gamma();
  if (a < 0.0 || b < 0.0 || c < 0.0)
    throw InfeasibleParametersError(
        "the latent construction covers non-negative correlations only");
  if (!(a >= b && b >= c)) {
    // Find the variable relabeling that sorts the correlations. The pair
    // with the largest correlation maps to (X1,X2), the smallest to
    // (X2,X3); the variable common to both becomes X2.
    const std::array<std::pair<double, std::array<int, 2>>, 3> pairs{{
        {a, {0, 1}}, {b, {0, 2}}, {c, {1, 2}},
    }};
    auto sorted = pairs;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    const auto& max_pair = sorted[0].second;
    const auto& min_pair = sorted[2].second;
    int middle = -1;
    for (int v : max_pair)
      for (int w : min_pair)
        if (v == w) middle = v;
    const int first = max_pair[0] == middle ? max_pair[1] : max_pair[0];
    const int last = min_pair[0] == middle ? min_pair[1] : min_pair[0];
    // permutation[new position] = old variable
    throw ReorderRequiredError(
        "correlations must satisfy alpha >= beta >= gamma; relabel the "
        "variables with the attached permutation",
        {first, middle, last});
  }
  const double s1_sq = 1.0 - a - b + c;
  if (s1_sq < 0.0) {
    std::ostringstream msg;
    msg << "the latent construction needs 1 - alpha - beta + gamma >= 0, got "
        << s1_sq;
    throw InfeasibleParametersError(msg.str());
  }

  LatentWeights w;
  w.s123 = std::sqrt(c);
  w.s12 = std::sqrt(a - c);
  w.s13 = std::sqrt(b - c);
  w.s1 = std::sqrt(s1_sq);
  w.s2 = std::sqrt(1.0 - a);
  w.s3 = std::sqrt(1.0 - b);
  return w;
}

SymmetricDecomposition gaussian_decomposition(const GaussianTriple& g,
                                              InfoUnits units) {
  const double det = g.correlation_determinant();
  if (det <= 0.0)
    throw InfiniteInformationError("singular covariance: information diverges");

  const std::array<double, 3> mi{
      gaussian_mi(g, 1, 2, units),  // pair excluding X1
      gaussian_mi(g, 0, 2, units),  // pair excluding X2
      gaussian_mi(g, 0, 1, units),  // pair excluding X3
  };
  const std::array<double, 3> cmi{
      gaussian_cmi(g, 1, 2, 0, units),
      gaussian_cmi(g, 0, 2, 1, units),
      gaussian_cmi(g, 0, 1, 2, units),
  };
  const double coi = gaussian_coinformation(g, units);

  SymmetricDecomposition out;
  out.units = units;
  out.shared = std::min({mi[0], mi[1], mi[2]});
  for (int k = 0; k < 3; ++k)
    out.private_excluding[static_cast<std::size_t>(k)] = clamp_nonneg(
        mi[static_cast<std::size_t>(k)] - out.shared, kGaussianClamp);
  out.synergy = clamp_nonneg(out.shared - coi, kGaussianClamp);

  out.interval_lo = std::max(coi, 0.0);
  out.interval_hi = out.shared;  // Gaussians sit at the upper bound
  const double uniq_tol = from_bits(tol::uniqueness, units);
  out.unique = std::min({mi[0], mi[1], mi[2], cmi[0], cmi[1], cmi[2]}) < uniq_tol;
  return out;
}

double gaussian_redundant_predictability(const GaussianTriple& g, int target,
                                         InfoUnits units) {
  require_index(target);
  double lo = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 3; ++j)
    if (j != target) lo = std::min(lo, gaussian_mi(g, j, target, units));
  return lo;
}

}  // namespace infoshare
