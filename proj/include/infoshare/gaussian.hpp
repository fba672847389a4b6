#pragma once

#include <Eigen/Core>
#include <array>

#include "infoshare/decomposition.hpp"
#include "infoshare/units.hpp"

namespace infoshare {

// Zero-mean trivariate Gaussian, parameterized by three standard
// deviations and the three pairwise correlations
//   alpha = corr(X1,X2), beta = corr(X1,X3), gamma = corr(X2,X3).
// Valid parameters keep the correlation matrix positive semi-definite:
// 1 + 2*a*b*g - a^2 - b^2 - g^2 >= 0.
class GaussianTriple {
 public:
  GaussianTriple(double sigma1, double sigma2, double sigma3, double alpha,
                 double beta, double gamma);
  // Unit variances.
  static GaussianTriple standard(double alpha, double beta, double gamma);

  double sigma(int i) const { return sigmas_[static_cast<std::size_t>(i)]; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  // Correlation between variables i and j (0-based, i != j).
  double correlation(int i, int j) const;
  Eigen::Matrix3d covariance() const;
  // 1 + 2*a*b*g - a^2 - b^2 - g^2, the determinant of the correlation matrix.
  double correlation_determinant() const;

 private:
  std::array<double, 3> sigmas_;
  double alpha_, beta_, gamma_;
};

// I(Xi; Xj) = -1/2 log(1 - rho^2) for the pair's correlation rho.
double gaussian_mi(const GaussianTriple& g, int i, int j,
                   InfoUnits units = InfoUnits::bits);

// I(Xi; Xj, Xk), the information one variable carries about the other two.
double gaussian_mi_with_rest(const GaussianTriple& g, int i,
                             InfoUnits units = InfoUnits::bits);

// I(Xi; Xj | Xk) from the closed determinant form.
double gaussian_cmi(const GaussianTriple& g, int i, int j, int given,
                    InfoUnits units = InfoUnits::bits);

// Signed co-information I(X1;X2;X3).
double gaussian_coinformation(const GaussianTriple& g,
                              InfoUnits units = InfoUnits::bits);

// Weights of the latent-factor form X_i/sigma_i = s_123 W_123 + ... for
// correlations in the ordered regime alpha >= beta >= gamma >= 0 with
// 1 - alpha - beta + gamma >= 0. Out-of-order inputs raise
// ReorderRequiredError carrying the fixing permutation; inputs outside
// the construction's regime raise InfeasibleParametersError.
struct LatentWeights {
  double s123 = 0.0, s12 = 0.0, s13 = 0.0;
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  // Covariance implied by the weights and the given standard deviations.
  Eigen::Matrix3d reconstructed_covariance(const std::array<double, 3>& sigmas) const;
};
LatentWeights latent_decomposition(const GaussianTriple& g);

// The proposed closed-form symmetric decomposition for Gaussians:
// Red = min pairwise MI, Un by subtraction, Syn from the conditional MI.
SymmetricDecomposition gaussian_decomposition(const GaussianTriple& g,
                                              InfoUnits units = InfoUnits::bits);

// min over the two predictors of their MI with the target.
double gaussian_redundant_predictability(const GaussianTriple& g, int target,
                                         InfoUnits units = InfoUnits::bits);

}  // namespace infoshare
