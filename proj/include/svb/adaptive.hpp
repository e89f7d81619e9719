#pragma once

#include <Eigen/Dense>
#include <optional>

#include "svb/batch.hpp"
#include "svb/stats.hpp"

namespace svb {

/// Noise precision time update, O(N):
///
///   beta(n) = (W + N + 2 rho) / (2 delta + d(n) - z'(n) w(n-1) + r'(n) sigma(n-1))
///
/// with r(n) = diag(R(n)) and W the effective window size (1-lambda)^{-1},
/// or the sample count when lambda = 1. Returns nullopt when the denominator
/// is not positive, which can happen transiently because the expression
/// assumes w(n-1) solves the normal equations; the caller holds the previous
/// value in that case.
std::optional<double> adaptive_beta_update(const SufficientStats& stats,
                                           const Eigen::VectorXd& w_prev,
                                           const Eigen::VectorXd& sigma2_prev,
                                           const Hyperparams& hyper,
                                           double lambda);

/// Online sparse variational Bayes estimator. Each incoming sample triggers
/// one statistics update, one noise-precision update, one Gauss-Seidel pass
/// over the weights, and one sparsity-parameter update, all in O(N^2) with no
/// heap allocation after construction.
///
/// The sparsity mechanism differs per Variant: the per-weight precisions
/// alpha_i of irrelevant taps are driven to very large values (clamped at
/// kAlphaCeil), which inflates r_ii and pins the corresponding weight to
/// numerically zero.
class AdaptiveSvb {
 public:
  AdaptiveSvb(int dim, Variant variant, const Hyperparams& hyper);

  /// Process one sample. Returns false (state untouched) when x or y contain
  /// non-finite values.
  bool step(const Eigen::VectorXd& x, double y);

  int dim() const { return dim_; }
  Variant variant() const { return variant_; }
  long steps() const { return stats_.n; }

  const Eigen::VectorXd& weights() const { return w_; }
  const Eigen::VectorXd& sigma2() const { return sigma2_; }
  double beta() const { return beta_; }
  double noise_variance() const { return 1.0 / beta_; }
  const SufficientStats& stats() const { return stats_; }
  const PrecisionDiag& alpha() const { return alpha_curr_; }
  const PrecisionDiag& alpha_prev() const { return alpha_prev_; }
  const Eigen::VectorXd& gamma() const { return gamma_; }
  double b() const { return b_; }
  const Eigen::VectorXd& b_vec() const { return b_vec_; }

  /// Number of samples on which the beta denominator guard engaged.
  long beta_holds() const { return beta_holds_; }

 private:
  int dim_;
  Variant variant_;
  Hyperparams hyper_;

  SufficientStats stats_;
  Eigen::VectorXd w_;
  Eigen::VectorXd sigma2_;
  double beta_ = 1.0;
  PrecisionDiag alpha_curr_;  // A(n-1), embedded in R(n)
  PrecisionDiag alpha_prev_;  // A(n-2)
  PrecisionDiag alpha_next_;  // workspace for A(n)
  Eigen::VectorXd gamma_;
  double b_ = 1.0;
  Eigen::VectorXd b_vec_;
  long beta_holds_ = 0;
};

}  // namespace svb
