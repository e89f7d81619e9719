#include "svb/adaptive.hpp"

#include <cmath>

#include "svb/distributions.hpp"
#include "svb/sweep.hpp"

namespace svb {

namespace {
constexpr double kInitialRidge = 1e-3;
}

std::optional<double> adaptive_beta_update(const SufficientStats& stats,
                                           const Eigen::VectorXd& w_prev,
                                           const Eigen::VectorXd& sigma2_prev,
                                           const Hyperparams& hyper,
                                           double lambda) {
  const double window = lambda < 1.0 ? 1.0 / (1.0 - lambda)
                                     : static_cast<double>(stats.n);
  const double denom = 2.0 * hyper.delta + stats.d - stats.z.dot(w_prev) +
                       stats.R.diagonal().dot(sigma2_prev);
  if (!(denom > 0.0)) return std::nullopt;
  return (window + stats.dim() + 2.0 * hyper.rho) / denom;
}

AdaptiveSvb::AdaptiveSvb(int dim, Variant variant, const Hyperparams& hyper)
    : dim_(dim), variant_(variant), hyper_(hyper) {
  hyper_.validate();
  stats_ = SufficientStats::Zero(dim);
  // R(0) carries the initial regularizer A(-1) plus a small ridge. Embedding
  // A(-1) keeps the diagonal positive through the startup transient even on
  // degenerate input, since the recursion replaces it with A(n-1) exactly.
  alpha_curr_ = PrecisionDiag::Ones(dim);
  alpha_prev_ = PrecisionDiag::Ones(dim);
  alpha_next_ = PrecisionDiag::Ones(dim);
  stats_.R.diagonal() =
      Eigen::VectorXd::Constant(dim, kInitialRidge) + alpha_prev_.values();
  w_ = Eigen::VectorXd::Zero(dim);
  sigma2_ = Eigen::VectorXd::Zero(dim);
  gamma_ = Eigen::VectorXd::Constant(dim, 2.0);
  if (variant_ == Variant::MultiParamLaplace)
    b_vec_ = Eigen::VectorXd::Ones(dim);
}

bool AdaptiveSvb::step(const Eigen::VectorXd& x, double y) {
  if (x.size() != dim_)
    throw std::invalid_argument("AdaptiveSvb::step: dimension mismatch");
  if (!x.allFinite() || !std::isfinite(y)) return false;

  const double lambda = hyper_.lambda;
  stats_.update(x, y, lambda, alpha_curr_, alpha_prev_);

  if (auto beta = adaptive_beta_update(stats_, w_, sigma2_, hyper_, lambda)) {
    beta_ = *beta;
  } else {
    ++beta_holds_;
  }

  sigma2_.array() = 1.0 / (beta_ * stats_.R.diagonal().array());
  gauss_seidel_sweep(stats_.R, stats_.z, w_);

  switch (variant_) {
    case Variant::StudentT:
      for (int i = 0; i < dim_; ++i) {
        const double bw2 = beta_ * w_[i] * w_[i] + 1.0 / stats_.R(i, i);
        alpha_next_.set(i, (2.0 * hyper_.c + 1.0) / (hyper_.a + bw2));
      }
      break;
    case Variant::Laplace: {
      double gamma_sum = 0.0;
      for (int i = 0; i < dim_; ++i) {
        const double bw2 = beta_ * w_[i] * w_[i] + 1.0 / stats_.R(i, i);
        alpha_next_.set(i, gig_half_moments(bw2, b_).mean);
        gamma_[i] = 1.0 / alpha_next_[i] + 1.0 / b_;
        gamma_sum += gamma_[i];
      }
      b_ = (dim_ + hyper_.kappa) / (hyper_.nu + 0.5 * gamma_sum);
      break;
    }
    case Variant::MultiParamLaplace:
      for (int i = 0; i < dim_; ++i) {
        const double bw2 = beta_ * w_[i] * w_[i] + 1.0 / stats_.R(i, i);
        alpha_next_.set(i, gig_half_moments(bw2, b_vec_[i]).mean);
        gamma_[i] = 1.0 / alpha_next_[i] + 1.0 / b_vec_[i];
        b_vec_[i] = (1.0 + hyper_.kappa) / (hyper_.nu + 0.5 * gamma_[i]);
      }
      break;
  }

  swap(alpha_prev_, alpha_curr_);
  swap(alpha_curr_, alpha_next_);
  return true;
}

}  // namespace svb
