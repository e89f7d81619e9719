#include "svb/baselines.hpp"

#include <numeric>
#include <stdexcept>

#include "svb/sweep.hpp"

namespace svb {

RlsFilter::RlsFilter(int dim, double lambda, double p0)
    : RlsFilter(dim, lambda, [dim] {
        std::vector<int> all(dim);
        std::iota(all.begin(), all.end(), 0);
        return all;
      }(), p0) {}

RlsFilter::RlsFilter(int dim, double lambda, std::vector<int> support,
                     double p0)
    : dim_(dim), lambda_(lambda), support_(std::move(support)) {
  if (!(lambda_ > 0.0) || lambda_ > 1.0)
    throw std::invalid_argument("RlsFilter: lambda outside (0, 1]");
  for (int i : support_)
    if (i < 0 || i >= dim) throw std::invalid_argument("RlsFilter: bad support index");
  const auto m = static_cast<int>(support_.size());
  P_ = p0 * Eigen::MatrixXd::Identity(m, m);
  w_ = Eigen::VectorXd::Zero(m);
  w_full_ = Eigen::VectorXd::Zero(dim);
  xs_.resize(m);
  px_.resize(m);
  k_.resize(m);
}

void RlsFilter::step(const Eigen::VectorXd& x, double y) {
  if (x.size() != dim_)
    throw std::invalid_argument("RlsFilter::step: dimension mismatch");
  const auto m = static_cast<int>(support_.size());
  for (int i = 0; i < m; ++i) xs_[i] = x[support_[i]];

  px_.noalias() = P_ * xs_;
  const double denom = lambda_ + xs_.dot(px_);
  k_ = px_ / denom;
  const double e = y - w_.dot(xs_);
  w_.noalias() += k_ * e;
  P_.noalias() -= k_ * px_.transpose();
  P_ /= lambda_;
  // keep P symmetric against rounding drift
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const double v = 0.5 * (P_(i, j) + P_(j, i));
      P_(i, j) = v;
      P_(j, i) = v;
    }

  for (int i = 0; i < m; ++i) w_full_[support_[i]] = w_[i];
}

CcdLasso::CcdLasso(int dim, double lambda, double tau, double ridge)
    : lambda_(lambda), tau_(tau) {
  if (!(lambda_ > 0.0) || lambda_ > 1.0)
    throw std::invalid_argument("CcdLasso: lambda outside (0, 1]");
  if (tau_ < 0.0) throw std::invalid_argument("CcdLasso: negative tau");
  stats_ = SufficientStats::Zero(dim);
  stats_.R.diagonal().array() += ridge;
  w_ = Eigen::VectorXd::Zero(dim);
}

void CcdLasso::step(const Eigen::VectorXd& x, double y) {
  if (x.size() != dim())
    throw std::invalid_argument("CcdLasso::step: dimension mismatch");
  // statistics recursion with no regularizer
  stats_.R *= lambda_;
  stats_.R.noalias() += x * x.transpose();
  stats_.z *= lambda_;
  stats_.z.noalias() += x * y;
  stats_.d = lambda_ * stats_.d + y * y;
  ++stats_.n;

  soft_threshold_sweep(stats_.R, stats_.z, tau_, w_);
}

}  // namespace svb
