#pragma once

#include <Eigen/Dense>
#include <vector>

#include "svb/stats.hpp"

namespace svb {

/// Exponentially weighted recursive least squares. When constructed with a
/// support set the filter runs on that subproblem only (genie-aided mode) and
/// weights outside the support stay exactly zero.
class RlsFilter {
 public:
  RlsFilter(int dim, double lambda, double p0 = 100.0);
  RlsFilter(int dim, double lambda, std::vector<int> support,
            double p0 = 100.0);

  void step(const Eigen::VectorXd& x, double y);

  int dim() const { return dim_; }
  const Eigen::VectorXd& weights() const { return w_full_; }
  /// Inverse-correlation matrix of the active subproblem.
  const Eigen::MatrixXd& covariance() const { return P_; }
  const std::vector<int>& support() const { return support_; }

 private:
  int dim_;
  double lambda_;
  std::vector<int> support_;  // active coordinates, ascending
  Eigen::MatrixXd P_;
  Eigen::VectorXd w_;       // support-sized
  Eigen::VectorXd w_full_;  // scattered to full dimension
  Eigen::VectorXd xs_, px_, k_;
};

/// Online cyclic coordinate descent for the l1-regularized LS cost: the
/// unregularized statistics are time-updated and one soft-threshold sweep is
/// executed per sample. The deterministic sparse baseline of the benchmark;
/// tau must be chosen per scenario (cross-validated by the harness).
class CcdLasso {
 public:
  CcdLasso(int dim, double lambda, double tau, double ridge = 1e-3);

  void step(const Eigen::VectorXd& x, double y);

  int dim() const { return static_cast<int>(w_.size()); }
  double tau() const { return tau_; }
  const Eigen::VectorXd& weights() const { return w_; }
  const SufficientStats& stats() const { return stats_; }

 private:
  double lambda_;
  double tau_;
  SufficientStats stats_;
  Eigen::VectorXd w_;
};

}  // namespace svb
