#include "svb/stats.hpp"

#include <stdexcept>

namespace svb {

void Hyperparams::validate() const {
  if (rho < 0 || delta < 0 || c < 0 || a < 0 || kappa < 0 || nu < 0)
    throw std::invalid_argument("hyperparameters must be nonnegative");
  if (!(lambda > 0.0) || lambda > 1.0)
    throw std::invalid_argument("forgetting factor must lie in (0, 1]");
}

SufficientStats SufficientStats::Zero(int dim) {
  SufficientStats s;
  s.R = Eigen::MatrixXd::Zero(dim, dim);
  s.z = Eigen::VectorXd::Zero(dim);
  s.d = 0.0;
  s.n = 0;
  return s;
}

void SufficientStats::update(const Eigen::VectorXd& x, double y, double lambda,
                             const PrecisionDiag& alpha_prev,
                             const PrecisionDiag& alpha_prev2) {
  const int dim = this->dim();
  if (x.size() != dim || alpha_prev.size() != dim || alpha_prev2.size() != dim)
    throw std::invalid_argument("stats update: dimension mismatch");

  R *= lambda;
  R.noalias() += x * x.transpose();
  R.diagonal() += alpha_prev.values();
  R.diagonal() -= lambda * alpha_prev2.values();

  z *= lambda;
  z.noalias() += x * y;

  d = lambda * d + y * y;
  ++n;
}

WeightedGram weighted_gram(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                           double lambda) {
  const Eigen::Index rows = X.rows();
  if (rows < 1) throw std::invalid_argument("weighted_gram: empty block");
  if (y.size() != rows)
    throw std::invalid_argument("weighted_gram: X/y row mismatch");
  if (!(lambda > 0.0) || lambda > 1.0)
    throw std::invalid_argument("weighted_gram: lambda outside (0, 1]");
  if (!X.allFinite() || !y.allFinite())
    throw std::invalid_argument("weighted_gram: non-finite input");

  // Build the window weights by the same multiplication chain the recursion
  // uses so that batch and chained statistics agree to rounding.
  Eigen::VectorXd wt(rows);
  wt[rows - 1] = 1.0;
  for (Eigen::Index j = rows - 2; j >= 0; --j) wt[j] = wt[j + 1] * lambda;

  WeightedGram g;
  const Eigen::MatrixXd WX = wt.asDiagonal() * X;
  g.G.noalias() = X.transpose() * WX;
  g.G = 0.5 * (g.G + g.G.transpose()).eval();
  g.z.noalias() = X.transpose() * (wt.cwiseProduct(y));
  g.d = y.dot(wt.cwiseProduct(y));
  return g;
}

SufficientStats stats_from_batch(const Eigen::MatrixXd& X,
                                 const Eigen::VectorXd& y, double lambda,
                                 const PrecisionDiag& alpha) {
  if (alpha.size() != X.cols())
    throw std::invalid_argument("stats_from_batch: alpha dimension mismatch");
  WeightedGram g = weighted_gram(X, y, lambda);
  SufficientStats s;
  s.R = std::move(g.G);
  s.R.diagonal() += alpha.values();
  s.z = std::move(g.z);
  s.d = g.d;
  s.n = X.rows();
  return s;
}

}  // namespace svb
