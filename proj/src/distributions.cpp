#include "svb/distributions.hpp"

namespace svb {

double laplace_marginal_density(const Eigen::VectorXd& w, double b,
                                double beta) {
  if (!(b > 0.0) || !(beta > 0.0) || !std::isfinite(b) || !std::isfinite(beta))
    throw std::domain_error("laplace_marginal_density: b, beta must be positive and finite");
  if (!w.allFinite())
    throw std::domain_error("laplace_marginal_density: non-finite w");
  const double s = std::sqrt(beta * b);
  const auto dim = static_cast<double>(w.size());
  return std::pow(0.5 * s, dim) * std::exp(-s * w.lpNorm<1>());
}

}  // namespace svb
