#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace svb {

/// First moment and first inverse moment of GIG(x; p, q, -1/2), the
/// variational posterior of a weight precision under the Laplace routes.
/// For this half-integer order the Bessel ratio collapses and
///
///   <x>    = sqrt(q / p)
///   <1/x>  = 1 / <x> + 1 / q
///
/// The inverse moment strictly exceeds 1/<x>; the gap 1/q is the Jensen term.
struct GigHalfMoments {
  double mean;
  double inv_mean;
};

inline GigHalfMoments gig_half_moments(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0))
    throw std::domain_error("gig_half_moments: parameters must be positive");
  const double mean = std::sqrt(q / p);
  return {mean, 1.0 / mean + 1.0 / q};
}

/// Density of the multivariate Laplace prior that the Gaussian/inverse-Gamma
/// hierarchy integrates to:
///
///   p(w | b, beta) = (sqrt(beta b) / 2)^N exp(-sqrt(beta b) ||w||_1)
///
/// Throws std::domain_error on non-finite input or nonpositive b, beta.
double laplace_marginal_density(const Eigen::VectorXd& w, double b,
                                double beta);

}  // namespace svb
