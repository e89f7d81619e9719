#pragma once

#include <Eigen/Dense>

#include "svb/stats.hpp"

namespace svb {

/// Which hierarchical prior drives the sparsity mechanism.
enum class Variant {
  StudentT,           // Gamma prior on each precision
  Laplace,            // inverse-Gamma with one shared shrinkage parameter b
  MultiParamLaplace,  // inverse-Gamma with one shrinkage parameter b_i per weight
};

const char* variant_name(Variant v);

/// Parameters of the factorized variational posterior. mu/sigma2 describe the
/// per-weight Gaussians, beta the mean of the noise-precision Gamma, alpha the
/// means of the weight precisions. gamma (the inverse-precision means) and the
/// shrinkage parameters exist only for the Laplace variants: b_scalar for
/// Variant::Laplace, b_vec for Variant::MultiParamLaplace.
struct PosteriorState {
  Variant variant = Variant::StudentT;
  Eigen::VectorXd mu;
  Eigen::VectorXd sigma2;
  double beta = 1.0;
  PrecisionDiag alpha;
  Eigen::VectorXd gamma;
  double b_scalar = 1.0;
  Eigen::VectorXd b_vec;

  static PosteriorState initial(int dim, Variant variant);
  int dim() const { return static_cast<int>(mu.size()); }
};

/// Refresh coordinate i of the weight posterior from the current statistics
/// (which must embed the current alpha on the diagonal of R):
///
///   sigma2_i = 1 / (beta r_ii)
///   mu_i     = (z_i - sum_{j != i} r_ij mu_j) / r_ii
///
/// using the freshest values of the other coordinates.
void update_weight(int i, PosteriorState& state, const SufficientStats& stats);

/// Noise precision update, evaluated through the statistics so that the raw
/// data block is not needed:
///
///   beta = (n + N + 2 rho) / (2 delta + d - 2 z'mu + mu'R mu + sigma'diag(R))
///
/// Throws std::runtime_error if the denominator is not positive (impossible
/// for delta > 0).
void update_beta(PosteriorState& state, const SufficientStats& stats,
                 const Hyperparams& hyper);

/// Student-t route: alpha_i = (2c + 1) / (a + beta <w_i^2>).
void update_alpha_student(PosteriorState& state, const Hyperparams& hyper);

/// Laplace routes: alpha_i = sqrt(b / (beta <w_i^2>)) through the GIG
/// half-order moments, gamma_i = 1/alpha_i + 1/b, then the shrinkage update
/// b = (N + kappa) / (nu + sum gamma / 2) (shared) or
/// b_i = (1 + kappa) / (nu + gamma_i / 2) (per weight). gamma is refreshed
/// against the new shrinkage values so the stored triple stays consistent.
void update_alpha_laplace(PosteriorState& state, const Hyperparams& hyper,
                          bool shared_b);

struct BatchOptions {
  double tol = 1e-8;
  int max_cycles = 500;
};

struct BatchResult {
  PosteriorState state;
  bool converged = false;
  int cycles = 0;
};

/// Cycle [weights ascending -> beta -> alpha (-> b)] on the fixed block
/// (X, y) until the largest per-cycle change of mu drops to tol or the cycle
/// budget runs out. Non-convergence is reported through the flag, not an
/// error.
BatchResult solve(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                  double lambda, const Hyperparams& hyper, Variant variant,
                  const BatchOptions& opts = {});

}  // namespace svb
