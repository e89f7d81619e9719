#include "svb/batch.hpp"

#include <cmath>
#include <stdexcept>

#include "svb/distributions.hpp"

namespace svb {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::StudentT: return "student-t";
    case Variant::Laplace: return "laplace";
    case Variant::MultiParamLaplace: return "multiparameter-laplace";
  }
  return "?";
}

PosteriorState PosteriorState::initial(int dim, Variant variant) {
  PosteriorState s;
  s.variant = variant;
  s.mu = Eigen::VectorXd::Zero(dim);
  s.sigma2 = Eigen::VectorXd::Zero(dim);
  s.beta = 1.0;
  s.alpha = PrecisionDiag::Ones(dim);
  if (variant != Variant::StudentT) {
    // alpha = b = 1 makes gamma = 1/alpha + 1/b = 2 the consistent start.
    s.gamma = Eigen::VectorXd::Constant(dim, 2.0);
    if (variant == Variant::Laplace) s.b_scalar = 1.0;
    if (variant == Variant::MultiParamLaplace)
      s.b_vec = Eigen::VectorXd::Ones(dim);
  }
  return s;
}

void update_weight(int i, PosteriorState& state, const SufficientStats& stats) {
  const int dim = state.dim();
  const double* col = stats.R.col(i).data();
  const double r_ii = col[i];
  if (!(r_ii > 0.0))
    throw std::runtime_error("update_weight: nonpositive diagonal entry");
  state.sigma2[i] = 1.0 / (state.beta * r_ii);
  double acc = 0.0;
  for (int j = 0; j < dim; ++j) {
    if (j != i) acc += col[j] * state.mu[j];
  }
  state.mu[i] = (stats.z[i] - acc) / r_ii;
}

void update_beta(PosteriorState& state, const SufficientStats& stats,
                 const Hyperparams& hyper) {
  const int dim = state.dim();
  const double quad = state.mu.dot(stats.R * state.mu);
  const double denom = 2.0 * hyper.delta + stats.d -
                       2.0 * stats.z.dot(state.mu) + quad +
                       state.sigma2.dot(stats.R.diagonal());
  if (!(denom > 0.0))
    throw std::runtime_error("update_beta: nonpositive denominator");
  state.beta = (static_cast<double>(stats.n) + dim + 2.0 * hyper.rho) / denom;
}

void update_alpha_student(PosteriorState& state, const Hyperparams& hyper) {
  const int dim = state.dim();
  for (int i = 0; i < dim; ++i) {
    const double w2 = state.mu[i] * state.mu[i] + state.sigma2[i];
    state.alpha.set(i, (2.0 * hyper.c + 1.0) / (hyper.a + state.beta * w2));
  }
}

void update_alpha_laplace(PosteriorState& state, const Hyperparams& hyper,
                          bool shared_b) {
  const int dim = state.dim();
  for (int i = 0; i < dim; ++i) {
    const double w2 = state.mu[i] * state.mu[i] + state.sigma2[i];
    const double p = std::max(state.beta * w2, 1e-300);
    const double q = shared_b ? state.b_scalar : state.b_vec[i];
    state.alpha.set(i, gig_half_moments(p, q).mean);
    state.gamma[i] = 1.0 / state.alpha[i] + 1.0 / q;
  }
  if (shared_b) {
    state.b_scalar =
        (dim + hyper.kappa) / (hyper.nu + 0.5 * state.gamma.sum());
    for (int i = 0; i < dim; ++i)
      state.gamma[i] = 1.0 / state.alpha[i] + 1.0 / state.b_scalar;
  } else {
    for (int i = 0; i < dim; ++i) {
      state.b_vec[i] = (1.0 + hyper.kappa) / (hyper.nu + 0.5 * state.gamma[i]);
      state.gamma[i] = 1.0 / state.alpha[i] + 1.0 / state.b_vec[i];
    }
  }
}

BatchResult solve(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                  double lambda, const Hyperparams& hyper, Variant variant,
                  const BatchOptions& opts) {
  hyper.validate();
  const int dim = static_cast<int>(X.cols());

  WeightedGram gram = weighted_gram(X, y, lambda);
  BatchResult result;
  result.state = PosteriorState::initial(dim, variant);
  PosteriorState& s = result.state;

  SufficientStats stats;
  stats.z = std::move(gram.z);
  stats.d = gram.d;
  stats.n = X.rows();
  const Eigen::VectorXd gdiag = gram.G.diagonal();
  stats.R = std::move(gram.G);
  stats.R.diagonal() = gdiag + s.alpha.values();

  Eigen::VectorXd mu_prev(dim);
  for (int cycle = 1; cycle <= opts.max_cycles; ++cycle) {
    mu_prev = s.mu;
    for (int i = 0; i < dim; ++i) update_weight(i, s, stats);
    update_beta(s, stats, hyper);
    switch (variant) {
      case Variant::StudentT:
        update_alpha_student(s, hyper);
        break;
      case Variant::Laplace:
        update_alpha_laplace(s, hyper, /*shared_b=*/true);
        break;
      case Variant::MultiParamLaplace:
        update_alpha_laplace(s, hyper, /*shared_b=*/false);
        break;
    }
    stats.R.diagonal() = gdiag + s.alpha.values();
    result.cycles = cycle;
    if ((s.mu - mu_prev).cwiseAbs().maxCoeff() <= opts.tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace svb
