#pragma once

#include <Eigen/Dense>

namespace svb {

inline constexpr double kAlphaFloor = 1e-10;
inline constexpr double kAlphaCeil = 1e10;

/// Clamp a precision value into the admissible range. Anything that is not
/// strictly positive (including NaN) collapses to the floor.
inline double clamp_alpha(double a) {
  if (!(a > kAlphaFloor)) return kAlphaFloor;
  if (a > kAlphaCeil) return kAlphaCeil;
  return a;
}

/// Fixed constants of the hierarchical model: Gamma(rho, delta) on the noise
/// precision, Gamma(c, a/2) on the weight precisions (Student-t route),
/// Gamma(kappa, nu) on the shrinkage parameter(s) of the Laplace routes, and
/// the forgetting factor of the exponentially weighted data window.
///
/// The defaults are nearly noninformative; lambda is the only value that is
/// normally tuned per scenario.
struct Hyperparams {
  double rho = 1e-6;
  double delta = 1e-6;
  double c = 1e-6;
  double a = 1e-6;
  double kappa = 1e-6;
  double nu = 1e-6;
  double lambda = 0.99;

  /// Throws std::invalid_argument if any prior constant is negative or
  /// lambda is outside (0, 1].
  void validate() const;
};

/// Diagonal of the precision matrix A = diag(alpha) that regularizes the
/// autocorrelation matrix. Entries are kept inside [kAlphaFloor, kAlphaCeil]
/// at all times; the ceiling keeps r_ii finite while a weight whose precision
/// sits at the ceiling is numerically zero.
class PrecisionDiag {
 public:
  PrecisionDiag() = default;
  explicit PrecisionDiag(Eigen::VectorXd values) : v_(std::move(values)) {
    for (Eigen::Index i = 0; i < v_.size(); ++i) v_[i] = clamp_alpha(v_[i]);
  }

  static PrecisionDiag Constant(int dim, double value) {
    return PrecisionDiag(Eigen::VectorXd::Constant(dim, value));
  }
  static PrecisionDiag Ones(int dim) { return Constant(dim, 1.0); }

  int size() const { return static_cast<int>(v_.size()); }
  const Eigen::VectorXd& values() const { return v_; }
  double operator[](int i) const { return v_[i]; }
  void set(int i, double value) { v_[i] = clamp_alpha(value); }

  friend void swap(PrecisionDiag& a, PrecisionDiag& b) noexcept {
    a.v_.swap(b.v_);
  }

 private:
  Eigen::VectorXd v_;
};

/// Exponentially weighted second-order statistics of the data stream:
///
///   R(n) = X'(n) L(n) X(n) + A(n-1)      (regularized autocorrelation)
///   z(n) = X'(n) L(n) y(n)               (crosscorrelation)
///   d(n) = y'(n) L(n) y(n)               (observation energy)
///
/// with L(n) = diag(lambda^{n-1}, ..., 1). R carries the time-delayed
/// regularizer A(n-1) on its diagonal and stays exactly symmetric under
/// update(): every term added is symmetric.
struct SufficientStats {
  Eigen::MatrixXd R;
  Eigen::VectorXd z;
  double d = 0.0;
  long n = 0;

  static SufficientStats Zero(int dim);

  int dim() const { return static_cast<int>(z.size()); }

  /// One-sample time update:
  ///   R(n) = lambda R(n-1) + x x' - lambda A(n-2) + A(n-1)
  ///   z(n) = lambda z(n-1) + x y
  ///   d(n) = lambda d(n-1) + y^2
  ///
  /// alpha_prev holds A(n-1), alpha_prev2 the A(n-2) that was embedded in
  /// R(n-1). Throws std::invalid_argument on dimension mismatch.
  void update(const Eigen::VectorXd& x, double y, double lambda,
              const PrecisionDiag& alpha_prev, const PrecisionDiag& alpha_prev2);
};

/// Raw weighted Gram pieces without the regularizer: G = X'LX, z = X'Ly,
/// d = y'Ly. Row j of X carries weight lambda^{n-1-j}.
struct WeightedGram {
  Eigen::MatrixXd G;
  Eigen::VectorXd z;
  double d = 0.0;
};

WeightedGram weighted_gram(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                           double lambda);

/// Batch evaluation of the sufficient statistics over a fixed block,
/// R = X'LX + diag(alpha). Exact per definition; the recursive update()
/// must reproduce it, which makes this the reference for the recursion.
SufficientStats stats_from_batch(const Eigen::MatrixXd& X,
                                 const Eigen::VectorXd& y, double lambda,
                                 const PrecisionDiag& alpha);

}  // namespace svb
