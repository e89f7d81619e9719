#include "svb/sweep.hpp"

#include <cmath>

namespace svb {

void gauss_seidel_sweep(const Eigen::MatrixXd& R, const Eigen::VectorXd& z,
                        Eigen::VectorXd& w) {
  const int dim = static_cast<int>(R.rows());
  for (int i = 0; i < dim; ++i) {
    const double* col = R.col(i).data();
    double acc = 0.0;
    for (int j = 0; j < dim; ++j) {
      if (j != i) acc += col[j] * w[j];
    }
    w[i] = (z[i] - acc) / col[i];
  }
}

void soft_threshold_sweep(const Eigen::MatrixXd& R, const Eigen::VectorXd& z,
                          double tau, Eigen::VectorXd& w) {
  const int dim = static_cast<int>(R.rows());
  const double threshold = 0.5 * tau;
  for (int i = 0; i < dim; ++i) {
    const double* col = R.col(i).data();
    const double r_ii = col[i];
    if (r_ii <= 1e-12) {
      w[i] = 0.0;
      continue;
    }
    double acc = 0.0;
    for (int j = 0; j < dim; ++j) {
      if (j != i) acc += col[j] * w[j];
    }
    const double u = z[i] - acc;
    const double shrunk = std::abs(u) - threshold;
    w[i] = shrunk > 0.0 ? std::copysign(shrunk, u) / r_ii : 0.0;
  }
}

}  // namespace svb
