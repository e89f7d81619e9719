#pragma once

#include <Eigen/Dense>

namespace svb {

/// One Gauss-Seidel pass over the coordinates of w for R w = z, in place:
///
///   w_i <- (z_i - sum_{j != i} r_ij w_j) / r_ii
///
/// for i ascending, so coordinates below i use the values refreshed in this
/// pass and coordinates above i the incoming ones. The accumulation is a
/// plain ascending-index scalar loop over column i (R is symmetric), which
/// keeps the pass deterministic. Requires r_ii > 0.
void gauss_seidel_sweep(const Eigen::MatrixXd& R, const Eigen::VectorXd& z,
                        Eigen::VectorXd& w);

/// The same pass with an l1 shrink: the residual numerator is soft-thresholded
/// by tau/2 before dividing by r_ii. tau = 0 reproduces gauss_seidel_sweep
/// bit for bit. Coordinates whose diagonal entry is below 1e-12 (never
/// excited) are set to zero.
void soft_threshold_sweep(const Eigen::MatrixXd& R, const Eigen::VectorXd& z,
                          double tau, Eigen::VectorXd& w);

}  // namespace svb
