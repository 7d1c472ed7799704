#pragma once

#include <Eigen/Dense>

#include <vector>

namespace stsample {

// All singular values of M, descending. Values-only fast path (zgesdd/dgesdd).
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& M);
Eigen::VectorXd singular_values(const Eigen::MatrixXd& M);

// Thin SVD, M = U * diag(S) * V^H with U (m x k), V (n x k), k = min(m, n).
struct ThinSvd {
  Eigen::MatrixXcd U;
  Eigen::VectorXd S;
  Eigen::MatrixXcd V;
};
ThinSvd thin_svd(const Eigen::MatrixXcd& M);

// Conjugate gradient on the normal equations of
//   min_x ||A x - b||^2 + reg ||x||^2.
// objective_history records the objective after every iterate (monotone
// nonincreasing by construction of CG on the normal equations).
struct CgResult {
  Eigen::VectorXcd x;
  int iterations = 0;
  bool converged = false;
  double normal_residual = 0.0;  // ||A^H(b - Ax) - reg x|| at exit
  std::vector<double> objective_history;
};

CgResult solve_regularized_least_squares(const Eigen::MatrixXcd& A,
                                         const Eigen::VectorXcd& b, double reg,
                                         double rel_tol = 1e-12,
                                         int max_iter = 2000);

}  // namespace stsample
