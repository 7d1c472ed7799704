#include "stsample/linalg.hpp"

#include <complex>
#include <stdexcept>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace stsample {

namespace {

void check_info(lapack_int info, const char* routine) {
  if (info != 0)
    throw std::runtime_error(std::string(routine) + " failed with info=" +
                             std::to_string(info));
}

}  // namespace

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& M) {
  if (M.size() == 0) return Eigen::VectorXd();
  Eigen::MatrixXcd A = M;  // zgesdd destroys its input
  const lapack_int m = static_cast<lapack_int>(A.rows());
  const lapack_int n = static_cast<lapack_int>(A.cols());
  Eigen::VectorXd s(std::min(m, n));
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', m, n, A.data(), m,
                                   s.data(), nullptr, 1, nullptr, 1);
  check_info(info, "zgesdd");
  return s;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& M) {
  if (M.size() == 0) return Eigen::VectorXd();
  Eigen::MatrixXd A = M;
  const lapack_int m = static_cast<lapack_int>(A.rows());
  const lapack_int n = static_cast<lapack_int>(A.cols());
  Eigen::VectorXd s(std::min(m, n));
  lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, n, A.data(), m,
                                   s.data(), nullptr, 1, nullptr, 1);
  check_info(info, "dgesdd");
  return s;
}

ThinSvd thin_svd(const Eigen::MatrixXcd& M) {
  Eigen::MatrixXcd A = M;
  const lapack_int m = static_cast<lapack_int>(A.rows());
  const lapack_int n = static_cast<lapack_int>(A.cols());
  const lapack_int k = std::min(m, n);
  ThinSvd out;
  out.U.resize(m, k);
  out.S.resize(k);
  Eigen::MatrixXcd Vh(k, n);
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'S', m, n, A.data(), m,
                                   out.S.data(), out.U.data(), m, Vh.data(), k);
  check_info(info, "zgesdd");
  out.V = Vh.adjoint();
  return out;
}

CgResult solve_regularized_least_squares(const Eigen::MatrixXcd& A,
                                         const Eigen::VectorXcd& b, double reg,
                                         double rel_tol, int max_iter) {
  if (A.rows() != b.size())
    throw std::invalid_argument("solve_regularized_least_squares: dimension mismatch");
  if (reg < 0.0) throw std::invalid_argument("regularization must be nonnegative");

  CgResult out;
  const Eigen::Index n = A.cols();
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n);
  Eigen::VectorXcd Ax = Eigen::VectorXcd::Zero(A.rows());

  const Eigen::VectorXcd rhs = A.adjoint() * b;
  Eigen::VectorXcd r = rhs;  // residual of the normal equations at x = 0
  Eigen::VectorXcd p = r;
  double rs_old = r.squaredNorm();
  const double rhs_norm = std::sqrt(rs_old);
  const double bnorm2 = b.squaredNorm();

  auto objective = [&]() {
    return (Ax - b).squaredNorm() + reg * x.squaredNorm();
  };
  out.objective_history.push_back(bnorm2);

  if (rhs_norm == 0.0) {
    out.x = x;
    out.converged = true;
    return out;
  }

  for (int it = 0; it < max_iter; ++it) {
    const Eigen::VectorXcd Ap = A * p;
    const Eigen::VectorXcd Np = A.adjoint() * Ap + reg * p;
    const double denom = std::real(p.dot(Np));
    if (denom <= 0.0) break;  // numerically lost positive definiteness
    const double alpha = rs_old / denom;
    x += alpha * p;
    Ax += alpha * Ap;
    r -= alpha * Np;
    const double rs_new = r.squaredNorm();
    out.iterations = it + 1;
    out.objective_history.push_back(objective());
    if (std::sqrt(rs_new) <= rel_tol * rhs_norm) {
      out.converged = true;
      break;
    }
    p = r + (rs_new / rs_old) * p;
    rs_old = rs_new;
  }
  out.x = std::move(x);
  out.normal_residual = r.norm();
  return out;
}

}  // namespace stsample
