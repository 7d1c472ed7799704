#include "stsample/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "stsample/linalg.hpp"

namespace stsample {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_u_in_range(const KernelFamily& fam, double u) {
  if (!(u >= fam.u_min && u <= fam.u_max))
    throw std::domain_error("kernel parameter u=" + std::to_string(u) +
                            " outside [" + std::to_string(fam.u_min) + ", " +
                            std::to_string(fam.u_max) + "]");
}

// Truncation radius: exp(-u_min * X^alpha) < 1e-16 for every u in the family.
double tail_cutoff(const KernelFamily& fam) {
  return std::pow(40.0 / fam.u_min, 1.0 / fam.alpha);
}

}  // namespace

KernelFamily make_kernel_family(double alpha, double u_min, double u_max, int n_u) {
  if (!(alpha > 0.0)) throw std::invalid_argument("kernel exponent alpha must be > 0");
  if (!(u_min > 0.0 && u_min < u_max && std::isfinite(u_max)))
    throw std::invalid_argument("parameter interval must satisfy 0 < u_min < u_max < inf");
  if (n_u < 1) throw std::invalid_argument("u-grid needs at least one node");
  KernelFamily fam;
  fam.alpha = alpha;
  fam.u_min = u_min;
  fam.u_max = u_max;
  gauss_legendre(n_u, u_min, u_max, fam.u_nodes, fam.u_weights);
  return fam;
}

double kernel_eval(const KernelFamily& fam, double u, double x) {
  require_u_in_range(fam, u);
  return std::exp(-u * std::pow(std::abs(x), fam.alpha));
}

double kernel_ft_quadrature(const KernelFamily& fam, double u, double t,
                            const Tolerances& tol) {
  require_u_in_range(fam, u);
  const double alpha = fam.alpha;
  const double at = std::abs(t);
  const double X = tail_cutoff(fam);

  // Phi_u(t) = 2 * int_0^inf cos(t x) exp(-u x^alpha) dx, split at x = 1.
  // On [0, 1] substitute x = y^m so that the |x|^alpha branch point at the
  // origin becomes at least C^3 and adaptive bisection converges.
  const int m = std::max(1, static_cast<int>(std::ceil(3.0 / alpha)));
  auto near_origin = [&](double y) {
    const double x = std::pow(y, m);
    return std::cos(at * x) * std::exp(-u * std::pow(x, alpha)) * m *
           std::pow(y, m - 1);
  };
  auto far_field = [&](double x) {
    return std::cos(at * x) * std::exp(-u * std::pow(x, alpha));
  };

  double value = integrate_adaptive(near_origin, 0.0, 1.0, tol.quad_rel, tol.quad_abs).value;
  if (X > 1.0)
    value += integrate_adaptive(far_field, 1.0, X, tol.quad_rel, tol.quad_abs).value;
  return 2.0 * value;
}

double kernel_ft(const KernelFamily& fam, double u, double t, const Tolerances& tol) {
  require_u_in_range(fam, u);
  if (fam.alpha == 2.0) return std::sqrt(kPi / u) * std::exp(-t * t / (4.0 * u));
  if (fam.alpha == 1.0) return 2.0 * u / (u * u + t * t);
  return kernel_ft_quadrature(fam, u, t, tol);
}

double kernel_ft_second_derivative(const KernelFamily& fam, double u, double t,
                                   const Tolerances& tol) {
  require_u_in_range(fam, u);
  if (fam.alpha == 2.0) {
    const double base = std::sqrt(kPi / u) * std::exp(-t * t / (4.0 * u));
    return base * (t * t / (4.0 * u * u) - 1.0 / (2.0 * u));
  }
  if (fam.alpha == 1.0) {
    const double d = u * u + t * t;
    return -4.0 * u * (u * u - 3.0 * t * t) / (d * d * d);
  }
  // five-point central difference
  const double h = tol.fd_step;
  auto ft = [&](double s) { return kernel_ft_quadrature(fam, u, s, tol); };
  return (-ft(t + 2 * h) + 16.0 * ft(t + h) - 30.0 * ft(t) + 16.0 * ft(t - h) -
          ft(t - 2 * h)) / (12.0 * h * h);
}

double kernel_l1_distance(const KernelFamily& fam, double u, double u2,
                          const Tolerances& tol) {
  require_u_in_range(fam, u);
  require_u_in_range(fam, u2);
  const double alpha = fam.alpha;
  const double X = tail_cutoff(fam);
  const int m = std::max(1, static_cast<int>(std::ceil(3.0 / alpha)));

  auto diff = [&](double x) {
    return std::abs(std::exp(-u * std::pow(x, alpha)) -
                    std::exp(-u2 * std::pow(x, alpha)));
  };
  auto near_origin = [&](double y) {
    const double x = std::pow(y, m);
    return diff(x) * m * std::pow(y, m - 1);
  };
  double value = integrate_adaptive(near_origin, 0.0, 1.0, tol.quad_rel, tol.quad_abs).value;
  if (X > 1.0)
    value += integrate_adaptive(diff, 1.0, X, tol.quad_rel, tol.quad_abs).value;
  return 2.0 * value;
}

double theta_gram_min(const KernelFamily& fam, double sigma, int t_grid_size,
                      std::complex<double> probe_w, const Tolerances& tol) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  if (t_grid_size < 16) throw std::invalid_argument("t_grid_size must be >= 16");

  const int n_u = static_cast<int>(fam.u_nodes.size());
  const double dt = sigma / (t_grid_size - 1);

  // Weighted value matrix of {Phi_u'' + w Phi_u} on a trapezoid grid of
  // L2(0, sigma); the Gram smallest eigenvalue is its smallest singular
  // value squared, which the SVD keeps nonnegative.
  Eigen::MatrixXcd values(t_grid_size, n_u);
  for (int j = 0; j < t_grid_size; ++j) {
    const double t = j * dt;
    const double wq = (j == 0 || j == t_grid_size - 1) ? 0.5 * dt : dt;
    const double sq = std::sqrt(wq);
    for (int i = 0; i < n_u; ++i) {
      const double u = fam.u_nodes[i];
      const std::complex<double> v =
          kernel_ft_second_derivative(fam, u, t, tol) +
          probe_w * kernel_ft(fam, u, t, tol);
      values(j, i) = sq * v;
    }
  }
  const Eigen::VectorXd s = singular_values(values);
  const double smin = s(s.size() - 1);
  return smin * smin;
}

KernelConditionReport verify_conditions(const KernelFamily& fam, double sigma,
                                        int t_grid_size, const Tolerances& tol,
                                        std::complex<double> theta_probe) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  if (t_grid_size < 16) throw std::invalid_argument("t_grid_size must be >= 16");

  KernelConditionReport rep;
  rep.theta_probe = theta_probe;

  // (beta): maximize (1 + x^4)|phi_u(x)| over a log-spaced x grid and the u grid.
  {
    std::vector<double> xs;
    xs.push_back(0.0);
    const int n = 512;
    const double lo = 1e-6, hi = 1e3;
    for (int i = 0; i < n; ++i)
      xs.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    double best = 0.0;
    for (double u : fam.u_nodes)
      for (double x : xs)
        best = std::max(best, (1.0 + std::pow(x, 4)) * kernel_eval(fam, u, x));
    rep.beta_C = best;
  }

  // (gamma): finite differences of u -> ||phi_u||_1 over adjacent u nodes.
  {
    double lip = 0.0;
    for (std::size_t i = 0; i + 1 < fam.u_nodes.size(); ++i) {
      const double du = fam.u_nodes[i + 1] - fam.u_nodes[i];
      lip = std::max(lip, kernel_l1_distance(fam, fam.u_nodes[i],
                                             fam.u_nodes[i + 1], tol) / du);
    }
    rep.gamma_L = lip;
  }

  // (zeta): evenness and realness on a sample grid. The kernel returns real
  // doubles, so the imaginary part is structurally zero; evenness is sampled.
  {
    double worst = 0.0;
    for (double u : fam.u_nodes) {
      for (int i = 1; i <= 64; ++i) {
        const double x = 0.13 * i;
        worst = std::max(worst, std::abs(kernel_eval(fam, u, x) -
                                         kernel_eval(fam, u, -x)));
      }
    }
    rep.is_even_real = (worst == 0.0);
  }

  // (eta): min over t in [0, sigma] of sup over the u grid of |Phi_u(t)|.
  {
    double eta = std::numeric_limits<double>::infinity();
    for (int j = 0; j < t_grid_size; ++j) {
      const double t = sigma * j / (t_grid_size - 1);
      double sup = 0.0;
      for (double u : fam.u_nodes)
        sup = std::max(sup, std::abs(kernel_ft(fam, u, t, tol)));
      eta = std::min(eta, sup);
    }
    rep.eta_min = eta;
  }

  rep.theta_sigma_min = theta_gram_min(fam, sigma, t_grid_size, theta_probe, tol);
  return rep;
}

}  // namespace stsample
