#pragma once

#include <complex>
#include <vector>

#include "stsample/quadrature.hpp"

namespace stsample {

// Family of even convolution kernels exp(-u * |x|^alpha) indexed by the
// evolution parameter u in [u_min, u_max], with a quadrature grid in u used
// by every operation that integrates over the parameter interval.
struct KernelFamily {
  double alpha = 2.0;
  double u_min = 0.5;
  double u_max = 2.0;
  std::vector<double> u_nodes;    // strictly increasing, interior to [u_min, u_max]
  std::vector<double> u_weights;  // positive, summing to u_max - u_min
};

// Builds a family with an n_u-point Gauss-Legendre grid on (u_min, u_max).
// Throws std::invalid_argument on alpha <= 0 or an empty/invalid interval.
KernelFamily make_kernel_family(double alpha, double u_min, double u_max,
                                int n_u = 32);

// Numerical tolerances shared by the kernel checks.
struct Tolerances {
  double quad_rel = 1e-11;   // adaptive quadrature relative target
  double quad_abs = 1e-13;   // adaptive quadrature absolute floor
  double fd_step = 1e-3;     // step for finite-difference second derivatives
};

// Diagnostics for the admissibility conditions of the kernel family.
struct KernelConditionReport {
  double beta_C = 0.0;           // smallest C with (1+x^4)|phi_u(x)| <= C on the test grid
  double gamma_L = 0.0;          // empirical Lipschitz constant of u -> ||phi_u||_1
  bool is_even_real = false;     // evenness / realness sampled on a grid
  double eta_min = 0.0;          // min over t of sup over u of |Phi_u(t)|
  double theta_sigma_min = 0.0;  // smallest eigenvalue of the completeness-proxy Gram
  std::complex<double> theta_probe{0.0, 0.0};
};

// phi_u(x) = exp(-u |x|^alpha). Throws std::domain_error if u is outside
// [u_min, u_max].
double kernel_eval(const KernelFamily& fam, double u, double x);

// Fourier transform Phi_u(t) = integral of exp(-i t x) phi_u(x) dx.
// Real and even in t. Closed forms for alpha in {1, 2}; adaptive quadrature
// otherwise (throws QuadratureError if the tolerance cannot be met).
double kernel_ft(const KernelFamily& fam, double u, double t,
                 const Tolerances& tol = {});

// Quadrature evaluation of Phi_u(t) regardless of alpha; cross-check path.
double kernel_ft_quadrature(const KernelFamily& fam, double u, double t,
                            const Tolerances& tol = {});

// Second derivative of Phi_u in t. Closed form for alpha in {1, 2},
// five-point central differences otherwise.
double kernel_ft_second_derivative(const KernelFamily& fam, double u, double t,
                                   const Tolerances& tol = {});

// L1 distance ||phi_u' - phi_u||_1, used for the Lipschitz check.
double kernel_l1_distance(const KernelFamily& fam, double u, double u2,
                          const Tolerances& tol = {});

// Smallest eigenvalue of the Gram matrix of {Phi_u'' + w Phi_u} in
// discretized L2(0, sigma), computed through singular values so the
// result is nonnegative by construction.
double theta_gram_min(const KernelFamily& fam, double sigma, int t_grid_size,
                      std::complex<double> probe_w, const Tolerances& tol = {});

// Runs all five admissibility checks on grids. sigma > 0, t_grid_size >= 16.
KernelConditionReport verify_conditions(const KernelFamily& fam, double sigma,
                                        int t_grid_size, const Tolerances& tol = {},
                                        std::complex<double> theta_probe = {0.0, 0.0});

}  // namespace stsample
