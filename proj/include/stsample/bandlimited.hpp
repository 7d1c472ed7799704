#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stsample/kernels.hpp"

namespace stsample {

// Spectrum of a bandlimited function tabulated on a uniform frequency grid
// over [-sigma, sigma], with trapezoid quadrature weights (sum = 2 sigma).
// The grid is exactly symmetric about 0.
struct SpectrumGrid {
  double sigma = 0.0;
  std::vector<double> t_nodes;
  std::vector<std::complex<double>> values;
  std::vector<double> weights;

  int size() const { return static_cast<int>(t_nodes.size()); }
};

// Zero spectrum on an n-node grid. n >= 16.
SpectrumGrid make_spectrum_grid(double sigma, int n);

// A function with spectrum supported in [-sigma, sigma].
//
// Square-integrable elements carry a SpectrumGrid. Bounded non-integrable
// elements (pure sine waves and the near-null products used by annihilation
// tests) carry a closed-form evaluator instead. An object may carry both;
// the evaluator is exact, so pointwise evaluation prefers it.
class BandFunction {
 public:
  using Evaluator = std::function<double(double)>;

  static BandFunction from_spectrum(SpectrumGrid grid);
  static BandFunction from_closed_form(double sigma, Evaluator f);
  static BandFunction from_both(SpectrumGrid grid, Evaluator f);

  double sigma() const { return sigma_; }

  bool has_spectrum() const { return grid_.has_value(); }
  const SpectrumGrid& spectrum() const;

  bool has_evaluator() const { return static_cast<bool>(evaluator_); }

  // Pointwise value; closed form when available, otherwise the inverse
  // transform (1/2pi) sum_j w_j F_j e^{i x t_j}.
  std::complex<double> eval(double x) const;

  // Forces the spectrum route (cross-checks and linearity tests).
  std::complex<double> eval_from_spectrum(double x) const;

  // Plancherel norm from the spectrum grid. Throws std::logic_error for
  // closed-form-only objects (they are not square-integrable).
  double l2_norm_sq() const;
  double l2_norm() const;

 private:
  double sigma_ = 0.0;
  std::optional<SpectrumGrid> grid_;
  Evaluator evaluator_;
};

struct ParityParts {
  BandFunction f_even;
  BandFunction f_odd;
  BandFunction f_realpart;
  BandFunction f_imagpart;
};

// sin(sigma (x - x0)) / (sigma (x - x0)), band edge sigma; spectrum
// (pi/sigma) e^{-i x0 t} on [-sigma, sigma]. Carries both representations.
BandFunction sinc_pw(double sigma, double x0, int n = 1024);

// Narrow-band smoothing factor sin(eps x)/(eps x) with band edge eps.
// The dense default grid keeps the second-moment (derivative norm)
// quadrature error below 1e-8 relative.
BandFunction mollifier_h(double eps, int n = 32769);

// Odd product sin(pi x) * sin(eps x)/(eps x), band edge pi + eps.
// Its spectrum is piecewise constant, +/- i pi/(2 eps) on the two bands
// [-pi-eps, -pi+eps] and [pi-eps, pi+eps]; grid values are cell averages so
// the stored spectrum integrates exactly. Requires 0 < eps < 1.
BandFunction near_null_witness(double eps, int n = 1024);

// Bounded closed-form element sin(omega x), band edge omega. No spectrum.
BandFunction sine_wave(double omega);

// Spectrum product with Phi_u: the state reached by diffusing f with the
// kernel at parameter u. Grid inputs stay on their grid; closed-form-only
// inputs return a closed form that integrates phi_u(s) f(x - s) ds on demand.
BandFunction convolve(const BandFunction& f, const KernelFamily& fam, double u,
                      const Tolerances& tol = {});

// Time-domain convolution value by symmetric quadrature against the kernel.
double convolve_time_domain(const BandFunction& f, const KernelFamily& fam,
                            double u, double x);

// Even/odd and real/imaginary spectral splittings. Requires a spectrum.
ParityParts parity_split(const BandFunction& f);

// Spectral derivative: spectrum multiplied by (i t).
BandFunction derivative(const BandFunction& f);

double l2_norm(const BandFunction& f);

// Dense-grid maximum of |f| over [lo, hi]; a lower estimate of the true sup.
// pts_per_unit >= 8.
double sup_norm(const BandFunction& f, double lo, double hi,
                int pts_per_unit = 64);

}  // namespace stsample
