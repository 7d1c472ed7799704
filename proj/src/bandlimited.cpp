#include "stsample/bandlimited.hpp"

#include <boost/math/special_functions/sinc.hpp>

#include <algorithm>
#include <cmath>

namespace stsample {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double sinc(double x) { return boost::math::sinc_pi(x); }

}  // namespace

SpectrumGrid make_spectrum_grid(double sigma, int n) {
  if (!(sigma > 0.0)) throw std::invalid_argument("band edge sigma must be > 0");
  if (n < 16) throw std::invalid_argument("spectrum grid needs at least 16 nodes");

  SpectrumGrid g;
  g.sigma = sigma;
  g.t_nodes.resize(n);
  g.values.assign(n, {0.0, 0.0});
  g.weights.assign(n, 0.0);

  const double dt = 2.0 * sigma / (n - 1);
  // fill half and mirror so the grid is symmetric to the last bit
  for (int j = 0; j < n / 2; ++j) {
    const double t = -sigma + j * dt;
    g.t_nodes[j] = t;
    g.t_nodes[n - 1 - j] = -t;
  }
  if (n % 2 == 1) g.t_nodes[n / 2] = 0.0;
  for (int j = 0; j < n; ++j)
    g.weights[j] = (j == 0 || j == n - 1) ? 0.5 * dt : dt;
  return g;
}

BandFunction BandFunction::from_spectrum(SpectrumGrid grid) {
  BandFunction f;
  f.sigma_ = grid.sigma;
  f.grid_ = std::move(grid);
  return f;
}

BandFunction BandFunction::from_closed_form(double sigma, Evaluator ev) {
  if (!(sigma > 0.0)) throw std::invalid_argument("band edge sigma must be > 0");
  BandFunction f;
  f.sigma_ = sigma;
  f.evaluator_ = std::move(ev);
  return f;
}

BandFunction BandFunction::from_both(SpectrumGrid grid, Evaluator ev) {
  BandFunction f = from_spectrum(std::move(grid));
  f.evaluator_ = std::move(ev);
  return f;
}

const SpectrumGrid& BandFunction::spectrum() const {
  if (!grid_) throw std::logic_error("BandFunction carries no spectrum grid");
  return *grid_;
}

std::complex<double> BandFunction::eval(double x) const {
  if (evaluator_) return {evaluator_(x), 0.0};
  return eval_from_spectrum(x);
}

std::complex<double> BandFunction::eval_from_spectrum(double x) const {
  const SpectrumGrid& g = spectrum();
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j < g.size(); ++j) {
    const double phase = x * g.t_nodes[j];
    acc += g.weights[j] * g.values[j] *
           std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return acc / kTwoPi;
}

double BandFunction::l2_norm_sq() const {
  const SpectrumGrid& g = spectrum();
  double acc = 0.0;
  for (int j = 0; j < g.size(); ++j) acc += g.weights[j] * std::norm(g.values[j]);
  return acc / kTwoPi;
}

double BandFunction::l2_norm() const { return std::sqrt(l2_norm_sq()); }

BandFunction sinc_pw(double sigma, double x0, int n) {
  SpectrumGrid g = make_spectrum_grid(sigma, n);
  const double amp = kPi / sigma;
  for (int j = 0; j < g.size(); ++j) {
    const double phase = -x0 * g.t_nodes[j];
    g.values[j] = amp * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return BandFunction::from_both(
      std::move(g), [sigma, x0](double x) { return sinc(sigma * (x - x0)); });
}

BandFunction mollifier_h(double eps, int n) {
  if (!(eps > 0.0)) throw std::invalid_argument("mollifier width must be > 0");
  return sinc_pw(eps, 0.0, n);
}

BandFunction near_null_witness(double eps, int n) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("witness parameter must satisfy 0 < eps < 1");

  const double edge = kPi + eps;
  // at least four cells across each eps-band so cell averages resolve it
  const int n_eff = std::max(n, static_cast<int>(std::ceil(2.0 * edge / eps)) + 2);
  SpectrumGrid g = make_spectrum_grid(edge, n_eff);

  const double amp = kPi / (2.0 * eps);
  const double dt = 2.0 * edge / (n_eff - 1);
  auto overlap = [](double lo, double hi, double a, double b) {
    return std::max(0.0, std::min(hi, b) - std::max(lo, a));
  };
  for (int j = 0; j < g.size(); ++j) {
    const double c_lo = std::max(-edge, g.t_nodes[j] - 0.5 * dt);
    const double c_hi = std::min(edge, g.t_nodes[j] + 0.5 * dt);
    const double pos = overlap(c_lo, c_hi, kPi - eps, kPi + eps);
    const double neg = overlap(c_lo, c_hi, -kPi - eps, -kPi + eps);
    g.values[j] = std::complex<double>(0.0, amp * (neg - pos) / g.weights[j]);
  }
  return BandFunction::from_both(std::move(g), [eps](double x) {
    return std::sin(kPi * x) * sinc(eps * x);
  });
}

BandFunction sine_wave(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("frequency must be > 0");
  return BandFunction::from_closed_form(
      omega, [omega](double x) { return std::sin(omega * x); });
}

double convolve_time_domain(const BandFunction& f, const KernelFamily& fam,
                            double u, double x) {
  if (!(u >= fam.u_min && u <= fam.u_max))
    throw std::domain_error("kernel parameter outside family interval");
  const double reach = std::pow(40.0 / u, 1.0 / fam.alpha);
  // panel width under half an oscillation of the band-limited factor
  const int panels =
      std::max(8, static_cast<int>(std::ceil(reach * (2.0 + f.sigma()))));
  const PanelRule rule = symmetric_panel_rule(reach, panels);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double s = rule.nodes[i];
    acc += rule.weights[i] * std::exp(-u * std::pow(std::abs(s), fam.alpha)) *
           std::real(f.eval(x - s));
  }
  return acc;
}

BandFunction convolve(const BandFunction& f, const KernelFamily& fam, double u,
                      const Tolerances& tol) {
  if (!(u >= fam.u_min && u <= fam.u_max))
    throw std::domain_error("kernel parameter outside family interval");
  if (f.has_spectrum()) {
    SpectrumGrid g = f.spectrum();
    for (int j = 0; j < g.size(); ++j)
      g.values[j] *= kernel_ft(fam, u, g.t_nodes[j], tol);
    return BandFunction::from_spectrum(std::move(g));
  }
  // closed-form route: lazy time-domain quadrature
  return BandFunction::from_closed_form(f.sigma(), [f, fam, u](double x) {
    return convolve_time_domain(f, fam, u, x);
  });
}

ParityParts parity_split(const BandFunction& f) {
  const SpectrumGrid& g = f.spectrum();
  const int n = g.size();

  SpectrumGrid even = g, odd = g, re = g, im = g;
  for (int j = 0; j < n; ++j) {
    const std::complex<double> a = g.values[j];
    const std::complex<double> b = g.values[n - 1 - j];  // value at -t_j
    even.values[j] = 0.5 * (a + b);
    odd.values[j] = 0.5 * (a - b);
    // conjugate symmetrization: spectra of Re f and Im f
    re.values[j] = 0.5 * (a + std::conj(b));
    im.values[j] = (a - std::conj(b)) / std::complex<double>(0.0, 2.0);
  }
  return ParityParts{BandFunction::from_spectrum(std::move(even)),
                     BandFunction::from_spectrum(std::move(odd)),
                     BandFunction::from_spectrum(std::move(re)),
                     BandFunction::from_spectrum(std::move(im))};
}

BandFunction derivative(const BandFunction& f) {
  SpectrumGrid g = f.spectrum();
  for (int j = 0; j < g.size(); ++j)
    g.values[j] *= std::complex<double>(0.0, g.t_nodes[j]);
  return BandFunction::from_spectrum(std::move(g));
}

double l2_norm(const BandFunction& f) { return f.l2_norm(); }

double sup_norm(const BandFunction& f, double lo, double hi, int pts_per_unit) {
  if (!(hi > lo)) throw std::invalid_argument("sup_norm window is empty");
  if (pts_per_unit < 8)
    throw std::invalid_argument("sup_norm needs at least 8 points per unit length");
  const int n = std::max(2, static_cast<int>(std::ceil((hi - lo) * pts_per_unit)) + 1);
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    best = std::max(best, std::abs(f.eval(x)));
  }
  return best;
}

}  // namespace stsample
