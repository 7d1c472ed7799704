#include "stsample/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>

namespace stsample {

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol, double abs_tol) {
  using boost::math::quadrature::gauss_kronrod;
  double error = 0.0;
  double value = gauss_kronrod<double, 61>::integrate(f, a, b, 15, rel_tol, &error);
  double target = std::max(abs_tol, rel_tol * std::abs(value));
  if (!(error <= target) || !std::isfinite(value)) {
    throw QuadratureError("adaptive quadrature failed to converge (error estimate " +
                              std::to_string(error) + ", target " +
                              std::to_string(target) + ")",
                          error);
  }
  return {value, error};
}

PanelRule symmetric_panel_rule(double half_width, int panels) {
  using rule = boost::math::quadrature::gauss<double, 16>;
  // boost stores only the nonnegative abscissas of the 16-point rule
  const auto& xs = rule::abscissa();
  const auto& ws = rule::weights();

  PanelRule out;
  const double h = half_width / panels;
  const std::size_t per_panel = 2 * xs.size();
  out.nodes.reserve(2 * panels * per_panel);
  out.weights.reserve(2 * panels * per_panel);

  // positive half-axis first, then mirror
  std::vector<double> pos_nodes, pos_weights;
  for (int p = 0; p < panels; ++p) {
    const double lo = p * h, hi = (p + 1) * h;
    const double mid = 0.5 * (lo + hi), scale = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      pos_nodes.push_back(mid - scale * xs[i]);
      pos_weights.push_back(scale * ws[i]);
      pos_nodes.push_back(mid + scale * xs[i]);
      pos_weights.push_back(scale * ws[i]);
    }
  }
  for (std::size_t i = pos_nodes.size(); i-- > 0;) {
    out.nodes.push_back(-pos_nodes[i]);
    out.weights.push_back(pos_weights[i]);
  }
  for (std::size_t i = 0; i < pos_nodes.size(); ++i) {
    out.nodes.push_back(pos_nodes[i]);
    out.weights.push_back(pos_weights[i]);
  }
  return out;
}

double integrate_rule(const PanelRule& rule,
                      const std::function<double(double)>& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(rule.nodes[i]);
  return acc;
}

void gauss_legendre(int n, double lo, double hi,
                    std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("gauss_legendre: need lo < hi");

  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  const double xm = 0.5 * (hi + lo);
  const double xl = 0.5 * (hi - lo);

  for (int i = 0; i < m; ++i) {
    // Newton iteration on P_n, starting from the Chebyshev-based estimate
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15) break;
    }
    nodes[i] = xm - xl * z;
    nodes[n - 1 - i] = xm + xl * z;
    weights[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

}  // namespace stsample
