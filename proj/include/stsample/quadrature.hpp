#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stsample {

// Thrown when adaptive quadrature cannot reach the requested tolerance.
// Carries the error estimate that was actually achieved.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Adaptive Gauss-Kronrod integration of f over [a, b].
// Throws QuadratureError if the estimated error stays above
// max(abs_tol, rel_tol * |value|).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol = 1e-12,
                                    double abs_tol = 1e-14);

// Fixed composite Gauss-Legendre rule with a node set symmetric about 0,
// covering [-half_width, half_width] with `panels` panels per half-axis.
// Symmetry keeps odd integrands at roundoff level.
struct PanelRule {
  std::vector<double> nodes;    // ascending, symmetric about 0
  std::vector<double> weights;  // positive, matching nodes
};

PanelRule symmetric_panel_rule(double half_width, int panels);

double integrate_rule(const PanelRule& rule,
                      const std::function<double(double)>& f);

// n-point Gauss-Legendre nodes and weights on [lo, hi].
// Nodes strictly increasing and interior; weights sum to hi - lo.
void gauss_legendre(int n, double lo, double hi,
                    std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace stsample
