#pragma once

// Integration rules: Gauss rules for the Gegenbauer weight on [-1, 1] and
// logarithmic trapezoid grids for scale integrals of the form int f(a) da/a.

#include <cstddef>
#include <span>
#include <vector>

namespace poisson {

/// Nodes and weights approximating int_{-1}^{1} f(t) (1-t^2)^(lambda-1/2) dt.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lambda = 0.5;
  /// Highest polynomial degree integrated exactly, 2*size()-1.
  int degree = 1;

  std::size_t size() const noexcept { return nodes.size(); }

  template <typename F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }

  /// Sum of weights[i] * values[i]; values must be sampled at the nodes.
  double integrate_samples(std::span<const double> values) const;
};

/// Gauss rule for the weight (1-t^2)^(lambda-1/2), lambda > -1/2, from the
/// eigenvalues of the Jacobi matrix; weights are Christoffel numbers.
QuadratureRule gauss_gegenbauer(double lambda, int count);

/// Gauss-Legendre on [-1, 1] (the lambda = 1/2 rule).
QuadratureRule gauss_legendre(int count);

/// Log-uniform scales with trapezoid weights in u = log a, so that
/// sum_i weights[i] f(nodes[i]) approximates int_{a_min}^{a_max} f(a) da/a.
struct ScaleGrid {
  double a_min = 0.0;
  double a_max = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }

  template <typename F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

ScaleGrid log_scale_grid(double a_min, double a_max, int count);

/// Composite Gauss-Legendre over consecutive panels [b[i], b[i+1]].
template <typename F>
double integrate_panels(F&& f, std::span<const double> breakpoints, const QuadratureRule& legendre) {
  double sum = 0.0;
  for (std::size_t p = 0; p + 1 < breakpoints.size(); ++p) {
    const double lo = breakpoints[p];
    const double hi = breakpoints[p + 1];
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double panel = 0.0;
    for (std::size_t i = 0; i < legendre.size(); ++i) panel += legendre.weights[i] * f(mid + half * legendre.nodes[i]);
    sum += half * panel;
  }
  return sum;
}

/// Breakpoints refined geometrically toward lo: lo, lo + w, lo + 2w, lo + 4w, ...
/// up to hi, where w is the first panel width.
std::vector<double> graded_breakpoints(double lo, double hi, double first_width);

}  // namespace poisson
