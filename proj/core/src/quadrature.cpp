#include "poisson/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "poisson/error.hpp"
#include "poisson/sphere.hpp"

namespace poisson {

double QuadratureRule::integrate_samples(std::span<const double> values) const {
  if (values.size() != nodes.size()) {
    throw DomainError("sample count " + std::to_string(values.size()) + " does not match rule size " +
                      std::to_string(nodes.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += weights[i] * values[i];
  return sum;
}

QuadratureRule gauss_gegenbauer(double lambda, int count) {
  if (!(lambda > -0.5)) throw DomainError("Gegenbauer weight requires lambda > -1/2");
  if (count < 1) throw DomainError("quadrature rule needs at least one node");

  // Monic recurrence p_{k+1} = t p_k - beta_k p_{k-1} for the symmetric
  // Jacobi weight with exponent alpha = lambda - 1/2.
  const double alpha = lambda - 0.5;
  const auto n = static_cast<Eigen::Index>(count);
  Eigen::VectorXd beta(n);
  beta(0) = 0.0;
  for (Eigen::Index k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    beta(k) = (k == 1) ? 1.0 / (2.0 * alpha + 3.0)
                       : kk * (kk + 2.0 * alpha) / ((2.0 * kk + 2.0 * alpha + 1.0) * (2.0 * kk + 2.0 * alpha - 1.0));
  }

  QuadratureRule rule;
  rule.lambda = lambda;
  rule.degree = 2 * count - 1;
  rule.nodes.resize(count);
  rule.weights.resize(count);

  if (count == 1) {
    rule.nodes[0] = 0.0;
  } else {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub = beta.tail(n - 1).cwiseSqrt();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw NumericError("Jacobi matrix eigen-solve failed for " + std::to_string(count) + " nodes");
    }
    const Eigen::VectorXd& eig = solver.eigenvalues();
    for (int i = 0; i < count; ++i) rule.nodes[i] = eig(i);
    // The weight is even, so the rule is symmetric.
    for (int i = 0; i < count / 2; ++i) {
      const double x = 0.5 * (rule.nodes[count - 1 - i] - rule.nodes[i]);
      rule.nodes[i] = -x;
      rule.nodes[count - 1 - i] = x;
    }
    if (count % 2 == 1) rule.nodes[count / 2] = 0.0;
  }

  // Newton-polish the eigenvalues on p_N and take Christoffel numbers
  // w_i = 1 / sum_k p_k(x_i)^2 (orthonormal p_k), both in long double.
  const long double mass = gegenbauer_weight_mass(lambda);
  std::vector<long double> root(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) root[static_cast<std::size_t>(k)] = std::sqrt(static_cast<long double>(beta(k)));
  auto evaluate = [&](long double x, long double& value, long double& derivative, long double& norm) {
    long double p_prev = 0.0L, p = 1.0L / std::sqrt(mass);
    long double d_prev = 0.0L, d = 0.0L;
    norm = p * p;
    for (Eigen::Index k = 1; k <= n; ++k) {
      const long double b = k < n ? root[static_cast<std::size_t>(k)] : std::sqrt(static_cast<long double>(
                                                                             k * (k + 2.0 * alpha) /
                                                                             ((2.0 * k + 2.0 * alpha + 1.0) * (2.0 * k + 2.0 * alpha - 1.0))));
      const long double b_prev = k > 1 ? root[static_cast<std::size_t>(k - 1)] : 0.0L;
      const long double p_next = (x * p - b_prev * p_prev) / b;
      const long double d_next = (p + x * d - b_prev * d_prev) / b;
      p_prev = p;
      p = p_next;
      d_prev = d;
      d = d_next;
      if (k < n) norm += p * p;
    }
    value = p;
    derivative = d;
  };
  for (int i = (count + 1) / 2; i < count; ++i) {
    long double x = rule.nodes[i];
    long double value, derivative, norm;
    for (int it = 0; it < 2; ++it) {
      evaluate(x, value, derivative, norm);
      if (derivative != 0.0L) x -= value / derivative;
    }
    rule.nodes[i] = static_cast<double>(x);
    rule.nodes[count - 1 - i] = -rule.nodes[i];
  }
  for (int i = 0; i < count; ++i) {
    long double value, derivative, norm;
    evaluate(rule.nodes[i], value, derivative, norm);
    rule.weights[i] = static_cast<double>(1.0L / norm);
  }
  return rule;
}

QuadratureRule gauss_legendre(int count) { return gauss_gegenbauer(0.5, count); }

ScaleGrid log_scale_grid(double a_min, double a_max, int count) {
  if (!(a_min > 0.0) || !(a_max > a_min)) throw DomainError("scale grid needs 0 < a_min < a_max");
  if (count < 2) throw DomainError("scale grid needs at least two points");

  ScaleGrid grid;
  grid.a_min = a_min;
  grid.a_max = a_max;
  grid.nodes.resize(count);
  grid.weights.resize(count);
  const double span = std::log(a_max / a_min);
  const double h = span / (count - 1);
  for (int i = 0; i < count; ++i) {
    grid.nodes[i] = a_min * std::exp(span * i / (count - 1));
    grid.weights[i] = (i == 0 || i == count - 1) ? 0.5 * h : h;
  }
  grid.nodes.back() = a_max;
  return grid;
}

std::vector<double> graded_breakpoints(double lo, double hi, double first_width) {
  if (!(hi > lo) || !(first_width > 0.0)) throw DomainError("graded breakpoints need lo < hi and a positive width");
  std::vector<double> points{lo};
  double width = first_width;
  double x = lo;
  while (x + width < hi) {
    x += width;
    points.push_back(x);
    width = x - lo;
  }
  points.push_back(hi);
  return points;
}

}  // namespace poisson
