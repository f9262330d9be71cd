#pragma once

// Truncated Gegenbauer series sum_l c_l C_l^lambda(t) with a rigorous bound
// on the discarded tail.
//
// The bound uses |C_l(t)| <= C_l(1) and assumes the majorant terms
// T_l = c_l C_l(1) have non-increasing ratios T_{l+1}/T_l from the stopping
// point on. That holds for every weight used here (polynomial in l times a
// geometric factor, with 2*lambda >= 1), and makes the tail at most
// T_{L+1} / (1 - T_{L+2}/T_{L+1}).

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "poisson/error.hpp"
#include "poisson/sphere.hpp"

namespace poisson {

struct SeriesOptions {
  /// Absolute tail target.
  double abs_tol = 0.0;
  /// Tail target relative to the sum of majorant terms seen so far (an
  /// upper bound for the value at t = 1).
  double rel_tol = 1e-14;
  int l_cap = 1'000'000;
};

struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  int l_max = 0;
};

namespace detail {

/// Geometric-tail bound after the term of degree l, given the next two
/// majorant terms. Infinite while the ratio test has not kicked in.
inline double tail_bound(double next, double after_next) {
  if (next == 0.0) return 0.0;
  const double q = after_next / next;
  if (!(q < 1.0)) return std::numeric_limits<double>::infinity();
  return next / (1.0 - q);
}

}  // namespace detail

/// Sums sum_{l>=0} weight(l) C_l^lambda(t) adaptively. weight(l) must be
/// non-negative and follow the ratio assumption above.
template <typename Weight>
SeriesValue sum_gegenbauer_series(double lambda, double t, Weight&& weight, const SeriesOptions& options = {}) {
  t = clamp_cosine(t);
  SeriesValue result;
  double c_prev = 0.0;
  double c_curr = 1.0;  // C_0
  double at_one = 1.0;  // C_l(1)
  double majorant_sum = 0.0;
  double sum = 0.0;
  double w_next = weight(0);
  for (int l = 0; l <= options.l_cap; ++l) {
    const double w = w_next;
    sum += w * c_curr;
    majorant_sum += w * at_one;

    const double at_one_next = at_one * (l + 2.0 * lambda) / (l + 1.0);
    const double at_one_after = at_one_next * (l + 1.0 + 2.0 * lambda) / (l + 2.0);
    w_next = weight(l + 1);
    const double bound = detail::tail_bound(w_next * at_one_next, weight(l + 2) * at_one_after);
    const double target = std::max(options.abs_tol, options.rel_tol * majorant_sum);
    if (bound <= target && l >= 1) {
      result.value = sum;
      result.tail_bound = bound;
      result.l_max = l;
      return result;
    }

    const double c_next = (l == 0) ? 2.0 * lambda * t
                                   : (2.0 * (l + lambda) * t * c_curr - (l + 2.0 * lambda - 1.0) * c_prev) / (l + 1.0);
    c_prev = c_curr;
    c_curr = c_next;
    at_one = at_one_next;
  }
  throw TruncationError("Gegenbauer series did not reach its tolerance within " + std::to_string(options.l_cap) +
                            " terms",
                        static_cast<std::size_t>(options.l_cap) * 2);
}

/// Sums exactly l = 0..l_max and reports the tail bound; throws
/// TruncationError with a suggested l_max when the bound exceeds tol.
template <typename Weight>
SeriesValue sum_gegenbauer_series_fixed(double lambda, double t, Weight&& weight, int l_max, double tol) {
  t = clamp_cosine(t);
  SeriesValue result;
  result.l_max = l_max;
  double c_prev = 0.0;
  double c_curr = 1.0;
  double at_one = 1.0;
  for (int l = 0; l <= l_max; ++l) {
    result.value += weight(l) * c_curr;
    const double c_next = (l == 0) ? 2.0 * lambda * t
                                   : (2.0 * (l + lambda) * t * c_curr - (l + 2.0 * lambda - 1.0) * c_prev) / (l + 1.0);
    c_prev = c_curr;
    c_curr = c_next;
    at_one *= (l + 2.0 * lambda) / (l + 1.0);
  }
  const double at_one_after = at_one * (l_max + 1.0 + 2.0 * lambda) / (l_max + 2.0);
  result.tail_bound = detail::tail_bound(weight(l_max + 1) * at_one, weight(l_max + 2) * at_one_after);
  if (result.tail_bound > tol) {
    // Walk the majorant forward to find where the bound would be met.
    int suggested = l_max;
    double a1 = at_one;
    double a2 = at_one_after;
    while (suggested < 100'000'000) {
      ++suggested;
      a1 = a2;
      a2 = a1 * (suggested + 1.0 + 2.0 * lambda) / (suggested + 2.0);
      if (detail::tail_bound(weight(suggested + 1) * a1, weight(suggested + 2) * a2) <= tol) break;
    }
    throw TruncationError("tail bound " + format_real(result.tail_bound) + " exceeds tolerance " +
                              format_real(tol) + " at l_max " + std::to_string(l_max),
                          static_cast<std::size_t>(suggested));
  }
  return result;
}

}  // namespace poisson
