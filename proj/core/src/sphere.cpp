#include "poisson/sphere.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "poisson/error.hpp"

namespace poisson {

namespace {

void check_order(double lambda) {
  if (!(lambda > 0.0)) {
    throw InvalidContext("Gegenbauer order must be positive, got " + format_real(lambda));
  }
}

void check_degree(int l) {
  if (l < 0) {
    throw DomainError("Gegenbauer degree must be non-negative, got " + std::to_string(l));
  }
}

}  // namespace

SphereContext::SphereContext(int n) : n_(n), area_(0.0) {
  if (n < 2) {
    throw InvalidContext("sphere dimension must be at least 2, got " + std::to_string(n));
  }
  area_ = sphere_area(n);
}

Colatitude Colatitude::from_angle(double theta) {
  const double half = std::sin(0.5 * theta);
  return {std::cos(theta), 2.0 * half * half};
}

Colatitude Colatitude::from_cosine(double t) {
  t = clamp_cosine(t);
  return {t, 1.0 - t};
}

double sphere_area(int n) {
  if (n < 0) {
    throw InvalidContext("sphere dimension must be non-negative, got " + std::to_string(n));
  }
  const double half = 0.5 * (n + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double gegenbauer_weight_mass(double lambda) {
  return std::sqrt(std::numbers::pi) * std::exp(std::lgamma(lambda + 0.5) - std::lgamma(lambda + 1.0));
}

double clamp_cosine(double t) {
  constexpr double slack = 1e-12;
  if (std::abs(t) <= 1.0) return t;
  if (std::abs(t) - 1.0 <= slack) return t > 0 ? 1.0 : -1.0;
  throw DomainError("cosine outside [-1, 1]: " + format_real(t));
}

double gegenbauer(double lambda, int l, double t) {
  check_order(lambda);
  check_degree(l);
  t = clamp_cosine(t);
  if (l == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * lambda * t;
  for (int k = 2; k <= l; ++k) {
    const double next = (2.0 * (k + lambda - 1.0) * t * curr - (k + 2.0 * lambda - 2.0) * prev) / k;
    prev = curr;
    curr = next;
  }
  return curr;
}

double gegenbauer(const SphereContext& ctx, int l, double t) { return gegenbauer(ctx.lambda(), l, t); }

void gegenbauer_sequence(double lambda, double t, std::span<double> out) {
  check_order(lambda);
  t = clamp_cosine(t);
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = 2.0 * lambda * t;
  for (std::size_t k = 2; k < out.size(); ++k) {
    const double kk = static_cast<double>(k);
    out[k] = (2.0 * (kk + lambda - 1.0) * t * out[k - 1] - (kk + 2.0 * lambda - 2.0) * out[k - 2]) / kk;
  }
}

double gegenbauer_explicit(double lambda, int l, double t) {
  check_order(lambda);
  check_degree(l);
  t = clamp_cosine(t);
  // sum_k (-1)^k (lambda)_{l-k} / (k! (l-2k)!) (2t)^{l-2k}, in 50 digits so the
  // alternating terms cancel without loss.
  using Wide = boost::multiprecision::cpp_bin_float_50;
  const Wide lam = lambda;
  const Wide x = Wide(2) * Wide(t);
  Wide sum = 0;
  for (int k = 0; k <= l / 2; ++k) {
    Wide term = 1;
    for (int i = 0; i < l - k; ++i) term *= lam + i;
    for (int i = 2; i <= k; ++i) term /= i;
    for (int i = 2; i <= l - 2 * k; ++i) term /= i;
    for (int i = 0; i < l - 2 * k; ++i) term *= x;
    sum += (k % 2 == 0) ? term : Wide(-term);
  }
  return static_cast<double>(sum);
}

double gegenbauer_at_one(double lambda, int l) {
  check_order(lambda);
  check_degree(l);
  return std::exp(std::lgamma(l + 2.0 * lambda) - std::lgamma(2.0 * lambda) - std::lgamma(l + 1.0));
}

double gegenbauer_norm_squared(double lambda, int l) {
  check_order(lambda);
  check_degree(l);
  // pi 2^(1-2 lambda) Gamma(l + 2 lambda) / (l! (l + lambda) Gamma(lambda)^2)
  const double log_value = std::log(std::numbers::pi) + (1.0 - 2.0 * lambda) * std::log(2.0) +
                           std::lgamma(l + 2.0 * lambda) - std::lgamma(l + 1.0) - std::log(l + lambda) -
                           2.0 * std::lgamma(lambda);
  return std::exp(log_value);
}

double reproducing_kernel(const SphereContext& ctx, int l, double t) {
  const double lambda = ctx.lambda();
  return (lambda + l) / lambda * gegenbauer(lambda, l, t);
}

std::uint64_t harmonic_dimension(int n, int l) {
  if (n < 2) throw InvalidContext("sphere dimension must be at least 2, got " + std::to_string(n));
  check_degree(l);
  using boost::multiprecision::cpp_int;
  // (n+2l-1) (n+l-2)! / ((n-1)! l!) = (n+2l-1)/(n-1) * binom(n+l-2, l)
  cpp_int binom = 1;
  for (int i = 1; i <= l; ++i) {
    binom *= (n - 2 + i);
    binom /= i;
  }
  cpp_int value = binom * (n + 2 * l - 1);
  value /= (n - 1);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw OverflowError("harmonic_dimension(" + std::to_string(n) + ", " + std::to_string(l) +
                        ") does not fit 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

}  // namespace poisson
