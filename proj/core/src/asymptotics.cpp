#include "poisson/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "poisson/error.hpp"
#include "poisson/quadrature.hpp"
#include "poisson/wavelets.hpp"

namespace poisson {

namespace {

void check_order(int m) {
  if (m < 1) throw DomainError("wavelet order must be at least 1");
}

std::vector<double> log_points(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = count > 1 ? std::log(hi / lo) / (count - 1) : 0.0;
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  out.back() = hi;
  return out;
}

double slope(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

StatisticSeries finish(double exponent, std::vector<double> values) {
  StatisticSeries series;
  series.exponent = exponent;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  series.spread = *hi / *lo;
  series.grows_as_scale_shrinks = true;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i] > values[i - 1])) series.grows_as_scale_shrinks = false;
  series.values = std::move(values);
  return series;
}

ConvergenceSeries convergence_series(const PoissonWavelet& base, const EuclideanProfile& profile,
                                     std::span<const double> scales, std::span<const double> s_grid,
                                     Projection projection) {
  ConvergenceSeries series;
  series.projection = projection;
  const int n = profile.ctx.dimension();
  for (double a : scales) {
    const PoissonWavelet g = base.at_scale(a);
    double worst = 0.0;
    for (double s : s_grid) {
      const double value = std::pow(a, n) * g.continuation(Colatitude::from_angle(stereographic_colatitude(a * s, projection)));
      worst = std::max(worst, std::abs(value - profile(s)));
    }
    series.errors.push_back(worst);
  }
  series.monotone = true;
  for (std::size_t i = 1; i < series.errors.size(); ++i)
    if (!(series.errors[i] < series.errors[i - 1])) series.monotone = false;
  return series;
}

}  // namespace

double stereographic_colatitude(double s, Projection projection) {
  if (!(s >= 0.0)) throw DomainError("radius must be non-negative");
  return projection == Projection::half_tangent ? 2.0 * std::atan(0.5 * s) : 2.0 * std::atan(s);
}

double euclidean_measure_density(const SphereContext& ctx, double s) {
  if (!(s >= 0.0)) throw DomainError("radius must be non-negative");
  const double twice_lambda = ctx.twice_lambda();
  return 4.0 * std::pow(4.0 * s, twice_lambda) / std::pow(4.0 + s * s, twice_lambda + 1.0);
}

double euclidean_limit(const SphereContext& ctx, int m, double s) {
  check_order(m);
  if (!(s >= 0.0)) throw DomainError("radius must be non-negative");
  const double lambda = ctx.lambda();
  const double q = 1.0 + s * s;
  return std::tgamma(m + 2.0) * gegenbauer(lambda, m + 1, 1.0 / std::sqrt(q)) /
         (ctx.area() * lambda * std::pow(q, 0.5 * (m + ctx.dimension())));
}

double rescaled_wavelet(const SphereContext& ctx, int m, double a, double s, Projection projection) {
  const PoissonWavelet g(WaveletSpec(ctx, m, a));
  return std::pow(a, ctx.dimension()) *
         g.continuation(Colatitude::from_angle(stereographic_colatitude(a * s, projection)));
}

EuclideanConvergenceReport euclidean_convergence_report(const SphereContext& ctx, int m, std::span<const double> scales,
                                                        std::span<const double> s_grid) {
  check_order(m);
  if (scales.empty() || s_grid.empty()) throw DomainError("convergence report needs scales and radii");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] >= 1e-3)) throw DomainError("scales below 1e-3 are not supported");
    if (i > 0 && !(scales[i] < scales[i - 1])) throw DomainError("scales must be decreasing");
  }
  EuclideanConvergenceReport report;
  report.order = m;
  report.dimension = ctx.dimension();
  report.scales.assign(scales.begin(), scales.end());
  const EuclideanProfile profile{ctx, m};
  for (double s : s_grid) report.profile_peak = std::max(report.profile_peak, std::abs(profile(s)));

  const PoissonWavelet base(WaveletSpec(ctx, m, scales.front()));
  report.primary = convergence_series(base, profile, scales, s_grid, Projection::half_tangent);
  if (!report.primary.monotone)
    report.alternate = convergence_series(base, profile, scales, s_grid, Projection::tangent);
  if (scales.size() > 1) {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < scales.size(); ++i) {
      x.push_back(std::log(scales[i]));
      y.push_back(std::log(report.primary.errors[i]));
    }
    report.empirical_order = slope(x, y);
  }
  return report;
}

double decay_slope(const SphereContext& ctx, int m, double s_min, double s_max, int count) {
  const std::vector<double> s = log_points(s_min, s_max, count);
  std::vector<double> x, y;
  for (double v : s) {
    x.push_back(std::log(v));
    y.push_back(std::log(std::abs(euclidean_limit(ctx, m, v))));
  }
  return slope(x, y);
}

ZeroMeanReport zero_mean_check(const SphereContext& ctx, int m) {
  check_order(m);
  const EuclideanProfile profile{ctx, m};
  const double twice_lambda = ctx.twice_lambda();
  const int n = ctx.dimension();
  const QuadratureRule legendre = gauss_legendre(24);
  const double pi = std::numbers::pi;

  // s = 2 tan(theta/2) maps [0, pi) onto [0, inf), with
  // dnu = sin^{2 lambda}(theta) d theta and ds = (1 + s^2/4) d theta.
  struct Sums {
    double nu = 0.0, nu_abs = 0.0, flat = 0.0, flat_abs = 0.0;
  };
  auto integrate = [&](int panels) {
    std::vector<double> breaks(static_cast<std::size_t>(panels) + 1);
    for (int i = 0; i <= panels; ++i) breaks[static_cast<std::size_t>(i)] = pi * i / panels;
    Sums sums;
    auto value = [&](double theta, bool flat) {
      if (theta >= pi) return 0.0;
      const double s = 2.0 * std::tan(0.5 * theta);
      const double g = profile(s);
      return flat ? g * std::pow(s, n - 1) * (1.0 + 0.25 * s * s) : g * std::pow(std::sin(theta), twice_lambda);
    };
    sums.nu = integrate_panels([&](double t) { return value(t, false); }, breaks, legendre);
    sums.nu_abs = integrate_panels([&](double t) { return std::abs(value(t, false)); }, breaks, legendre);
    sums.flat = integrate_panels([&](double t) { return value(t, true); }, breaks, legendre);
    sums.flat_abs = integrate_panels([&](double t) { return std::abs(value(t, true)); }, breaks, legendre);
    return sums;
  };
  const Sums coarse = integrate(64);
  const Sums fine = integrate(128);

  ZeroMeanReport report;
  report.integral = fine.nu;
  report.absolute = fine.nu_abs;
  report.ratio = std::abs(fine.nu) / fine.nu_abs;
  report.flat_integral = fine.flat;
  report.flat_absolute = fine.flat_abs;
  report.flat_ratio = std::abs(fine.flat) / fine.flat_abs;
  report.refinement_change = std::abs(fine.nu - coarse.nu) / fine.nu_abs;
  if (report.refinement_change > 1e-6)
    throw NumericError("zero-mean quadrature did not settle (change " + format_real(report.refinement_change) + ")");

  // Mass of dnu directly in s, with the power tail past the last breakpoint.
  const double s_end = 1e4;
  const std::vector<double> s_breaks = graded_breakpoints(0.0, s_end, 1e-2);
  const double head =
      integrate_panels([&](double s) { return euclidean_measure_density(ctx, s); }, s_breaks, legendre);
  const double tail = std::pow(4.0, twice_lambda + 1.0) * std::pow(s_end, -twice_lambda - 1.0) / (twice_lambda + 1.0);
  report.measure_mass = head + tail;
  const double lambda = ctx.lambda();
  report.measure_mass_expected =
      std::sqrt(pi) * std::exp(std::lgamma(lambda + 0.5) - std::lgamma(lambda + 1.0));
  return report;
}

double envelope_exponent(const SphereContext& ctx, int m) {
  check_order(m);
  return 2.0 * ((m + 1) / 2) + ctx.twice_lambda();
}

LocalizationReport localization_report(const SphereContext& ctx, int m, const LocalizationOptions& options) {
  check_order(m);
  if (!(options.a_min >= 1e-2 && options.a_max <= 5.0 && options.a_min < options.a_max) || options.a_count < 2 ||
      options.theta_count < 2)
    throw DomainError("localization grids must satisfy 1e-2 <= a_min < a_max <= 5");
  LocalizationReport report;
  report.order = m;
  report.dimension = ctx.dimension();
  std::vector<double> scales = log_points(options.a_min, options.a_max, options.a_count);
  std::reverse(scales.begin(), scales.end());
  report.scales = scales;

  const int n = ctx.dimension();
  const double pi = std::numbers::pi;
  const double k = envelope_exponent(ctx, m);
  const double k_probe = k - options.probe_shift;
  const double e_scaling = m + n;
  const double e_probe = m + n + options.probe_shift;
  const std::vector<double> thetas = log_points(1e-4, pi, options.theta_count);

  std::vector<double> env, env_probe, sca, sca_probe, uni;
  const PoissonWavelet base(WaveletSpec(ctx, m, scales.front()));
  for (double a : scales) {
    const PoissonWavelet g = base.at_scale(a);
    const double an = std::pow(a, n);
    const double am = std::pow(a, m);
    const double ea = std::exp(a);
    double s_env = 0.0, s_uni = an * std::abs(g.continuation(Colatitude::from_angle(0.0))) * ea;
    for (double theta : thetas) {
      const double v = std::abs(g.continuation(Colatitude::from_angle(theta)));
      s_env = std::max(s_env, v * std::pow(theta, k) * ea / am);
      s_uni = std::max(s_uni, an * v * ea);
    }
    double s_sca = 0.0;
    for (double theta : log_points(1e-3, pi / a, options.theta_count)) {
      const double v = an * std::abs(g.continuation(Colatitude::from_angle(std::min(a * theta, pi))));
      s_sca = std::max(s_sca, v * std::pow(theta, e_scaling) * ea);
    }
    env.push_back(s_env);
    sca.push_back(s_sca);
    uni.push_back(s_uni);
  }

  std::vector<double> probe_scales =
      log_points(options.a_min, std::min(options.probe_a_max, options.a_max), options.a_count);
  std::reverse(probe_scales.begin(), probe_scales.end());
  report.probe_scales = probe_scales;
  for (double a : probe_scales) {
    const PoissonWavelet g = base.at_scale(a);
    const double an = std::pow(a, n);
    const double am = std::pow(a, m);
    const double ea = std::exp(a);
    const double near_end = std::min(pi, 4.0 * a);
    double s_env = 0.0, s_sca = 0.0;
    for (int i = 1; i <= options.theta_count; ++i) {
      const double theta = near_end * i / options.theta_count;
      const double v = std::abs(g.continuation(Colatitude::from_angle(theta)));
      s_env = std::max(s_env, v * std::pow(theta, k_probe) * ea / am);
    }
    for (int i = 0; i <= options.theta_count; ++i) {
      const double theta = 0.5 * pi / a * (1.0 + static_cast<double>(i) / options.theta_count);
      const double v = an * std::abs(g.continuation(Colatitude::from_angle(std::min(a * theta, pi))));
      s_sca = std::max(s_sca, v * std::pow(theta, e_probe) * ea);
    }
    env_probe.push_back(s_env);
    sca_probe.push_back(s_sca);
  }
  report.envelope = finish(k, std::move(env));
  report.envelope_probe = finish(k_probe, std::move(env_probe));
  report.scaling = finish(e_scaling, std::move(sca));
  report.scaling_probe = finish(e_probe, std::move(sca_probe));
  report.uniform = finish(0.0, std::move(uni));
  return report;
}

}  // namespace poisson
