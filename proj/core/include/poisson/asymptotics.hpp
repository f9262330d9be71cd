#pragma once

// Euclidean limit of Poisson wavelets and numerical probes of their space
// localization.

#include <optional>
#include <span>
#include <vector>

#include "poisson/sphere.hpp"

namespace poisson {

/// Inverse stereographic projection conventions, as colatitude of |xi| = s.
enum class Projection {
  half_tangent,  // theta = 2 arctan(s/2), tan(theta/2) = s/2
  tangent,       // theta = 2 arctan(s),   tan(theta/2) = s
};

double stereographic_colatitude(double s, Projection projection = Projection::half_tangent);

/// Density of the measure dnu(s) = 4 (4s)^{2 lambda} / (4 + s^2)^{2 lambda + 1} ds,
/// the pullback of sin^{2 lambda}(theta) d theta under the half-tangent map.
double euclidean_measure_density(const SphereContext& ctx, double s);

/// g^m(s) = (m+1)! C_{m+1}(1/sqrt(1+s^2)) / (Sigma_n lambda (1+s^2)^{(m+n)/2}).
double euclidean_limit(const SphereContext& ctx, int m, double s);

struct EuclideanProfile {
  SphereContext ctx;
  int order = 1;

  double operator()(double s) const { return euclidean_limit(ctx, order, s); }
  /// m + n + ((m+1) mod 2).
  int decay_degree() const noexcept { return order + ctx.dimension() + (order + 1) % 2; }
};

/// a^n g_a^m(cos theta(a s)) with the raw wavelet.
double rescaled_wavelet(const SphereContext& ctx, int m, double a, double s,
                        Projection projection = Projection::half_tangent);

struct ConvergenceSeries {
  Projection projection = Projection::half_tangent;
  /// max_s |a^n g_a^m(cos theta(a s)) - g^m(s)| per scale.
  std::vector<double> errors;
  bool monotone = false;
};

struct EuclideanConvergenceReport {
  int order = 1;
  int dimension = 2;
  std::vector<double> scales;
  double profile_peak = 0.0;  // max_s |g^m(s)| on the grid
  ConvergenceSeries primary;
  /// Filled only when the primary convention fails to decrease monotonically.
  std::optional<ConvergenceSeries> alternate;
  /// Least-squares slope of log(error) against log(a) for the primary convention.
  double empirical_order = 0.0;
};

/// scales must be decreasing. Evaluation uses the source expansion, which
/// stays well conditioned as a -> 0.
EuclideanConvergenceReport euclidean_convergence_report(const SphereContext& ctx, int m, std::span<const double> scales,
                                                        std::span<const double> s_grid);

/// Least-squares slope of log|g^m(s)| against log s on log-spaced s in [s_min, s_max].
double decay_slope(const SphereContext& ctx, int m, double s_min = 1e2, double s_max = 1e4, int count = 64);

struct ZeroMeanReport {
  /// int_0^inf g^m(s) dnu(s) and int |g^m| dnu.
  double integral = 0.0;
  double absolute = 0.0;
  double ratio = 0.0;
  /// The same with the flat radial measure s^{n-1} ds of R^n.
  double flat_integral = 0.0;
  double flat_absolute = 0.0;
  double flat_ratio = 0.0;
  /// int_0^inf dnu computed in s, and its closed value sqrt(pi) Gamma(lambda+1/2)/Gamma(lambda+1).
  double measure_mass = 0.0;
  double measure_mass_expected = 0.0;
  /// Change of the dnu integral under panel refinement.
  double refinement_change = 0.0;
};

/// Throws NumericError when the quadrature does not settle.
ZeroMeanReport zero_mean_check(const SphereContext& ctx, int m);

struct StatisticSeries {
  double exponent = 0.0;
  std::vector<double> values;  // one per scale
  double spread = 0.0;         // max / min over the scales
  /// True when values strictly increase as the scale decreases.
  bool grows_as_scale_shrinks = false;
};

struct LocalizationOptions {
  double a_min = 0.01;
  double a_max = 1.0;
  int a_count = 13;
  int theta_count = 400;
  double probe_shift = 0.25;
  /// Minimality is an a -> 0 statement; probes run on [a_min, probe_a_max].
  double probe_a_max = 0.05;
};

struct LocalizationReport {
  int order = 1;
  int dimension = 2;
  std::vector<double> scales;        // decreasing
  std::vector<double> probe_scales;  // decreasing
  /// (i) sup_theta |g_a^m(cos theta)| theta^k e^a / a^m, k = 2[(m+1)/2] + 2 lambda.
  StatisticSeries envelope;
  /// (i) with k - probe_shift, on the near field theta in (0, min(pi, 4a)]
  /// where the bound is tight.
  StatisticSeries envelope_probe;
  /// (ii) sup_{theta in (0, pi/a]} |a^n g_a^m(cos(a theta))| theta^{m+n} e^a.
  StatisticSeries scaling;
  /// (ii) with exponent m + n + probe_shift, on the far field
  /// theta in [pi/(2a), pi/a].
  StatisticSeries scaling_probe;
  /// (iii) sup_theta a^n |g_a^m(cos theta)| e^a.
  StatisticSeries uniform;
};

/// Localization exponent of the envelope bound, 2[(m+1)/2] + 2 lambda.
double envelope_exponent(const SphereContext& ctx, int m);

LocalizationReport localization_report(const SphereContext& ctx, int m, const LocalizationOptions& options = {});

}  // namespace poisson
