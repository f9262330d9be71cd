#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "poisson/asymptotics.hpp"
#include "poisson/error.hpp"

using namespace poisson;

TEST(Stereographic, Conventions) {
  EXPECT_NEAR(stereographic_colatitude(2.0), std::numbers::pi / 2.0, 1e-15);
  EXPECT_NEAR(stereographic_colatitude(1.0, Projection::tangent), std::numbers::pi / 2.0, 1e-15);
  EXPECT_EQ(stereographic_colatitude(0.0), 0.0);
}

TEST(EuclideanLimit, OrderOneAtOrigin) {
  // (m+1)! C_2(1) / (Sigma lambda) with C_2(1) = lambda (2 lambda + 1) gives 2n / Sigma_n.
  for (int n : {2, 3, 4, 7}) {
    const SphereContext ctx(n);
    EXPECT_NEAR(euclidean_limit(ctx, 1, 0.0), 2.0 * n / ctx.area(), 1e-14);
  }
}

TEST(EuclideanLimit, ClosedFormTwoSphere) {
  // n = 2, m = 1: 2! P_2(u) / (4 pi * 1/2) / (1 + s^2)^{3/2}, u = 1/sqrt(1+s^2).
  const SphereContext ctx(2);
  for (double s : {0.0, 0.5, 3.0}) {
    const double u = 1.0 / std::sqrt(1.0 + s * s);
    const double expected = (3.0 * u * u - 1.0) / (2.0 * std::numbers::pi) / std::pow(1.0 + s * s, 1.5);
    EXPECT_NEAR(euclidean_limit(ctx, 1, s), expected, 1e-15);
  }
}

TEST(EuclideanLimit, RescaledWaveletConverges) {
  const SphereContext ctx(3);
  double previous = 1e300;
  for (double a : {0.04, 0.01, 0.0025}) {
    double worst = 0.0;
    for (double s : {0.0, 0.5, 1.0, 2.0, 5.0})
      worst = std::max(worst, std::abs(rescaled_wavelet(ctx, 2, a, s) - euclidean_limit(ctx, 2, s)));
    EXPECT_LT(worst, previous);
    previous = worst;
  }
  EXPECT_LT(previous, 1e-2 * euclidean_limit(ctx, 2, 0.0));
}

TEST(EuclideanLimit, DecayDegree) {
  for (int n : {2, 3})
    for (int m : {1, 2, 3}) {
      const EuclideanProfile profile{SphereContext(n), m};
      EXPECT_EQ(profile.decay_degree(), m + n + (m + 1) % 2);
      EXPECT_NEAR(decay_slope(profile.ctx, m), -profile.decay_degree(), 0.05);
    }
}

TEST(EuclideanLimit, ConvergenceReport) {
  const SphereContext ctx(2);
  const std::vector<double> scales{0.04, 0.02, 0.01};
  std::vector<double> s_grid;
  for (int i = 0; i <= 40; ++i) s_grid.push_back(0.5 * i);
  const EuclideanConvergenceReport report = euclidean_convergence_report(ctx, 1, scales, s_grid);
  EXPECT_TRUE(report.primary.monotone);
  EXPECT_FALSE(report.alternate.has_value());
  EXPECT_NEAR(report.empirical_order, 1.0, 0.2);
  const std::vector<double> increasing{0.01, 0.02};
  EXPECT_THROW(euclidean_convergence_report(ctx, 1, increasing, s_grid), DomainError);
}

TEST(EuclideanMeasure, MassAndPullback) {
  const SphereContext ctx(3);
  const ZeroMeanReport report = zero_mean_check(ctx, 1);
  EXPECT_NEAR(report.measure_mass / report.measure_mass_expected, 1.0, 1e-10);
  EXPECT_LT(report.flat_ratio, 1e-12);
}

// The limit profile does not integrate to zero against dnu; it does
// against the flat measure s^{n-1} ds. Pinned here as a known property.
TEST(EuclideanMeasure, ZeroMeanHoldsOnlyForFlatMeasure) {
  for (int n : {2, 3})
    for (int m : {1, 2, 3}) {
      const ZeroMeanReport report = zero_mean_check(SphereContext(n), m);
      EXPECT_GT(report.ratio, 0.1) << "n=" << n << " m=" << m;
      EXPECT_LT(report.flat_ratio, 1e-12) << "n=" << n << " m=" << m;
    }
}

TEST(Localization, EnvelopeExponent) {
  EXPECT_EQ(envelope_exponent(SphereContext(2), 1), 3.0);
  EXPECT_EQ(envelope_exponent(SphereContext(2), 2), 3.0);
  EXPECT_EQ(envelope_exponent(SphereContext(3), 3), 6.0);
}

TEST(Localization, OddOrderEnvelopeIsStable) {
  const LocalizationReport report = localization_report(SphereContext(2), 1);
  EXPECT_LT(report.envelope.spread, 10.0);
  EXPECT_LT(report.uniform.spread, 10.0);
  EXPECT_LT(report.scaling.spread, 10.0);
  EXPECT_TRUE(report.envelope_probe.grows_as_scale_shrinks);
  EXPECT_TRUE(report.scaling_probe.grows_as_scale_shrinks);
  ASSERT_EQ(report.scales.size(), 13u);
  EXPECT_GT(report.scales.front(), report.scales.back());
}

// For even m the exponent 2[(m+1)/2] + 2 lambda is one short of m + n and
// the envelope statistic grows like 1/a.
TEST(Localization, EvenOrderEnvelopeGrows) {
  const LocalizationReport report = localization_report(SphereContext(2), 2);
  EXPECT_GT(report.envelope.spread, 10.0);
  // Over the last decade of scales (a from 0.1 to 0.01) the value grows about tenfold.
  const std::vector<double>& v = report.envelope.values;
  ASSERT_EQ(v.size(), 13u);
  EXPECT_GT(v[12] / v[6], 5.0);
  for (std::size_t i = 7; i < v.size(); ++i) EXPECT_GT(v[i], v[i - 1]);
}
