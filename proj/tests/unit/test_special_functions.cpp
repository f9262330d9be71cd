#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "poisson/error.hpp"
#include "poisson/gegenbauer_series.hpp"
#include "poisson/sphere.hpp"

using namespace poisson;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(SphereContext, ExactLambda) {
  const SphereContext ctx(4);
  EXPECT_EQ(ctx.dimension(), 4);
  EXPECT_EQ(ctx.twice_lambda(), 3);
  EXPECT_DOUBLE_EQ(ctx.lambda(), 1.5);
  EXPECT_NEAR(ctx.area(), 8.0 * pi * pi / 3.0, 1e-13);
  EXPECT_THROW(SphereContext(1), InvalidContext);
}

TEST(SphereArea, LowDimensions) {
  EXPECT_DOUBLE_EQ(sphere_area(0), 2.0);
  EXPECT_NEAR(sphere_area(1), 2.0 * pi, 1e-14);
  EXPECT_NEAR(sphere_area(2), 4.0 * pi, 1e-14);
  EXPECT_NEAR(sphere_area(3), 2.0 * pi * pi, 1e-13);
  EXPECT_THROW(sphere_area(-1), InvalidContext);
}

TEST(Gegenbauer, LowDegreesByHand) {
  for (double lambda : {0.5, 1.0, 1.5, 2.0, 3.5})
    for (double t : {-1.0, -0.4, 0.0, 0.3, 0.9, 1.0}) {
      EXPECT_DOUBLE_EQ(gegenbauer(lambda, 0, t), 1.0);
      EXPECT_NEAR(gegenbauer(lambda, 1, t), 2.0 * lambda * t, 1e-15);
      EXPECT_NEAR(gegenbauer(lambda, 2, t), 2.0 * lambda * (lambda + 1.0) * t * t - lambda, 1e-13);
    }
}

TEST(Gegenbauer, LegendreAndChebyshevSecondKind) {
  // lambda = 1/2 gives Legendre; lambda = 1 gives U_l(cos x) = sin((l+1)x)/sin x.
  const double t = 0.37;
  EXPECT_NEAR(gegenbauer(0.5, 3, t), 0.5 * (5.0 * t * t * t - 3.0 * t), 1e-15);
  const double x = std::acos(t);
  for (int l = 0; l <= 30; ++l) EXPECT_NEAR(gegenbauer(1.0, l, t), std::sin((l + 1) * x) / std::sin(x), 1e-12);
}

TEST(Gegenbauer, ValueAtOne) {
  for (double lambda : {0.5, 1.0, 2.5})
    for (int l = 0; l <= 25; ++l)
      EXPECT_NEAR(gegenbauer(lambda, l, 1.0) / gegenbauer_at_one(lambda, l), 1.0, 1e-13);
  EXPECT_DOUBLE_EQ(gegenbauer_at_one(1.0, 4), 5.0);
}

TEST(Gegenbauer, SequenceMatchesPointwise) {
  std::vector<double> out(15);
  gegenbauer_sequence(1.5, -0.2, out);
  for (int l = 0; l < 15; ++l) EXPECT_NEAR(out[l], gegenbauer(1.5, l, -0.2), 1e-13);
}

TEST(Gegenbauer, ExplicitSumAgreesWithRecurrence) {
  for (double lambda : {0.5, 1.0, 2.0})
    for (int l = 0; l <= 20; ++l)
      EXPECT_NEAR(gegenbauer_explicit(lambda, l, 0.61), gegenbauer(lambda, l, 0.61), 1e-10 * gegenbauer_at_one(lambda, l));
}

TEST(Gegenbauer, NormSquaredLegendre) {
  for (int l = 0; l <= 10; ++l) EXPECT_NEAR(gegenbauer_norm_squared(0.5, l), 2.0 / (2 * l + 1), 1e-14);
  // lambda = 1: int U_l^2 sqrt(1-t^2) dt = pi/2.
  for (int l = 0; l <= 10; ++l) EXPECT_NEAR(gegenbauer_norm_squared(1.0, l), pi / 2.0, 1e-13);
}

TEST(Gegenbauer, WeightMass) {
  EXPECT_NEAR(gegenbauer_weight_mass(0.5), 2.0, 1e-15);
  EXPECT_NEAR(gegenbauer_weight_mass(1.0), pi / 2.0, 1e-15);
}

TEST(Gegenbauer, Errors) {
  EXPECT_THROW(gegenbauer(1.0, -1, 0.0), DomainError);
  EXPECT_THROW(gegenbauer(0.0, 2, 0.0), InvalidContext);
  EXPECT_THROW(gegenbauer(1.0, 2, 1.5), DomainError);
}

TEST(ClampCosine, Tolerance) {
  EXPECT_EQ(clamp_cosine(1.0 + 1e-13), 1.0);
  EXPECT_EQ(clamp_cosine(-1.0 - 1e-13), -1.0);
  EXPECT_EQ(clamp_cosine(0.25), 0.25);
  EXPECT_THROW(clamp_cosine(1.0 + 1e-9), DomainError);
}

TEST(Colatitude, SmallAngleWithoutCancellation) {
  const Colatitude c = Colatitude::from_angle(1e-8);
  EXPECT_NEAR(c.one_minus_t / 5e-17, 1.0, 1e-8);
  const Colatitude d = Colatitude::from_cosine(-1.0);
  EXPECT_DOUBLE_EQ(d.one_minus_t, 2.0);
}

TEST(ReproducingKernel, TwoSphereIsScaledLegendre) {
  const SphereContext ctx(2);
  for (int l = 0; l <= 8; ++l)
    EXPECT_NEAR(reproducing_kernel(ctx, l, 0.4), (2 * l + 1) * gegenbauer(0.5, l, 0.4), 1e-13);
}

TEST(HarmonicDimension, KnownCounts) {
  for (int l = 0; l <= 20; ++l) {
    EXPECT_EQ(harmonic_dimension(2, l), static_cast<std::uint64_t>(2 * l + 1));
    EXPECT_EQ(harmonic_dimension(3, l), static_cast<std::uint64_t>((l + 1) * (l + 1)));
  }
  // S^4: (2l+3)(l+1)(l+2)/6.
  EXPECT_EQ(harmonic_dimension(4, 5), 13u * 6u * 7u / 6u);
  EXPECT_THROW(harmonic_dimension(200, 400), OverflowError);
  EXPECT_THROW(harmonic_dimension(1, 3), InvalidContext);
}

TEST(GegenbauerSeries, GeneratingFunction) {
  for (double lambda : {0.5, 1.5})
    for (double r : {0.2, 0.8})
      for (double t : {-1.0, 0.0, 0.7, 1.0}) {
        const SeriesValue v = sum_gegenbauer_series(lambda, t, [&](int l) { return std::pow(r, l); });
        const double exact = std::pow(1.0 - 2.0 * t * r + r * r, -lambda);
        EXPECT_LE(std::abs(v.value - exact), v.tail_bound + 1e-13 * exact);
      }
}

TEST(GegenbauerSeries, FixedTruncationSuggestsSufficientDegree) {
  auto weight = [](int l) { return std::pow(0.9, l); };
  try {
    sum_gegenbauer_series_fixed(1.0, 0.5, weight, 10, 1e-12);
    FAIL() << "expected TruncationError";
  } catch (const TruncationError& e) {
    const int suggested = static_cast<int>(e.suggested_l_max());
    EXPECT_GT(suggested, 10);
    const SeriesValue v = sum_gegenbauer_series_fixed(1.0, 0.5, weight, suggested, 1e-12);
    EXPECT_NEAR(v.value, std::pow(1.0 - 0.9 + 0.81, -1.0), 1e-11);
  }
}
