#include <gtest/gtest.h>

#include "poisson/error.hpp"
#include "poisson/parallel.hpp"
#include "poisson/verify.hpp"

using namespace poisson;

TEST(Verify, FastSuitesPass) {
  VerifyOptions options;
  options.fast = true;
  options.dimensions = {2, 3};
  options.orders = {1, 2};
  options.threads = 2;
  const std::vector<SuiteResult> results = run_all_suites(options);
  ASSERT_EQ(results.size(), suite_names().size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    EXPECT_EQ(results[i].module, suite_names()[i]);
    for (const CheckResult& c : results[i].checks)
      EXPECT_TRUE(c.passed) << results[i].module << "/" << c.name << " measured " << c.measured << " > " << c.tolerance;
  }
}

TEST(Verify, DeterministicAcrossThreadCounts) {
  VerifyOptions options;
  options.fast = true;
  options.dimensions = {2};
  options.orders = {1};
  options.threads = 1;
  const std::vector<SuiteResult> one = run_all_suites(options);
  options.threads = 4;
  const std::vector<SuiteResult> four = run_all_suites(options);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    ASSERT_EQ(one[i].checks.size(), four[i].checks.size());
    for (std::size_t j = 0; j < one[i].checks.size(); ++j)
      EXPECT_EQ(one[i].checks[j].measured, four[i].checks[j].measured) << one[i].checks[j].name;
  }
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope", VerifyOptions{}), DomainError); }

TEST(Verify, UniformThetas) {
  const std::vector<double> t = uniform_thetas(5);
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t.front(), 0.0);
  EXPECT_NEAR(t.back(), 3.141592653589793, 1e-15);
  EXPECT_THROW(uniform_thetas(1), DomainError);
}

TEST(Verify, SphereIntegralOfWaveletVanishes) {
  const PoissonWavelet g(WaveletSpec(SphereContext(3), 2, 0.2));
  const SphereIntegral integral = wavelet_sphere_integral(g);
  EXPECT_LT(std::abs(integral.integral), 1e-10);
  EXPECT_GT(integral.absolute, 0.1);
}

TEST(Parallel, EachIndexOnceAndExceptionsPropagate) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 8, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                 if (i == 7) throw NumericError("boom");
               }),
               NumericError);
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}
