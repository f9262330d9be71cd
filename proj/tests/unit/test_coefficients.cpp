#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "poisson/coefficients.hpp"
#include "poisson/wavelets.hpp"

namespace {

using poisson::BigInt;

// Stirling numbers of the second kind from the inclusion-exclusion sum.
BigInt stirling2(int m, int l) {
  BigInt sum = 0;
  BigInt binom = 1;
  for (int i = 0; i <= l; ++i) {
    BigInt power = 1;
    for (int e = 0; e < m; ++e) power *= i;
    sum += ((l - i) % 2 == 0 ? 1 : -1) * binom * power;
    binom = binom * (l - i) / (i + 1);
  }
  BigInt factorial = 1;
  for (int i = 2; i <= l; ++i) factorial *= i;
  return sum / factorial;
}

using Row = std::vector<long long>;

// a_j^{m,k} for one dimension through the index recursion in b_j, c_j, with
// the boundary terms added separately from the generic ones.
std::vector<Row> index_recursion(int m_target, int n) {
  const long long tl = n - 1;  // 2 lambda
  std::vector<Row> a{{-(n + 3LL), n - 1LL}, {n + 1LL, -(n - 3LL)}};
  for (int m = 1; m < m_target; ++m) {
    auto get = [&](int k, int j) -> long long {
      if (k < 0 || k > m || j < 0 || j >= static_cast<int>(a[k].size())) return 0;
      return a[k][j];
    };
    std::vector<Row> next(m + 2);
    for (int k = 0; k <= m + 1; ++k) {
      const int h = k / 2;
      const int top = m + 1 - h;
      Row b(top + 1, 0), c(top + 1, 0);
      if (k % 2 == 0) {
        for (int j = 0; j <= m - h; ++j) b[j] += 2 * (j + 1) * get(k, j) + (2 * j - tl - 2 * m - 2) * get(k, j - 1);
        b[top] += -(tl + k) * get(k, m - h);
        for (int j = 0; j <= top; ++j) c[j] += (tl + 2 * m - 4 * j) * get(k - 1, j);
      } else {
        for (int j = 0; j <= m - h; ++j) b[j] += (2 * j + 1) * get(k, j) + (2 * j - tl - 2 * m - 3) * get(k, j - 1);
        b[top] += -(tl + k) * get(k, m - h);
        for (int j = 1; j <= top; ++j) c[j] += (tl + 2 * m - 4 * j + 2) * get(k - 1, j - 1);
      }
      next[k].resize(top + 1);
      for (int j = 0; j <= top; ++j) next[k][j] = b[j] + c[j];
    }
    a = std::move(next);
  }
  return a;
}

}  // namespace

TEST(AlphaTable, MatchesStirlingNumbers) {
  const poisson::AlphaTable table = poisson::build_alpha_table(12);
  for (int m = 1; m <= 12; ++m)
    for (int l = 0; l <= m; ++l) EXPECT_EQ(table.at(m, l), stirling2(m, l)) << "m=" << m << " l=" << l;
  EXPECT_EQ(table.at(0, 0), 1);
  EXPECT_EQ(table.at(3, 5), 0);
}

TEST(AlphaTable, SmallRows) {
  const poisson::AlphaTable table = poisson::build_alpha_table(4);
  EXPECT_EQ(table.row(3), (std::vector<BigInt>{0, 1, 3, 1}));
  EXPECT_EQ(table.row(4), (std::vector<BigInt>{0, 1, 7, 6, 1}));
}

TEST(AlphaTable, OperatorIdentity) {
  const poisson::AlphaTable table = poisson::build_alpha_table(12);
  const poisson::IdentitySides sides = poisson::operator_identity_sides(table, 3, 2);
  EXPECT_EQ(sides.lhs, 8);
  EXPECT_EQ(sides.rhs, 8);
  const poisson::IdentityReport report = poisson::operator_identity_check(table, 12);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.max_power, 12);
}

TEST(AlphaTable, RejectsNegativeOrder) { EXPECT_THROW(poisson::build_alpha_table(-1), poisson::Error); }

TEST(RTable, BaseCaseSymbolic) {
  const poisson::RTable one = poisson::build_r_table(1);
  ASSERT_TRUE(one.symbolic());
  const poisson::IntPolynomial n = poisson::IntPolynomial::variable();
  EXPECT_EQ(one.at(0, 0), -(n + 3));
  EXPECT_EQ(one.at(0, 1), n - 1);
  EXPECT_EQ(one.at(1, 0), n + 1);
  EXPECT_EQ(one.at(1, 1), -(n - 3));
  EXPECT_EQ(one.at(0, 0).to_string(), "-n - 3");
}

TEST(RTable, MatchesIndexRecursion) {
  for (int n = 2; n <= 7; ++n)
    for (int m = 1; m <= 6; ++m) {
      const std::vector<Row> oracle = index_recursion(m, n);
      const poisson::RTable table = poisson::build_r_table(m, n);
      ASSERT_EQ(table.dimension(), n);
      for (int k = 0; k <= m; ++k) {
        const auto& row = table.coefficients(k);
        ASSERT_EQ(row.size(), oracle[k].size()) << "n=" << n << " m=" << m << " k=" << k;
        for (std::size_t j = 0; j < row.size(); ++j)
          EXPECT_EQ(row[j].evaluate(n), BigInt(oracle[k][j])) << "n=" << n << " m=" << m << " k=" << k << " j=" << j;
      }
    }
}

TEST(RTable, SpecializeAgreesWithDirectBuild) {
  EXPECT_EQ(poisson::build_r_table(4).specialize(5), poisson::build_r_table(4, 5));
}

TEST(RTable, DegreeInR) {
  for (int m = 1; m <= 6; ++m) {
    const poisson::RTable table = poisson::build_r_table(m);
    for (int k = 0; k <= m; ++k) EXPECT_EQ(table.degree_in_r(k), 2 * m - k + 1);
  }
}

TEST(RTable, ParityAndExponent) {
  EXPECT_EQ(poisson::RTable::parity(0), 1);
  EXPECT_EQ(poisson::RTable::parity(1), 0);
  EXPECT_EQ(poisson::RTable::exponent(2, 3), 7);
  EXPECT_EQ(poisson::RTable::exponent(3, 3), 6);
}

TEST(RTable, ClosedFormOrderTwoMatchesSeries) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> scale(0.1, 2.0), angle(0.0, 3.14159);
  for (int n : {2, 3, 4}) {
    const poisson::SphereContext ctx(n);
    for (int i = 0; i < 20; ++i) {
      const poisson::PoissonWavelet g(poisson::WaveletSpec(ctx, 2, scale(rng)));
      const poisson::Colatitude c = poisson::Colatitude::from_angle(angle(rng));
      const double peak = std::abs(g.closed(poisson::Colatitude::from_angle(0.0)));
      EXPECT_NEAR(g.closed(c) / peak, g.series(c).value / peak, 1e-10);
    }
  }
}

TEST(NumericRTable, EvaluatesPolynomial) {
  const poisson::RTable table = poisson::build_r_table(1, 3);
  const poisson::NumericRTable numeric(table, 3);
  // R_0 = -6 r + 2 r^3, R_1 = 4 - 0 r^2.
  const long double r = 0.3L, t = 0.6L;
  const long double expected = (-6.0L * r + 2.0L * r * r * r) + 4.0L * t;
  EXPECT_NEAR(static_cast<double>(numeric.evaluate(r, t)), static_cast<double>(expected), 1e-15);
  EXPECT_NEAR(numeric.evaluate(poisson::Float50(0.3), poisson::Float50(0.6)).convert_to<double>(),
              static_cast<double>(expected), 1e-15);
}
