#pragma once

// Exact coefficient tables for the two recursions behind the finite
// representations of Poisson wavelets:
//
//  * alpha_l^m, defined by (r d/dr)^m = sum_l alpha_l^m r^l (d/dr)^l, which
//    drive the expansion around the field source;
//  * a_j^{m,k}, the coefficients of the polynomials R_k^m(r) in the closed
//    form g = (a^m / Sigma_n) r (1 - 2rt + r^2)^-(lambda+m+1) sum_k R_k^m(r) t^k.
//
// The a_j^{m,k} are integer polynomials in the sphere dimension n (2*lambda
// = n-1 enters only through integer combinations), so tables can be built
// once symbolically and specialized to any n.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <type_traits>
#include <vector>

namespace poisson {

using BigInt = boost::multiprecision::cpp_int;
using Float50 = boost::multiprecision::cpp_bin_float_50;
using Float100 = boost::multiprecision::cpp_bin_float_100;

/// Polynomial in the dimension n with arbitrary-precision integer
/// coefficients; coeffs()[i] multiplies n^i.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long long constant);  // NOLINT(google-explicit-constructor)
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  /// The monomial n.
  static IntPolynomial variable();

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  BigInt evaluate(long long n) const;
  std::string to_string(const std::string& var = "n") const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(const IntPolynomial& p);
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += -rhs; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// alpha_l^m for 0 <= l <= m <= max_order.
class AlphaTable {
 public:
  int max_order() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  /// Zero for l > m, matching the recursion's convention.
  const BigInt& at(int m, int l) const;
  double value(int m, int l) const;
  const std::vector<BigInt>& row(int m) const { return rows_.at(m); }

 private:
  friend AlphaTable build_alpha_table(int max_order);
  friend bool operator==(const AlphaTable&, const AlphaTable&) = default;
  std::vector<std::vector<BigInt>> rows_;
};

/// alpha_0^0 = 1, alpha_0^m = 0 (m >= 1), alpha_l^{m+1} = l alpha_l^m + alpha_{l-1}^m.
AlphaTable build_alpha_table(int max_order);

/// Both sides of (r d/dr)^m r^p = sum_l alpha_l^m r^l (d/dr)^l r^p, divided by r^p.
struct IdentitySides {
  BigInt lhs;  // p^m
  BigInt rhs;  // sum_l alpha_l^m p (p-1) ... (p-l+1)
};
IdentitySides operator_identity_sides(const AlphaTable& table, int m, int p);

struct IdentityReport {
  int max_order = 0;
  int max_power = 0;
  BigInt max_discrepancy = 0;
  int worst_order = 0;
  int worst_power = 0;
  bool passed() const { return max_discrepancy == 0; }
};

/// Checks the operator identity for every m <= table.max_order() and
/// 0 <= p <= max_power (defaults to max_order).
IdentityReport operator_identity_check(const AlphaTable& table, int max_power = -1);

/// The polynomials R_k^m, k = 0..m, through their coefficients a_j^{m,k}:
/// R_k^m(r) = sum_j a_j^{m,k} r^(2j + parity(k)), parity(k) = (k-1) mod 2.
class RTable {
 public:
  int order() const noexcept { return order_; }
  /// True when the entries are polynomials in n; false once specialized.
  bool symbolic() const noexcept { return !dimension_; }
  /// Dimension the table was specialized to, or 0 when symbolic.
  int dimension() const noexcept { return dimension_; }

  static int parity(int k) noexcept { return (k + 1) % 2; }
  static int exponent(int k, int j) noexcept { return 2 * j + parity(k); }

  /// a_j^{m,k} for j = 0 .. floor((2m-k+1)/2).
  const std::vector<IntPolynomial>& coefficients(int k) const { return rows_.at(k); }
  const IntPolynomial& at(int k, int j) const { return rows_.at(k).at(j); }

  /// Degree in r of R_k^m: the largest exponent with a nonzero coefficient,
  /// or -1 if R_k^m vanishes identically.
  int degree_in_r(int k) const;

  /// Substitutes a concrete dimension.
  RTable specialize(int n) const;

 private:
  friend RTable build_r_table(int m);
  friend bool operator==(const RTable&, const RTable&) = default;
  int order_ = 0;
  int dimension_ = 0;
  std::vector<std::vector<IntPolynomial>> rows_;
};

/// Builds R_k^m symbolically in n, starting from the order-1 polynomials and
/// lifting with r d/dr applied to r (1-2rt+r^2)^-(lambda+m+1) P_m(r, t).
RTable build_r_table(int m);
RTable build_r_table(int m, int n);

/// Dense floating copies of an RTable for one dimension, in long double
/// and in 50- and 100-digit binary floating point; coefficient(k, e)
/// multiplies r^e t^k.
class NumericRTable {
 public:
  NumericRTable() = default;
  NumericRTable(const RTable& table, int n);

  int order() const noexcept { return order_; }
  int max_exponent() const noexcept { return 2 * order_ + 1; }
  long double coefficient(int k, int e) const { return coeffs_[index(k, e)]; }
  /// log10 of the largest coefficient magnitude.
  double log10_max_coefficient() const noexcept { return log10_max_; }

  /// sum_k R_k^m(r) t^k in the precision of Real (long double, Float50 or Float100).
  template <typename Real>
  Real evaluate(const Real& r, const Real& t) const {
    const auto& c = storage<Real>();
    const int stride = max_exponent() + 1;
    Real total = 0;
    for (int k = order_; k >= 0; --k) {
      Real rk = 0;
      for (int e = max_exponent(); e >= 0; --e) rk = rk * r + c[static_cast<std::size_t>(k * stride + e)];
      total = total * t + rk;
    }
    return total;
  }

 private:
  std::size_t index(int k, int e) const { return static_cast<std::size_t>(k * (max_exponent() + 1) + e); }

  template <typename Real>
  const std::vector<Real>& storage() const {
    if constexpr (std::is_same_v<Real, long double>) {
      return coeffs_;
    } else if constexpr (std::is_same_v<Real, Float50>) {
      return coeffs50_;
    } else {
      static_assert(std::is_same_v<Real, Float100>, "unsupported precision");
      return coeffs100_;
    }
  }

  int order_ = 0;
  double log10_max_ = 0.0;
  std::vector<long double> coeffs_;
  std::vector<Float50> coeffs50_;
  std::vector<Float100> coeffs100_;
};

}  // namespace poisson
