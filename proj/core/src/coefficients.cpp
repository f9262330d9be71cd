#include "poisson/coefficients.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "poisson/error.hpp"

namespace poisson {

// ---------------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(long long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::variable() { return IntPolynomial(std::vector<BigInt>{0, 1}); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::evaluate(long long n) const {
  BigInt value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * n + *it;
  return value;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || magnitude != 1) out << magnitude;
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return out.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator-(const IntPolynomial& p) {
  IntPolynomial out = p;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> product(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) product[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(product));
}

// ---------------------------------------------------------------- alpha table

const BigInt& AlphaTable::at(int m, int l) const {
  static const BigInt zero = 0;
  if (m < 0 || m > max_order() || l < 0) {
    throw DomainError("alpha table index (" + std::to_string(m) + ", " + std::to_string(l) + ") out of range");
  }
  return l > m ? zero : rows_[m][l];
}

double AlphaTable::value(int m, int l) const { return at(m, l).convert_to<double>(); }

AlphaTable build_alpha_table(int max_order) {
  if (max_order < 0) throw DomainError("alpha table order must be non-negative");
  AlphaTable table;
  table.rows_.resize(max_order + 1);
  table.rows_[0] = {1};
  for (int m = 0; m < max_order; ++m) {
    const auto& prev = table.rows_[m];
    auto& next = table.rows_[m + 1];
    next.assign(m + 2, 0);
    for (int l = 1; l <= m + 1; ++l) {
      const BigInt carried = l <= m ? BigInt(l * prev[l]) : BigInt(0);
      next[l] = carried + prev[l - 1];
    }
  }
  return table;
}

IdentitySides operator_identity_sides(const AlphaTable& table, int m, int p) {
  if (p < 0) throw DomainError("monomial power must be non-negative");
  IdentitySides sides;
  sides.lhs = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(m));
  BigInt falling = 1;  // p (p-1) ... (p-l+1)
  sides.rhs = 0;
  for (int l = 0; l <= m; ++l) {
    if (l > 0) falling *= (p - l + 1);
    sides.rhs += table.at(m, l) * falling;
  }
  return sides;
}

IdentityReport operator_identity_check(const AlphaTable& table, int max_power) {
  IdentityReport report;
  report.max_order = table.max_order();
  report.max_power = max_power < 0 ? table.max_order() : max_power;
  for (int m = 0; m <= report.max_order; ++m) {
    for (int p = 0; p <= report.max_power; ++p) {
      const auto sides = operator_identity_sides(table, m, p);
      BigInt diff = sides.lhs - sides.rhs;
      if (diff < 0) diff = -diff;
      if (diff > report.max_discrepancy) {
        report.max_discrepancy = diff;
        report.worst_order = m;
        report.worst_power = p;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------- R table

int RTable::degree_in_r(int k) const {
  const auto& row = rows_.at(k);
  for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
    if (!row[j].is_zero()) return exponent(k, j);
  return -1;
}

RTable RTable::specialize(int n) const {
  RTable out = *this;
  out.dimension_ = n;
  for (auto& row : out.rows_)
    for (auto& entry : row) entry = IntPolynomial(std::vector<BigInt>{entry.evaluate(n)});
  return out;
}

RTable build_r_table(int m) {
  if (m < 1) throw DomainError("R table order must be at least 1");

  const IntPolynomial n = IntPolynomial::variable();
  // grid[k][e] multiplies t^k r^e in P_m(r, t) = sum_k R_k^m(r) t^k.
  using Grid = std::vector<std::vector<IntPolynomial>>;
  Grid grid(2, std::vector<IntPolynomial>(4));
  grid[0][1] = -(n + 3);
  grid[0][3] = n - 1;
  grid[1][0] = n + 1;
  grid[1][2] = -(n - 3);

  for (int order = 1; order < m; ++order) {
    // P_{m+1} = [1 - (n+2m) r^2 + (n-1+2m) r t] P_m + r (1 + r^2 - 2 r t) dP_m/dr
    const IntPolynomial damping = n + 2 * order;
    const IntPolynomial coupling = n + (2 * order - 1);
    const int max_e = 2 * order + 1;
    Grid next(order + 2, std::vector<IntPolynomial>(max_e + 3));
    for (int k = 0; k <= order; ++k) {
      for (int e = 0; e <= max_e; ++e) {
        const IntPolynomial& c = grid[k][e];
        if (c.is_zero()) continue;
        const IntPolynomial scaled = IntPolynomial(e) * c;
        next[k][e] += c + scaled;
        next[k][e + 2] += scaled - damping * c;
        next[k + 1][e + 1] += coupling * c - IntPolynomial(2 * e) * c;
      }
    }
    grid = std::move(next);
  }

  RTable table;
  table.order_ = m;
  table.rows_.resize(m + 1);
  for (int k = 0; k <= m; ++k) {
    const int top = (2 * m - k + 1) / 2;
    auto& row = table.rows_[k];
    row.resize(top + 1);
    for (int e = 0; e < static_cast<int>(grid[k].size()); ++e) {
      const IntPolynomial& c = grid[k][e];
      if (c.is_zero()) continue;
      const int j = (e - RTable::parity(k)) / 2;
      if ((e - RTable::parity(k)) % 2 != 0 || j > top) {
        throw NumericError("R table recursion produced r^" + std::to_string(e) + " in R_" + std::to_string(k) +
                           " outside its parity class");
      }
      row[j] = c;
    }
  }
  return table;
}

RTable build_r_table(int m, int n) { return build_r_table(m).specialize(n); }

// ---------------------------------------------------------------- numeric table

NumericRTable::NumericRTable(const RTable& table, int n) : order_(table.order()) {
  const std::size_t size = static_cast<std::size_t>((order_ + 1) * (max_exponent() + 1));
  coeffs_.assign(size, 0.0L);
  coeffs50_.assign(size, Float50(0));
  coeffs100_.assign(size, Float100(0));
  BigInt largest = 0;
  for (int k = 0; k <= order_; ++k) {
    const auto& row = table.coefficients(k);
    for (int j = 0; j < static_cast<int>(row.size()); ++j) {
      const std::size_t at = index(k, RTable::exponent(k, j));
      const BigInt value = row[j].evaluate(n);
      coeffs_[at] = value.convert_to<long double>();
      coeffs50_[at] = Float50(value);
      coeffs100_[at] = Float100(value);
      const BigInt magnitude = value < 0 ? BigInt(-value) : value;
      if (magnitude > largest) largest = magnitude;
    }
  }
  log10_max_ = largest > 0 ? std::log10(largest.convert_to<double>()) : 0.0;
}

}  // namespace poisson
