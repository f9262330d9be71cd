#pragma once

// Poisson wavelets g_a^m on S^n and their normalized variants.
//
// The same function is available through four independent routes:
//   series        Gegenbauer expansion about the origin
//   closed        rational closed form built from the R_k^m polynomials
//   continuation  finite expansion about the field source (also off-sphere)
//   multipole     a^m (Psi^m + Psi^{m+1} / lambda) from the multipole series
// All of them are real; conjugation is the identity throughout.

#include <memory>
#include <string_view>

#include "poisson/coefficients.hpp"
#include "poisson/gegenbauer_series.hpp"
#include "poisson/kernels.hpp"
#include "poisson/sphere.hpp"

namespace poisson {

/// Normalization of the wavelet family.
///   raw       g_a^m
///   bilinear  G_a^m = 2^m Sigma_n / sqrt(Gamma(2m)) g_a^m  (filter psi_m)
///   linear    ~G_a^m = Sigma_n / Gamma(m) g_a^m            (filter gamma_m)
enum class Flavor { raw, bilinear, linear };

enum class Representation { series, closed, continuation, multipole };

std::string_view to_string(Flavor flavor);
std::string_view to_string(Representation repr);
/// Throws DomainError on unknown names.
Flavor parse_flavor(std::string_view name);
Representation parse_representation(std::string_view name);

class WaveletSpec {
 public:
  /// Throws DomainError unless m >= 1 and a > 0.
  WaveletSpec(SphereContext ctx, int m, double a, Flavor flavor = Flavor::raw);

  const SphereContext& context() const noexcept { return ctx_; }
  int order() const noexcept { return m_; }
  double scale() const noexcept { return a_; }
  Flavor flavor() const noexcept { return flavor_; }
  /// Source radius e^{-a}.
  double radius() const noexcept { return r_; }
  /// 1 - e^{-a}, computed without cancellation.
  double radius_gap() const noexcept { return gap_; }

  WaveletSpec with_scale(double a) const { return {ctx_, m_, a, flavor_}; }
  WaveletSpec with_flavor(Flavor flavor) const { return {ctx_, m_, a_, flavor}; }

 private:
  SphereContext ctx_;
  int m_;
  double a_;
  Flavor flavor_;
  double r_;
  double gap_;
};

/// Factor turning g_a^m into the requested flavor.
double flavor_scale(Flavor flavor, const SphereContext& ctx, int m);

enum class FilterKind { psi, gamma };

/// psi_m(t) = 2^m / sqrt(Gamma(2m)) t^m e^{-t};  gamma_m(t) = t^m e^{-t} / Gamma(m).
double filter(FilterKind kind, int m, double t);

/// Scale-independent tables for one (order, dimension) pair: alpha_l^j up to
/// order m+1 and the numeric R_k^m table.
class WaveletTables {
 public:
  WaveletTables(const SphereContext& ctx, int m);

  int order() const noexcept { return m_; }
  const AlphaTable& alpha() const noexcept { return alpha_; }
  const NumericRTable& closed_form() const noexcept { return closed_; }

 private:
  int m_;
  AlphaTable alpha_;
  NumericRTable closed_;
};

/// Immutable evaluator; safe to share across threads.
class PoissonWavelet {
 public:
  explicit PoissonWavelet(const WaveletSpec& spec);
  PoissonWavelet(const WaveletSpec& spec, std::shared_ptr<const WaveletTables> tables);

  const WaveletSpec& spec() const noexcept { return spec_; }
  const std::shared_ptr<const WaveletTables>& tables() const noexcept { return tables_; }
  /// Same order and dimension at another scale, reusing the tables.
  PoissonWavelet at_scale(double a) const;
  PoissonWavelet with_flavor(Flavor flavor) const;

  /// Gegenbauer series about the origin, starting at l = 1.
  SeriesValue series(const Colatitude& c, const SeriesOptions& options = {}) const;
  double series(double t, double tol) const;

  double closed(const Colatitude& c) const;
  /// Closed form with the source radius r decoupled from the prefactor a^m;
  /// a r d/dr of order m gives order m+1 at fixed a.
  double closed_free_radius(double r, const Colatitude& c) const;

  /// Finite expansion about the source, defined on R^{n+1} minus the source.
  double continuation(const OffSpherePoint& x) const;
  double continuation(const Colatitude& c) const;

  double multipole_sum(const Colatitude& c, const SeriesOptions& options = {}) const;

  /// Expansion about the origin of the harmonic continuation, valid for rho > r:
  /// a^m / (Sigma_n rho^{2 lambda}) sum_l l^m (r/rho)^l K_l(cos theta).
  SeriesValue origin_expansion(const OffSpherePoint& x, const SeriesOptions& options = {}) const;

  double evaluate(const Colatitude& c, Representation repr = Representation::closed) const;
  double operator()(double t) const { return closed(Colatitude::from_cosine(t)); }

 private:
  double prefactor() const noexcept { return prefactor_; }

  WaveletSpec spec_;
  std::shared_ptr<const WaveletTables> tables_;
  double prefactor_;  // flavor scale * a^m / Sigma_n
};

}  // namespace poisson
