#pragma once

// Geometry of the unit sphere S^n and the Gegenbauer polynomials that
// diagonalize zonal convolution on it.

#include <cstdint>
#include <span>

namespace poisson {

/// Dimension bundle shared by every computation on S^n.
///
/// The Gegenbauer order lambda = (n-1)/2 is kept exactly as the integer
/// 2*lambda = n-1; the floating value is derived from it.
class SphereContext {
 public:
  /// Throws InvalidContext unless n >= 2.
  explicit SphereContext(int n);

  int dimension() const noexcept { return n_; }
  int twice_lambda() const noexcept { return n_ - 1; }
  double lambda() const noexcept { return 0.5 * (n_ - 1); }
  /// Surface area of S^n, 2 pi^(lambda+1) / Gamma(lambda+1).
  double area() const noexcept { return area_; }

  friend bool operator==(const SphereContext& a, const SphereContext& b) noexcept {
    return a.n_ == b.n_;
  }

 private:
  int n_;
  double area_;
};

/// A polar angle carried both as its cosine and as 1 - cos, the latter
/// computed without cancellation when the angle is small.
struct Colatitude {
  double t = 1.0;
  double one_minus_t = 0.0;

  static Colatitude from_angle(double theta);
  /// Applies the cosine clamping rule of clamp_cosine.
  static Colatitude from_cosine(double t);
};

/// Area of S^n for any n >= 0 (S^0 is two points, area 2).
double sphere_area(int n);

/// Integral of (1 - t^2)^(lambda - 1/2) over [-1, 1].
double gegenbauer_weight_mass(double lambda);

/// Cosines that overshoot [-1, 1] by at most 1e-12 are clamped; anything
/// further out throws DomainError.
double clamp_cosine(double t);

/// C_l^lambda(t) by the three-term recurrence.
double gegenbauer(double lambda, int l, double t);
double gegenbauer(const SphereContext& ctx, int l, double t);

/// Fills out[l] = C_l^lambda(t) for l = 0 .. out.size()-1.
void gegenbauer_sequence(double lambda, double t, std::span<double> out);

/// C_l^lambda(t) from the finite alternating sum with Gamma-function
/// weights. Unstable for large l; kept as a reference evaluator.
double gegenbauer_explicit(double lambda, int l, double t);

/// C_l^lambda(1) = Gamma(l + 2 lambda) / (Gamma(2 lambda) l!).
double gegenbauer_at_one(double lambda, int l);

/// Squared weighted norm int C_l^lambda(t)^2 (1-t^2)^(lambda-1/2) dt.
double gegenbauer_norm_squared(double lambda, int l);

/// Reproducing kernel of the degree-l harmonics, ((lambda+l)/lambda) C_l^lambda.
double reproducing_kernel(const SphereContext& ctx, int l, double t);

/// Number of linearly independent degree-l harmonics on S^n. Throws
/// OverflowError when the value does not fit 64 bits.
std::uint64_t harmonic_dimension(int n, int l);

}  // namespace poisson
