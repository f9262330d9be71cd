#pragma once

// The Poisson kernel of the unit ball and the multipole fields
// Psi^m = (r d/dr)^m Psi, Psi being the monopole potential of a source at
// r*e (e the north pole) inside the ball.

#include "poisson/coefficients.hpp"
#include "poisson/gegenbauer_series.hpp"
#include "poisson/sphere.hpp"

namespace poisson {

/// Source location r*e on the polar axis, 0 < r < 1.
class SourcePoint {
 public:
  explicit SourcePoint(double r);
  double r() const noexcept { return r_; }

 private:
  double r_;
};

/// A point of R^{n+1} in polar form: radius rho > 0 and colatitude theta
/// measured from the north pole.
struct OffSpherePoint {
  double rho = 1.0;
  double theta = 0.0;
};

/// Distance from the source and the cosine of the angle chi between x - r*e
/// and the pole.
struct SourceGeometry {
  double distance = 0.0;
  double cos_chi = 1.0;
};

/// Computes |x - r e| and cos chi from (rho, 1 - cos theta) without
/// subtracting nearly equal quantities near the pole.
SourceGeometry source_geometry(double r, double rho, const Colatitude& c);

/// (1/Sigma_n) (1 - r^2) / (1 - 2 r t + r^2)^((n+1)/2).
double poisson_kernel(const SphereContext& ctx, double r, const Colatitude& c);
double poisson_kernel(const SphereContext& ctx, double r, double t);

/// Closed monopole field on the sphere, (1/Sigma_n) (1 - 2 r t + r^2)^(-lambda).
/// Valid for 0 <= r < 1; r = 0 gives the constant 1/Sigma_n.
double monopole_field(const SphereContext& ctx, double r, const Colatitude& c);

/// (1/Sigma_n) sum_l l^m r^l C_l(t), summed until the tail bound meets the
/// options (0^0 = 1, so m = 0 is the monopole).
SeriesValue multipole_field_series(const SphereContext& ctx, int m, double r, double t,
                                   const SeriesOptions& options = {});

/// Same series with a caller-chosen l_max; throws TruncationError carrying
/// a sufficient l_max if the tail bound exceeds tol.
SeriesValue multipole_field_series(const SphereContext& ctx, int m, double r, double t, int l_max, double tol);

/// Finite expansion about the source:
/// (1/Sigma_n) sum_{l=0}^m alpha_l^m r^l l! C_l(cos chi) / |x - r e|^(l + 2 lambda).
/// The table must reach order m. Throws SingularityError within 1e-12 of the source.
double multipole_field_closed(const SphereContext& ctx, const AlphaTable& alpha, int m, double r,
                              const OffSpherePoint& x);
double multipole_field_closed(const SphereContext& ctx, const AlphaTable& alpha, int m, double r,
                              const Colatitude& on_sphere);

}  // namespace poisson
