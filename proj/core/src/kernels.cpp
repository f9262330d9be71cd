#include "poisson/kernels.hpp"

#include <cmath>
#include <string>

#include "poisson/error.hpp"

namespace poisson {

namespace {

void check_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("source radius must lie in (0, 1), got " + format_real(r));
}

double multipole_closed_impl(const SphereContext& ctx, const AlphaTable& alpha, int m, double r,
                             const SourceGeometry& geo) {
  if (m < 0) throw DomainError("multipole order must be non-negative");
  if (m > alpha.max_order()) {
    throw DomainError("alpha table of order " + std::to_string(alpha.max_order()) + " cannot serve order " +
                      std::to_string(m));
  }
  if (geo.distance < 1e-12) throw SingularityError("evaluation point coincides with the field source");
  const double lambda = ctx.lambda();
  double sum = 0.0;
  double r_power = 1.0;
  double factorial = 1.0;
  for (int l = 0; l <= m; ++l) {
    if (l > 0) {
      r_power *= r;
      factorial *= l;
    }
    const double a = alpha.value(m, l);
    if (a == 0.0) continue;
    sum += a * r_power * factorial * gegenbauer(lambda, l, geo.cos_chi) / std::pow(geo.distance, l + 2.0 * lambda);
  }
  return sum / ctx.area();
}

}  // namespace

SourcePoint::SourcePoint(double r) : r_(r) { check_radius(r); }

SourceGeometry source_geometry(double r, double rho, const Colatitude& c) {
  const double gap = rho - r;
  const double distance = std::sqrt(gap * gap + 2.0 * rho * r * c.one_minus_t);
  SourceGeometry geo;
  geo.distance = distance;
  geo.cos_chi = distance > 0.0 ? clamp_cosine((gap - rho * c.one_minus_t) / distance) : 1.0;
  return geo;
}

double poisson_kernel(const SphereContext& ctx, double r, const Colatitude& c) {
  check_radius(r);
  const double q = (1.0 - r) * (1.0 - r) + 2.0 * r * c.one_minus_t;
  return (1.0 - r) * (1.0 + r) / std::pow(q, 0.5 * (ctx.dimension() + 1)) / ctx.area();
}

double poisson_kernel(const SphereContext& ctx, double r, double t) {
  return poisson_kernel(ctx, r, Colatitude::from_cosine(t));
}

double monopole_field(const SphereContext& ctx, double r, const Colatitude& c) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("monopole radius must lie in [0, 1), got " + format_real(r));
  const double q = (1.0 - r) * (1.0 - r) + 2.0 * r * c.one_minus_t;
  return std::pow(q, -ctx.lambda()) / ctx.area();
}

SeriesValue multipole_field_series(const SphereContext& ctx, int m, double r, double t,
                                   const SeriesOptions& options) {
  check_radius(r);
  if (m < 0) throw DomainError("multipole order must be non-negative");
  const double log_r = std::log(r);
  auto weight = [m, log_r](int l) {
    if (l == 0) return m == 0 ? 1.0 : 0.0;
    return std::exp(m * std::log(static_cast<double>(l)) + l * log_r);
  };
  SeriesValue v = sum_gegenbauer_series(ctx.lambda(), t, weight, options);
  v.value /= ctx.area();
  v.tail_bound /= ctx.area();
  return v;
}

SeriesValue multipole_field_series(const SphereContext& ctx, int m, double r, double t, int l_max, double tol) {
  check_radius(r);
  if (m < 0) throw DomainError("multipole order must be non-negative");
  if (l_max < 0) throw DomainError("l_max must be non-negative");
  const double log_r = std::log(r);
  auto weight = [m, log_r](int l) {
    if (l == 0) return m == 0 ? 1.0 : 0.0;
    return std::exp(m * std::log(static_cast<double>(l)) + l * log_r);
  };
  // tol refers to the field value, which carries the 1/Sigma_n factor.
  SeriesValue v = sum_gegenbauer_series_fixed(ctx.lambda(), t, weight, l_max, tol * ctx.area());
  v.value /= ctx.area();
  v.tail_bound /= ctx.area();
  return v;
}

double multipole_field_closed(const SphereContext& ctx, const AlphaTable& alpha, int m, double r,
                              const OffSpherePoint& x) {
  check_radius(r);
  if (!(x.rho > 0.0)) throw DomainError("off-sphere point needs rho > 0");
  return multipole_closed_impl(ctx, alpha, m, r, source_geometry(r, x.rho, Colatitude::from_angle(x.theta)));
}

double multipole_field_closed(const SphereContext& ctx, const AlphaTable& alpha, int m, double r,
                              const Colatitude& on_sphere) {
  check_radius(r);
  return multipole_closed_impl(ctx, alpha, m, r, source_geometry(r, 1.0, on_sphere));
}

}  // namespace poisson
