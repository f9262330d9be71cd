#include "poisson/wavelets.hpp"

#include <cmath>
#include <string>

#include "poisson/error.hpp"

namespace poisson {

namespace {

struct Geometry {
  long double distance;
  long double cos_chi;
};

// |x - r e| and cos chi for a point at radius rho, given rho - r directly.
Geometry geometry_from_gap(long double gap, long double r, long double rho, long double one_minus_t) {
  const long double distance = std::sqrt(gap * gap + 2.0L * rho * r * one_minus_t);
  long double cos_chi = distance > 0.0L ? (gap - rho * one_minus_t) / distance : 1.0L;
  if (cos_chi > 1.0L) cos_chi = 1.0L;
  if (cos_chi < -1.0L) cos_chi = -1.0L;
  return {distance, cos_chi};
}

long double gegenbauer_ld(long double lambda, int l, long double t) {
  if (l == 0) return 1.0L;
  long double prev = 1.0L;
  long double curr = 2.0L * lambda * t;
  for (int k = 2; k <= l; ++k) {
    const long double next = (2.0L * (k + lambda - 1.0L) * t * curr - (k + 2.0L * lambda - 2.0L) * prev) / k;
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace

std::string_view to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::raw: return "raw";
    case Flavor::bilinear: return "bilinear";
    case Flavor::linear: return "linear";
  }
  return "raw";
}

std::string_view to_string(Representation repr) {
  switch (repr) {
    case Representation::series: return "series";
    case Representation::closed: return "closed";
    case Representation::continuation: return "continuation";
    case Representation::multipole: return "multipole";
  }
  return "closed";
}

Flavor parse_flavor(std::string_view name) {
  if (name == "raw") return Flavor::raw;
  if (name == "bilinear") return Flavor::bilinear;
  if (name == "linear") return Flavor::linear;
  throw DomainError("unknown flavor '" + std::string(name) + "'");
}

Representation parse_representation(std::string_view name) {
  if (name == "series") return Representation::series;
  if (name == "closed") return Representation::closed;
  if (name == "continuation") return Representation::continuation;
  if (name == "multipole") return Representation::multipole;
  throw DomainError("unknown representation '" + std::string(name) + "'");
}

WaveletSpec::WaveletSpec(SphereContext ctx, int m, double a, Flavor flavor)
    : ctx_(ctx), m_(m), a_(a), flavor_(flavor), r_(std::exp(-a)), gap_(-std::expm1(-a)) {
  if (m < 1) throw DomainError("wavelet order must be at least 1, got " + std::to_string(m));
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("wavelet scale must be positive, got " + format_real(a));
}

double flavor_scale(Flavor flavor, const SphereContext& ctx, int m) {
  switch (flavor) {
    case Flavor::raw: return 1.0;
    case Flavor::bilinear: return std::ldexp(ctx.area(), m) / std::sqrt(std::tgamma(2.0 * m));
    case Flavor::linear: return ctx.area() / std::tgamma(static_cast<double>(m));
  }
  return 1.0;
}

double filter(FilterKind kind, int m, double t) {
  if (m < 1) throw DomainError("filter order must be at least 1");
  if (t < 0.0) throw DomainError("filter argument must be non-negative");
  if (t == 0.0) return 0.0;
  const double log_power = m * std::log(t) - t;
  if (kind == FilterKind::psi) return std::exp(m * std::log(2.0) - 0.5 * std::lgamma(2.0 * m) + log_power);
  return std::exp(log_power - std::lgamma(static_cast<double>(m)));
}

WaveletTables::WaveletTables(const SphereContext& ctx, int m)
    : m_(m), alpha_(build_alpha_table(m + 1)), closed_(build_r_table(m), ctx.dimension()) {}

PoissonWavelet::PoissonWavelet(const WaveletSpec& spec)
    : PoissonWavelet(spec, std::make_shared<const WaveletTables>(spec.context(), spec.order())) {}

PoissonWavelet::PoissonWavelet(const WaveletSpec& spec, std::shared_ptr<const WaveletTables> tables)
    : spec_(spec), tables_(std::move(tables)), prefactor_(0.0) {
  if (!tables_ || tables_->order() != spec.order()) throw DomainError("wavelet tables do not match the order");
  prefactor_ = flavor_scale(spec.flavor(), spec.context(), spec.order()) * std::pow(spec.scale(), spec.order()) /
               spec.context().area();
}

PoissonWavelet PoissonWavelet::at_scale(double a) const { return {spec_.with_scale(a), tables_}; }

PoissonWavelet PoissonWavelet::with_flavor(Flavor flavor) const { return {spec_.with_flavor(flavor), tables_}; }

SeriesValue PoissonWavelet::series(const Colatitude& c, const SeriesOptions& options) const {
  const double lambda = spec_.context().lambda();
  const int m = spec_.order();
  const double log_r = -spec_.scale();
  auto weight = [lambda, m, log_r](int l) {
    if (l == 0) return 0.0;
    return (lambda + l) / lambda * std::exp(m * std::log(static_cast<double>(l)) + l * log_r);
  };
  SeriesOptions scaled = options;
  scaled.abs_tol = options.abs_tol / prefactor();
  SeriesValue v = sum_gegenbauer_series(lambda, c.t, weight, scaled);
  v.value *= prefactor();
  v.tail_bound *= prefactor();
  return v;
}

double PoissonWavelet::series(double t, double tol) const {
  SeriesOptions options;
  options.abs_tol = tol;
  options.rel_tol = 0.0;
  return series(Colatitude::from_cosine(t), options).value;
}

namespace {

// Closed form r (1 - 2rt + r^2)^-(lambda+m+1) P_m(r, t) evaluated in Real.
// t is rebuilt from 1 - t so that both factors see the same angle.
template <typename Real>
double closed_in(const NumericRTable& table, double lambda, int m, const Real& r, const Real& gap,
                 const Colatitude& c) {
  const Real one_minus_t = c.one_minus_t;
  const Real t = c.one_minus_t < 1.0 ? Real(1 - one_minus_t) : Real(c.t);
  const Real q = gap * gap + 2 * r * one_minus_t;
  const Real exponent = Real(lambda) + m + 1;
  using std::pow;
  const Real value = r * pow(q, -exponent) * table.evaluate<Real>(r, t);
  return static_cast<double>(value);
}

// Estimated decimal digits cancelled in P_m(r, t) near the pole, where it
// vanishes like (1 - r)^(m+1).
double closed_form_digits_lost(const NumericRTable& table, int m, double gap) {
  return (m + 1) * std::log10(1.0 / gap) + 0.25 * table.log10_max_coefficient() + 1.0;
}

template <typename Real>
Real exact_gap(double a) {
  using std::exp;
  return Real(1) - exp(-Real(a));
}

}  // namespace

double PoissonWavelet::closed(const Colatitude& c) const {
  const NumericRTable& table = tables_->closed_form();
  const double lambda = spec_.context().lambda();
  const int m = spec_.order();
  const double a = spec_.scale();
  const double lost = closed_form_digits_lost(table, m, spec_.radius_gap());
  double value = 0.0;
  if (lost <= 3.5) {
    value = closed_in<long double>(table, lambda, m, std::exp(-static_cast<long double>(a)),
                                   -std::expm1(-static_cast<long double>(a)), c);
  } else if (lost <= 33.0) {
    using boost::multiprecision::exp;
    value = closed_in<Float50>(table, lambda, m, exp(-Float50(a)), exact_gap<Float50>(a), c);
  } else if (lost <= 83.0) {
    using boost::multiprecision::exp;
    value = closed_in<Float100>(table, lambda, m, exp(-Float100(a)), exact_gap<Float100>(a), c);
  } else {
    throw NumericError("scale " + format_real(a) + " is below the supported range of the closed form at order " +
                       std::to_string(m));
  }
  return prefactor() * value;
}

double PoissonWavelet::closed_free_radius(double r, const Colatitude& c) const {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("source radius must lie in (0, 1)");
  const NumericRTable& table = tables_->closed_form();
  const double lambda = spec_.context().lambda();
  const int m = spec_.order();
  const double lost = closed_form_digits_lost(table, m, 1.0 - r);
  double value = 0.0;
  if (lost <= 3.5) {
    const long double rr = r;
    value = closed_in<long double>(table, lambda, m, rr, 1.0L - rr, c);
  } else if (lost <= 33.0) {
    const Float50 rr = r;
    value = closed_in<Float50>(table, lambda, m, rr, Float50(1) - rr, c);
  } else {
    const Float100 rr = r;
    value = closed_in<Float100>(table, lambda, m, rr, Float100(1) - rr, c);
  }
  return prefactor() * value;
}

namespace {

long double continuation_sum(const WaveletTables& tables, long double lambda, int m, long double r,
                             const Geometry& geo) {
  if (geo.distance < 1e-12L) throw SingularityError("evaluation point coincides with the wavelet source");
  const AlphaTable& alpha = tables.alpha();
  long double sum = 0.0L;
  long double factorial = 1.0L;
  long double r_power = 1.0L;
  for (int l = 1; l <= m + 1; ++l) {
    factorial *= l;
    r_power *= r;
    const long double weight = alpha.at(m, l).convert_to<long double>() +
                               alpha.at(m + 1, l).convert_to<long double>() / lambda;
    sum += factorial * weight * r_power * gegenbauer_ld(lambda, l, geo.cos_chi) /
           std::pow(geo.distance, l + 2.0L * lambda);
  }
  return sum;
}

}  // namespace

double PoissonWavelet::continuation(const OffSpherePoint& x) const {
  if (!(x.rho > 0.0)) throw DomainError("off-sphere point needs rho > 0");
  const long double r = spec_.radius();
  const long double rho = x.rho;
  const Colatitude c = Colatitude::from_angle(x.theta);
  const Geometry geo = geometry_from_gap(rho - r, r, rho, c.one_minus_t);
  return static_cast<double>(prefactor() *
                             continuation_sum(*tables_, spec_.context().lambda(), spec_.order(), r, geo));
}

double PoissonWavelet::continuation(const Colatitude& c) const {
  const long double r = spec_.radius();
  const Geometry geo = geometry_from_gap(spec_.radius_gap(), r, 1.0L, c.one_minus_t);
  return static_cast<double>(prefactor() *
                             continuation_sum(*tables_, spec_.context().lambda(), spec_.order(), r, geo));
}

double PoissonWavelet::multipole_sum(const Colatitude& c, const SeriesOptions& options) const {
  const SphereContext& ctx = spec_.context();
  const int m = spec_.order();
  const double scale = flavor_scale(spec_.flavor(), ctx, m) * std::pow(spec_.scale(), m);
  SeriesOptions field_options = options;
  field_options.abs_tol = options.abs_tol / scale;
  const double lower = multipole_field_series(ctx, m, spec_.radius(), c.t, field_options).value;
  const double upper = multipole_field_series(ctx, m + 1, spec_.radius(), c.t, field_options).value;
  return scale * (lower + upper / ctx.lambda());
}

SeriesValue PoissonWavelet::origin_expansion(const OffSpherePoint& x, const SeriesOptions& options) const {
  const double r = spec_.radius();
  if (!(x.rho > r)) throw DomainError("expansion about the origin needs rho > e^{-a}");
  const double lambda = spec_.context().lambda();
  const int m = spec_.order();
  const double log_ratio = std::log(r / x.rho);
  auto weight = [lambda, m, log_ratio](int l) {
    if (l == 0) return 0.0;
    return (lambda + l) / lambda * std::exp(m * std::log(static_cast<double>(l)) + l * log_ratio);
  };
  const double scale = prefactor() * std::pow(x.rho, -2.0 * lambda);
  SeriesOptions scaled = options;
  scaled.abs_tol = options.abs_tol / scale;
  SeriesValue v = sum_gegenbauer_series(lambda, std::cos(x.theta), weight, scaled);
  v.value *= scale;
  v.tail_bound *= scale;
  return v;
}

double PoissonWavelet::evaluate(const Colatitude& c, Representation repr) const {
  switch (repr) {
    case Representation::series: return series(c).value;
    case Representation::closed: return closed(c);
    case Representation::continuation: return continuation(c);
    case Representation::multipole: return multipole_sum(c);
  }
  return closed(c);
}

}  // namespace poisson
