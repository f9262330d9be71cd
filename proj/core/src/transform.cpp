#include "poisson/transform.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "poisson/error.hpp"

namespace poisson {

namespace {

// Sigma_{n-1} / Sigma_n: turns a weighted integral over t into the
// normalized sphere average of a zonal function.
double zonal_measure(const SphereContext& ctx) { return sphere_area(ctx.dimension() - 1) / ctx.area(); }

void check_field(const TransformField& field) {
  if (field.grid.size() == 0) throw DomainError("transform field has an empty scale grid");
}

std::vector<double> sequence(const SphereContext& ctx, int band_limit, double t) {
  std::vector<double> c(static_cast<std::size_t>(band_limit) + 1);
  gegenbauer_sequence(ctx.lambda(), t, c);
  return c;
}

// Per-degree coefficients of every scale row, projecting spatial samples when
// no spectral block is available.
Eigen::MatrixXd spectral_rows(const TransformField& field, const QuadratureRule* rule, int band_limit,
                              std::string& path) {
  if (field.spectral) {
    path = "spectral";
    return *field.spectral;
  }
  if (!field.spatial) throw DomainError("transform field carries neither spectral nor spatial samples");
  if (rule == nullptr) throw DomainError("spatial inversion needs the quadrature rule of the samples");
  if (rule->size() != field.cosines.size()) throw DomainError("spatial samples do not match the quadrature rule");
  if (band_limit < 0) band_limit = static_cast<int>(rule->size()) - 1;
  path = "spatial";
  Eigen::MatrixXd rows(field.spatial->rows(), band_limit + 1);
  std::vector<double> samples(rule->size());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) samples[j] = (*field.spatial)(i, static_cast<Eigen::Index>(j));
    const ZonalFunction p = ZonalFunction::project(field.ctx, *rule, samples, band_limit);
    for (int l = 0; l <= band_limit; ++l) rows(i, l) = p.coeffs[static_cast<std::size_t>(l)];
  }
  return rows;
}

Reconstruction synthesize(const TransformField& field, const QuadratureRule* rule, int band_limit, bool bilinear) {
  check_field(field);
  const int m = field.order;
  const SphereContext& ctx = field.ctx;
  Reconstruction out{ZonalFunction{ctx, {}}, {}, true, {}};
  const Eigen::MatrixXd rows = spectral_rows(field, rule, band_limit, out.path);
  const int L = static_cast<int>(rows.cols()) - 1;

  // Synthesis filter per scale and degree, and the overall constant.
  double constant = 1.0;
  Flavor synthesis = field.flavor;
  if (field.flavor == Flavor::raw) {
    // The 1/Sigma_n of the synthesis integral is carried by the convolution.
    constant = bilinear ? std::pow(4.0, m) * ctx.area() * ctx.area() / std::tgamma(2.0 * m)
                        : ctx.area() / std::tgamma(static_cast<double>(m));
  }
  out.function.coeffs.assign(static_cast<std::size_t>(L) + 1, 0.0);
  out.degree_factor.assign(static_cast<std::size_t>(L) + 1, 0.0);
  for (int l = 1; l <= L; ++l) {
    double sum = 0.0;
    double factor = 0.0;
    for (std::size_t i = 0; i < field.grid.size(); ++i) {
      const double a = field.grid.nodes[i];
      const double analysis = flavor_filter(field.flavor, ctx, m, a * l);
      const double synth = bilinear ? flavor_filter(synthesis, ctx, m, a * l) : 1.0;
      sum += field.grid.weights[i] * rows(static_cast<Eigen::Index>(i), l) * synth;
      factor += field.grid.weights[i] * analysis * synth;
    }
    out.function.coeffs[static_cast<std::size_t>(l)] = constant * sum;
    out.degree_factor[static_cast<std::size_t>(l)] = constant * factor;
  }
  return out;
}

}  // namespace

double ZonalFunction::operator()(double t) const {
  if (coeffs.empty()) return 0.0;
  const std::vector<double> c = sequence(ctx, band_limit(), t);
  double sum = 0.0;
  for (std::size_t l = 0; l < coeffs.size(); ++l) sum += coeffs[l] * c[l];
  return sum;
}

std::vector<double> ZonalFunction::sample(std::span<const double> cosines) const {
  std::vector<double> out(cosines.size());
  for (std::size_t i = 0; i < cosines.size(); ++i) out[i] = (*this)(cosines[i]);
  return out;
}

ZonalFunction ZonalFunction::project(const SphereContext& ctx, const QuadratureRule& rule,
                                     std::span<const double> samples, int band_limit) {
  if (samples.size() != rule.size()) throw DomainError("samples must sit at the rule nodes");
  if (band_limit < 0) throw DomainError("band limit must be non-negative");
  if (std::abs(rule.lambda - ctx.lambda()) > 1e-12) throw DomainError("rule weight does not match the sphere");
  ZonalFunction f{ctx, std::vector<double>(static_cast<std::size_t>(band_limit) + 1, 0.0)};
  std::vector<double> c(static_cast<std::size_t>(band_limit) + 1);
  for (std::size_t j = 0; j < rule.size(); ++j) {
    gegenbauer_sequence(ctx.lambda(), rule.nodes[j], c);
    for (int l = 0; l <= band_limit; ++l) f.coeffs[static_cast<std::size_t>(l)] += rule.weights[j] * samples[j] * c[l];
  }
  for (int l = 0; l <= band_limit; ++l) f.coeffs[static_cast<std::size_t>(l)] /= gegenbauer_norm_squared(ctx.lambda(), l);
  return f;
}

ZonalFunction ZonalFunction::random(const SphereContext& ctx, int band_limit, std::uint64_t seed) {
  if (band_limit < 0) throw DomainError("band limit must be non-negative");
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ZonalFunction f{ctx, std::vector<double>(static_cast<std::size_t>(band_limit) + 1, 0.0)};
  for (int l = 1; l <= band_limit; ++l) f.coeffs[static_cast<std::size_t>(l)] = dist(engine);
  return f;
}

double l2_norm(const ZonalFunction& f) {
  const double lambda = f.ctx.lambda();
  double sum = 0.0;
  for (std::size_t l = 0; l < f.coeffs.size(); ++l)
    sum += f.coeffs[l] * f.coeffs[l] * gegenbauer_norm_squared(lambda, static_cast<int>(l));
  return std::sqrt(zonal_measure(f.ctx) * sum);
}

double relative_l2_error(const ZonalFunction& reference, const ZonalFunction& other) {
  if (!(reference.ctx == other.ctx)) throw DomainError("functions live on different spheres");
  ZonalFunction diff{reference.ctx, reference.coeffs};
  if (other.coeffs.size() > diff.coeffs.size()) diff.coeffs.resize(other.coeffs.size(), 0.0);
  for (std::size_t l = 0; l < other.coeffs.size(); ++l) diff.coeffs[l] -= other.coeffs[l];
  const double norm = l2_norm(reference);
  if (norm == 0.0) throw DomainError("reference function has zero norm");
  return l2_norm(diff) / norm;
}

double flavor_filter(Flavor flavor, const SphereContext& ctx, int m, double t) {
  switch (flavor) {
    case Flavor::bilinear: return filter(FilterKind::psi, m, t);
    case Flavor::linear: return filter(FilterKind::gamma, m, t);
    case Flavor::raw: return std::pow(t, m) * std::exp(-t) / ctx.area();
  }
  return 0.0;
}

double TransformField::spectral_value(std::size_t scale_index, double t) const {
  if (!spectral) throw DomainError("transform field has no spectral block");
  const int L = static_cast<int>(spectral->cols()) - 1;
  const std::vector<double> c = sequence(ctx, L, t);
  double sum = 0.0;
  for (int l = 0; l <= L; ++l) sum += (*spectral)(static_cast<Eigen::Index>(scale_index), l) * c[static_cast<std::size_t>(l)];
  return sum;
}

void TransformField::render(std::span<const double> at) {
  if (!spectral) throw DomainError("transform field has no spectral block");
  cosines.assign(at.begin(), at.end());
  Eigen::MatrixXd values(spectral->rows(), static_cast<Eigen::Index>(at.size()));
  const int L = static_cast<int>(spectral->cols()) - 1;
  for (std::size_t j = 0; j < at.size(); ++j) {
    const std::vector<double> c = sequence(ctx, L, at[j]);
    const Eigen::Map<const Eigen::VectorXd> cv(c.data(), static_cast<Eigen::Index>(c.size()));
    values.col(static_cast<Eigen::Index>(j)) = (*spectral) * cv;
  }
  spatial = std::move(values);
}

TransformField forward_spectral(const ZonalFunction& f, const WaveletSpec& spec, const ScaleGrid& grid) {
  if (!(f.ctx == spec.context())) throw DomainError("function and wavelet live on different spheres");
  TransformField field{f.ctx, spec.order(), spec.flavor(), grid, std::nullopt, {}, std::nullopt};
  const int L = f.band_limit();
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(grid.size()), L + 1);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (int l = 1; l <= L; ++l)
      rows(static_cast<Eigen::Index>(i), l) =
          f.coeffs[static_cast<std::size_t>(l)] * flavor_filter(spec.flavor(), f.ctx, spec.order(), grid.nodes[i] * l);
  field.spectral = std::move(rows);
  return field;
}

SpatialConvolution forward_spatial(const SphereContext& ctx, std::span<const double> f_samples,
                                   const QuadratureRule& rule, const PoissonWavelet& wavelet,
                                   std::span<const double> output_cosines, int band_limit) {
  if (!(ctx == wavelet.spec().context())) throw DomainError("function and wavelet live on different spheres");
  if (rule.size() == 0) throw DomainError("empty quadrature rule");
  const ZonalFunction f = ZonalFunction::project(ctx, rule, f_samples, static_cast<int>(rule.size()) - 1);
  SpatialConvolution out;
  out.values = zonal_convolution(
      ctx, f, [&](const Colatitude& c) { return wavelet.continuation(c); }, output_cosines, wavelet.spec().scale());
  if (static_cast<int>(rule.size()) <= band_limit) {
    out.warning = "quadrature count " + std::to_string(rule.size()) + " does not resolve band limit " +
                  std::to_string(band_limit) + "; expect reduced accuracy";
  }
  return out;
}

SpatialConvolution forward_spatial(const ZonalFunction& f, const PoissonWavelet& wavelet, const QuadratureRule& rule,
                                   std::span<const double> output_cosines) {
  const std::vector<double> samples = f.sample(rule.nodes);
  return forward_spatial(f.ctx, samples, rule, wavelet, output_cosines, f.band_limit());
}

Reconstruction invert_bilinear(const TransformField& field, const QuadratureRule* rule, int band_limit) {
  if (field.flavor == Flavor::linear) throw FlavorMismatch("bilinear inversion applied to a linear transform");
  return synthesize(field, rule, band_limit, true);
}

Reconstruction invert_linear(const TransformField& field, const QuadratureRule* rule, int band_limit) {
  if (field.flavor == Flavor::bilinear) throw FlavorMismatch("linear inversion applied to a bilinear transform");
  return synthesize(field, rule, band_limit, false);
}

double predicted_degree_factor(Flavor flavor, int m, int l, double a_min, double a_max) {
  if (l <= 0) return 0.0;
  using boost::math::gamma_q;
  if (flavor == Flavor::linear) return gamma_q(m, a_min * l) - gamma_q(m, a_max * l);
  return gamma_q(2 * m, 2.0 * a_min * l) - gamma_q(2 * m, 2.0 * a_max * l);
}

double predicted_degree_deviation(Flavor flavor, int m, int l, double a_min, double a_max) {
  if (l <= 0) return 1.0;
  using boost::math::gamma_p;
  using boost::math::gamma_q;
  if (flavor == Flavor::linear) return gamma_p(m, a_min * l) + gamma_q(m, a_max * l);
  return gamma_p(2 * m, 2.0 * a_min * l) + gamma_q(2 * m, 2.0 * a_max * l);
}

ReconstructionReport reconstruction_report(const ZonalFunction& original, const Reconstruction& reconstruction,
                                           const ScaleGrid& grid, int m, Flavor flavor) {
  ReconstructionReport report;
  const std::size_t size = std::max(original.coeffs.size(), reconstruction.function.coeffs.size());
  const double lambda = original.ctx.lambda();
  double residual = 0.0;
  for (std::size_t l = 0; l < size; ++l) {
    const double f = l < original.coeffs.size() ? original.coeffs[l] : 0.0;
    const double g = l < reconstruction.function.coeffs.size() ? reconstruction.function.coeffs[l] : 0.0;
    report.per_degree_ratio.push_back(f != 0.0 ? std::optional<double>(g / f) : std::nullopt);
    const double predicted = predicted_degree_factor(flavor, m, static_cast<int>(l), grid.a_min, grid.a_max);
    report.predicted_ratio.push_back(predicted);
    residual += (1.0 - predicted) * (1.0 - predicted) * f * f * gegenbauer_norm_squared(lambda, static_cast<int>(l));
  }
  const double norm = l2_norm(original);
  report.l2_error = relative_l2_error(original, reconstruction.function);
  report.predicted_residual = std::sqrt(zonal_measure(original.ctx) * residual) / norm;
  report.dropped_degree0 = original.coeffs.empty() ? 0.0 : std::abs(original.coeffs[0]);
  return report;
}

ReproducingKernel::ReproducingKernel(const SphereContext& ctx, int m)
    : ctx_(ctx), m_(m), doubled_(std::make_shared<const WaveletTables>(ctx, 2 * m)) {
  if (m < 1) throw DomainError("wavelet order must be at least 1");
}

double ReproducingKernel::closed(double a, double b, const Colatitude& c) const {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("scales must be positive");
  const PoissonWavelet g(WaveletSpec(ctx_, 2 * m_, a + b, Flavor::bilinear), doubled_);
  const double log_factor = 0.5 * std::lgamma(4.0 * m_) - std::lgamma(2.0 * m_) + m_ * std::log(a * b) -
                            2.0 * m_ * std::log(a + b);
  return std::exp(log_factor) * g.closed(c);
}

SeriesValue ReproducingKernel::spectral(double a, double b, double t, const SeriesOptions& options) const {
  const double lambda = ctx_.lambda();
  const int m = m_;
  auto weight = [&](int l) {
    if (l == 0) return 0.0;
    return (lambda + l) / lambda * filter(FilterKind::psi, m, a * l) * filter(FilterKind::psi, m, b * l);
  };
  return sum_gegenbauer_series(lambda, t, weight, options);
}

std::vector<double> tail_polynomial(int m) {
  if (m < 1) throw DomainError("wavelet order must be at least 1");
  // int_x^inf u^k e^{-2u} du = e^{-2x} P_k(x), P_k = x^k/2 + (k/2) P_{k-1}, P_0 = 1/2.
  const int top = 2 * m - 1;
  std::vector<double> p{0.5};
  for (int k = 1; k <= top; ++k) {
    std::vector<double> next(static_cast<std::size_t>(k) + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) next[i] = 0.5 * k * p[i];
    next[static_cast<std::size_t>(k)] += 0.5;
    p = std::move(next);
  }
  const double scale = std::pow(4.0, m) / std::tgamma(2.0 * m);
  for (double& c : p) c *= scale;
  return p;
}

double approximate_identity_l1(const SphereContext& ctx, int m, double R, int panel_nodes) {
  if (!(R > 0.0)) throw DomainError("R must be positive");
  const double r = std::exp(-2.0 * R);
  std::vector<PoissonWavelet> terms;
  for (int k = 1; k <= 2 * m - 1; ++k) terms.emplace_back(WaveletSpec(ctx, k, 2.0 * R, Flavor::raw));
  std::vector<double> inverse_factorial(terms.size());
  double fact = 1.0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    fact *= static_cast<double>(k + 1);
    inverse_factorial[k] = 1.0 / fact;
  }
  const double lambda = ctx.lambda();
  auto kernel = [&](double theta) {
    const Colatitude c = Colatitude::from_angle(theta);
    double value = poisson_kernel(ctx, r, c);
    for (std::size_t k = 0; k < terms.size(); ++k) value += terms[k].continuation(c) * inverse_factorial[k];
    return ctx.area() * value;
  };
  auto integrand = [&](double theta) { return std::abs(kernel(theta)) * std::pow(std::sin(theta), 2.0 * lambda); };

  // |kernel| has kinks at its sign changes; they become panel ends.
  const std::vector<double> graded = graded_breakpoints(0.0, std::numbers::pi, std::min(0.25 * R, 0.05));
  std::vector<double> breaks{graded.front()};
  constexpr int scan = 32;
  for (std::size_t p = 0; p + 1 < graded.size(); ++p) {
    double lo = graded[p];
    double f_lo = kernel(lo);
    for (int i = 1; i <= scan; ++i) {
      const double hi = graded[p] + (graded[p + 1] - graded[p]) * i / scan;
      const double f_hi = kernel(hi);
      if ((f_lo < 0.0) != (f_hi < 0.0) && f_lo != 0.0 && f_hi != 0.0) {
        double a = lo, b = hi, fa = f_lo;
        for (int it = 0; it < 80 && b - a > 1e-15 * (1.0 + b); ++it) {
          const double mid = 0.5 * (a + b);
          const double fm = kernel(mid);
          if ((fm < 0.0) == (fa < 0.0)) {
            a = mid;
            fa = fm;
          } else {
            b = mid;
          }
        }
        breaks.push_back(0.5 * (a + b));
      }
      lo = hi;
      f_lo = f_hi;
    }
    breaks.push_back(graded[p + 1]);
  }
  return integrate_panels(integrand, breaks, gauss_legendre(panel_nodes));
}

AdmissibilityReport admissibility_report(int m, int n, const AdmissibilityOptions& options) {
  const SphereContext ctx(n);
  if (options.r_count < 2 || !(options.r_min > 0.0 && options.r_max > options.r_min))
    throw DomainError("invalid R range for the admissibility report");
  AdmissibilityReport report;
  report.order = m;
  report.dimension = n;

  const ScaleGrid energy_grid = log_scale_grid(1e-9, 100.0, 4000);
  report.filter_energy = energy_grid.integrate([&](double t) {
    const double p = filter(FilterKind::psi, m, t);
    return p * p;
  });

  report.tail_polynomial = tail_polynomial(m);
  const QuadratureRule legendre = gauss_legendre(24);
  for (double x : {0.0, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    std::vector<double> breaks;
    for (double b = x; b <= x + 80.0; b += 1.0) breaks.push_back(b);
    const double numeric = integrate_panels(
        [&](double u) {
          const double p = filter(FilterKind::psi, m, u);
          return u > 0.0 ? p * p / u : 0.0;
        },
        breaks, legendre);
    double poly = 0.0;
    for (std::size_t k = report.tail_polynomial.size(); k-- > 0;) poly = poly * x + report.tail_polynomial[k];
    report.tail_max_error = std::max(report.tail_max_error, std::abs(poly * std::exp(-2.0 * x) - numeric));
  }

  auto sweep = [&](int count, int nodes, std::vector<double>* grid, std::vector<double>* norms) {
    double sup = 0.0;
    const double step = std::log(options.r_max / options.r_min) / (count - 1);
    for (int i = 0; i < count; ++i) {
      const double R = options.r_min * std::exp(step * i);
      const double v = approximate_identity_l1(ctx, m, R, nodes);
      if (grid) grid->push_back(R);
      if (norms) norms->push_back(v);
      sup = std::max(sup, v);
    }
    return sup;
  };
  report.l1_sup = sweep(options.r_count, options.panel_nodes, &report.r_grid, &report.l1_norms);
  report.l1_sup_refined = sweep(2 * options.r_count - 1, 2 * options.panel_nodes, nullptr, nullptr);
  report.refinement_change = std::abs(report.l1_sup_refined - report.l1_sup) / report.l1_sup;
  return report;
}

}  // namespace poisson
