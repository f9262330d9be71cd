#include "poisson/verify.hpp"

#include <algorithm>
#include <boost/math/special_functions/bessel.hpp>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "poisson/asymptotics.hpp"
#include "poisson/error.hpp"
#include "poisson/parallel.hpp"
#include "poisson/quadrature.hpp"
#include "poisson/transform.hpp"

namespace poisson {

namespace {

constexpr double pi = std::numbers::pi;

class Suite {
 public:
  explicit Suite(std::string module) { result_.module = std::move(module); }

  void check(std::string name, double measured, double tolerance, std::string detail = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.measured = measured;
    c.tolerance = tolerance;
    c.passed = measured <= tolerance;  // NaN fails
    c.detail = std::move(detail);
    result_.checks.push_back(std::move(c));
  }
  void expect(std::string name, bool ok, std::string detail = {}) {
    check(std::move(name), ok ? 0.0 : 1.0, 0.0, std::move(detail));
  }
  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string where(std::initializer_list<std::pair<const char*, double>> fields) {
  std::ostringstream out;
  out.precision(6);
  bool first = true;
  for (const auto& [key, value] : fields) {
    if (!first) out << ' ';
    out << key << '=' << value;
    first = false;
  }
  return out.str();
}

std::vector<double> cosines(int count) {
  std::vector<double> t(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) t[static_cast<std::size_t>(i)] = -1.0 + 2.0 * i / (count - 1);
  return t;
}

// Legendre nodes by Newton iteration on P_N, independent of Golub-Welsch.
std::vector<double> newton_legendre_nodes(int count) {
  std::vector<double> nodes(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    double x = std::cos(pi * (i + 0.75) / (count + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int l = 2; l <= count; ++l) {
        const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      const double dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[static_cast<std::size_t>(i)] = x;
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

double sphere_integral(const SphereContext& ctx, const QuadratureRule& rule, auto&& f) {
  return sphere_area(ctx.dimension() - 1) * rule.integrate(f);
}

SuiteResult special_functions_suite(const VerifyOptions& o) {
  Suite s("special_functions");
  const std::vector<double> lambdas{0.5, 1.0, 1.5, 2.0};
  const std::vector<double> ts = cosines(o.fast ? 11 : 41);

  double worst_gf = 0.0;
  for (double lambda : lambdas)
    for (double r : {0.1, 0.5, 0.9})
      for (double t : ts) {
        const SeriesValue v = sum_gegenbauer_series(lambda, t, [&](int l) { return std::pow(r, l); });
        const double exact = std::pow(1.0 - 2.0 * t * r + r * r, -lambda);
        worst_gf = std::max(worst_gf, std::abs(v.value - exact) / (v.tail_bound + 1e-13 * std::abs(exact)));
      }
  s.check("generating_function_within_tail_bound", worst_gf, 1.0, "|sum - closed| / (tail bound + 1e-13 |closed|)");

  double worst_explicit = 0.0;
  for (double lambda : lambdas)
    for (int l = 0; l <= 20; ++l)
      for (double t : ts) {
        const double rec = gegenbauer(lambda, l, t);
        const double ex = gegenbauer_explicit(lambda, l, t);
        worst_explicit = std::max(worst_explicit, std::abs(rec - ex) / gegenbauer_at_one(lambda, l));
      }
  s.check("recurrence_matches_explicit_sum", worst_explicit, 1e-10, "relative to C_l(1), l <= 20");

  double worst_orth = 0.0, worst_norm = 0.0;
  for (double lambda : lambdas) {
    const QuadratureRule rule = gauss_gegenbauer(lambda, 12);
    for (int l = 0; l <= 10; ++l)
      for (int k = 0; k <= 10; ++k) {
        const double v = rule.integrate([&](double t) { return gegenbauer(lambda, l, t) * gegenbauer(lambda, k, t); });
        const double scale = std::sqrt(gegenbauer_norm_squared(lambda, l) * gegenbauer_norm_squared(lambda, k));
        if (l != k)
          worst_orth = std::max(worst_orth, std::abs(v) / scale);
        else
          worst_norm = std::max(worst_norm, std::abs(v / scale - 1.0));
      }
  }
  s.check("orthogonality", worst_orth, 1e-10, "off-diagonal / diagonal scale, l, k <= 10");
  s.check("norm_squared_formula", worst_norm, 1e-12);

  bool dims_ok = true;
  for (int l = 0; l <= 50; ++l) dims_ok = dims_ok && harmonic_dimension(2, l) == static_cast<std::uint64_t>(2 * l + 1);
  s.expect("harmonic_dimension_n2", dims_ok, "N(2, l) = 2l + 1 for l <= 50");
  return s.take();
}

SuiteResult quadrature_suite(const VerifyOptions& o) {
  Suite s("quadrature");
  const std::vector<double> lambdas{0.0, 0.5, 1.0, 1.5, 2.0, 2.5};
  const int max_count = o.fast ? 20 : 48;

  bool positive = true, interlaced = true;
  for (double lambda : lambdas) {
    std::vector<double> previous;
    for (int count = 1; count <= max_count; ++count) {
      const QuadratureRule rule = gauss_gegenbauer(lambda, count);
      for (double w : rule.weights) positive = positive && w > 0.0;
      for (std::size_t i = 0; i < previous.size(); ++i)
        interlaced = interlaced && rule.nodes[i] < previous[i] && previous[i] < rule.nodes[i + 1];
      previous = rule.nodes;
    }
  }
  s.expect("weights_positive", positive);
  s.expect("nodes_interlace", interlaced);

  // int e^t (1-t^2)^(lambda-1/2) dt = sqrt(pi) Gamma(lambda+1/2) 2^lambda I_lambda(1).
  bool converges = true;
  double final_error = 0.0;
  for (double lambda : lambdas) {
    const double exact = std::sqrt(pi) * std::tgamma(lambda + 0.5) * std::pow(2.0, lambda) *
                         boost::math::cyl_bessel_i(lambda, 1.0);
    double previous = INFINITY;
    for (int count : {1, 2, 3, 4, 6, 8}) {
      const double err = std::abs(gauss_gegenbauer(lambda, count).integrate([](double t) { return std::exp(t); }) - exact);
      if (err > 1e-14 * exact) converges = converges && err < previous;
      previous = err;
    }
    final_error = std::max(final_error, previous / exact);
  }
  s.expect("error_decreases_with_count", converges, "int e^t against the weight");
  s.check("smooth_integrand_error_at_count_8", final_error, 1e-14);

  double worst = 0.0;
  for (int count : {2, 5, 10, 20, 40}) {
    const QuadratureRule rule = gauss_gegenbauer(0.5, count);
    const std::vector<double> ref = newton_legendre_nodes(count);
    for (int i = 0; i < count; ++i)
      worst = std::max(worst, std::abs(rule.nodes[static_cast<std::size_t>(i)] - ref[static_cast<std::size_t>(i)]));
  }
  s.check("half_order_rule_is_legendre", worst, 1e-13, "against Newton-iterated Legendre roots");
  return s.take();
}

SuiteResult coefficients_suite(const VerifyOptions& o) {
  Suite s("coefficients");
  s.expect("tables_deterministic",
           build_alpha_table(12) == build_alpha_table(12) && build_r_table(5) == build_r_table(5));

  const IdentityReport id = operator_identity_check(build_alpha_table(12), 12);
  s.expect("alpha_operator_identity", id.passed(), "m <= 12, p <= 12, exact integers");

  const RTable one = build_r_table(1);
  const auto& r0 = one.coefficients(0);
  const auto& r1 = one.coefficients(1);
  s.expect("base_case", r0.size() == 2 && r1.size() == 2 && r0[0].to_string() == "-n - 3" &&
                            r0[1].to_string() == "n - 1" && r1[0].to_string() == "n + 1" &&
                            r1[1].to_string() == "-n + 3");

  bool degrees = true;
  for (int m = 1; m <= 6; ++m) {
    const RTable table = build_r_table(m);
    for (int k = 0; k <= m; ++k) degrees = degrees && table.degree_in_r(k) == 2 * m - k + 1;
  }
  s.expect("degree_2m_minus_k_plus_1", degrees, "k <= m <= 6");

  double worst = 0.0;
  const std::vector<double> thetas = uniform_thetas(o.fast ? 12 : 50);
  for (int n : o.dimensions)
    for (int m : o.orders) {
      if (o.fast && m > 2) continue;
      const SphereContext ctx(n);
      for (double r : {0.2, 0.7, 0.95}) {
        const PoissonWavelet g(WaveletSpec(ctx, m, -std::log(r)));
        const double peak = std::abs(g.closed(Colatitude::from_angle(0.0)));
        for (double theta : thetas) {
          const Colatitude c = Colatitude::from_angle(theta);
          worst = std::max(worst, std::abs(g.closed(c) - g.series(c).value) / peak);
        }
      }
    }
  s.check("closed_form_matches_series", worst, 1e-9, "relative to the peak, r in {0.2, 0.7, 0.95}");
  return s.take();
}

SuiteResult kernels_suite(const VerifyOptions& o) {
  Suite s("kernels");
  const std::vector<double> thetas = uniform_thetas(o.fast ? 12 : 50);
  const std::vector<double> radii{0.1, 0.5, 0.9};
  const AlphaTable alpha = build_alpha_table(6);
  double norm = 0.0, mean = 0.0, equiv = 0.0, mono = 0.0;
  for (int n : o.dimensions) {
    const SphereContext ctx(n);
    const QuadratureRule rule = gauss_gegenbauer(ctx.lambda(), 600);
    for (double r : radii) {
      norm = std::max(norm, std::abs(sphere_integral(ctx, rule, [&](double t) { return poisson_kernel(ctx, r, t); }) - 1.0));
      for (int m : o.orders) {
        // Psi^m peaks like (1-r)^{-(m+n)}; the mean is compared with the mass of |Psi^m|.
        const double integral = sphere_integral(ctx, rule, [&](double t) {
          return multipole_field_closed(ctx, alpha, m, r, Colatitude::from_cosine(t));
        });
        const double mass = sphere_integral(ctx, rule, [&](double t) {
          return std::abs(multipole_field_closed(ctx, alpha, m, r, Colatitude::from_cosine(t)));
        });
        mean = std::max(mean, std::abs(integral) / mass);
        const double peak = multipole_field_closed(ctx, alpha, m, r, Colatitude::from_angle(0.0));
        for (double theta : thetas) {
          const Colatitude c = Colatitude::from_angle(theta);
          const double closed = multipole_field_closed(ctx, alpha, m, r, c);
          equiv = std::max(equiv, std::abs(closed - multipole_field_series(ctx, m, r, c.t).value) / std::abs(peak));
        }
      }
      const double peak = poisson_kernel(ctx, r, Colatitude::from_angle(0.0));
      for (double theta : thetas) {
        const Colatitude c = Colatitude::from_angle(theta);
        const double p = poisson_kernel(ctx, r, c);
        const double split = multipole_field_closed(ctx, alpha, 0, r, c) +
                             multipole_field_closed(ctx, alpha, 1, r, c) / ctx.lambda();
        mono = std::max(mono, std::abs(p - split) / peak);
      }
    }
  }
  s.check("poisson_kernel_normalized", norm, 1e-10);
  s.check("multipoles_mean_zero", mean, 1e-10, "relative to the integral of |Psi^m|");
  s.check("multipole_series_matches_closed", equiv, 1e-9, "relative to the peak");
  s.check("kernel_is_monopole_plus_dipole_over_lambda", mono, 1e-10, "relative to the peak");
  return s.take();
}

SuiteResult wavelets_suite(const VerifyOptions& o) {
  Suite s("wavelets");
  const std::vector<double> scales = o.fast ? std::vector<double>{0.1, 1.0} : std::vector<double>{0.05, 0.1, 0.5, 1.0, 2.0};
  const std::vector<double> thetas = uniform_thetas(o.fast ? 25 : 100);
  double four = 0.0, mean = 0.0, fd = 0.0, flavor = 0.0;
  std::string four_at;
  for (int n : o.dimensions) {
    const SphereContext ctx(n);
    for (int m : o.orders) {
      const PoissonWavelet base(WaveletSpec(ctx, m, 1.0));
      for (double a : scales) {
        const PoissonWavelet g = base.at_scale(a);
        for (const RepresentationRow& row : compare_representations(g, thetas)) {
          if (row.max_pairwise > four) {
            four = row.max_pairwise;
            four_at = where({{"n", n}, {"m", m}, {"a", a}, {"theta", row.theta}});
          }
        }
        mean = std::max(mean, std::abs(wavelet_sphere_integral(g).integral));

        // a r d/dr at fixed a lifts the order by one.
        const PoissonWavelet up(WaveletSpec(ctx, m + 1, a));
        const double r = g.spec().radius();
        const double h = 1e-4 * (1.0 - r);
        const double peak = std::abs(up.closed(Colatitude::from_angle(0.0)));
        for (double theta : {0.0, 0.3 * a, a, 0.5, 2.0}) {
          const Colatitude c = Colatitude::from_angle(theta);
          const double d = (g.closed_free_radius(r + h, c) - g.closed_free_radius(r - h, c)) / (2.0 * h);
          fd = std::max(fd, std::abs(a * r * d - up.closed(c)) / peak);
        }

        const PoissonWavelet bil = g.with_flavor(Flavor::bilinear);
        const double expected = std::pow(2.0, m) * ctx.area() / std::sqrt(std::tgamma(2.0 * m));
        for (double theta : {0.0, 0.7, 2.5}) {
          const Colatitude c = Colatitude::from_angle(theta);
          flavor = std::max(flavor, std::abs(bil.closed(c) / g.closed(c) / expected - 1.0));
        }
      }
    }
  }
  s.check("four_way_equivalence", four, 1e-9, "worst at " + four_at);
  s.check("zero_mean", mean, 1e-10, "Gauss-Gegenbauer, about 40/a nodes");
  s.check("a_r_d_dr_lifts_order", fd, 1e-6, "central differences, relative to the peak");
  s.check("bilinear_over_raw_ratio", flavor, 1e-14, "2^m Sigma_n / sqrt(Gamma(2m))");
  return s.take();
}

SuiteResult transform_suite(const VerifyOptions& o) {
  Suite s("transform");
  const std::vector<int> dims = o.fast ? std::vector<int>{2, 3} : o.dimensions;
  double spatial = 0.0, factor = 0.0, symmetry = 0.0, energy = 0.0;
  std::vector<std::string> warnings;
  std::uint64_t seed = o.seed;
  for (int n : dims) {
    const SphereContext ctx(n);
    const ZonalFunction f = ZonalFunction::random(ctx, 6, seed++);
    const QuadratureRule rule = gauss_gegenbauer(ctx.lambda(), 8);
    const std::vector<double> out{1.0, 0.8, 0.1, -0.6, -1.0};
    for (double a : {0.1, 0.5, 2.0}) {
      const PoissonWavelet g(WaveletSpec(ctx, 2, a, Flavor::bilinear));
      const ScaleGrid one{a, a, {a}, {1.0}};
      const TransformField field = forward_spectral(f, g.spec(), one);
      const SpatialConvolution conv = forward_spatial(f, g, rule, out);
      if (conv.warning) warnings.push_back(*conv.warning);
      double peak = 0.0;
      for (double t : out) peak = std::max(peak, std::abs(field.spectral_value(0, t)));
      for (std::size_t i = 0; i < out.size(); ++i)
        spatial = std::max(spatial, std::abs(conv.values[i] - field.spectral_value(0, out[i])) / peak);
    }

    const ScaleGrid grid = log_scale_grid(1e-3, 40.0, o.fast ? 120 : 400);
    for (int m : {1, 2}) {
      for (Flavor flavor : {Flavor::bilinear, Flavor::linear}) {
        const TransformField field = forward_spectral(f, WaveletSpec(ctx, m, 1.0, flavor), grid);
        const Reconstruction rec = flavor == Flavor::bilinear ? invert_bilinear(field) : invert_linear(field);
        for (int l = 1; l <= f.band_limit(); ++l) {
          const double expected = grid.integrate([&](double a) {
            const double v = flavor_filter(flavor, ctx, m, a * l);
            return flavor == Flavor::bilinear ? v * v : v;
          });
          const double ratio = rec.function.coeffs[static_cast<std::size_t>(l)] / f.coeffs[static_cast<std::size_t>(l)];
          factor = std::max(factor, std::abs(ratio - expected));
        }
      }
      const ReproducingKernel pi_m(ctx, m);
      for (double a : {0.2, 0.9})
        for (double b : {0.4, 1.5})
          for (double theta : {0.0, 0.5, 2.0}) {
            const Colatitude c = Colatitude::from_angle(theta);
            const double ab = pi_m.closed(a, b, c);
            symmetry = std::max(symmetry, std::abs(ab - pi_m.closed(b, a, c)) / std::abs(pi_m.closed(a, b, Colatitude::from_angle(0.0))));
          }

      // Energy of the transform of a single degree, with the sphere norm
      // taken by quadrature of the rendered samples.
      for (int l : {1, 3, 6}) {
        ZonalFunction single{ctx, std::vector<double>(static_cast<std::size_t>(l) + 1, 0.0)};
        single.coeffs.back() = 1.0;
        TransformField field = forward_spectral(single, WaveletSpec(ctx, m, 1.0, Flavor::bilinear), grid);
        const QuadratureRule sphere_rule = gauss_gegenbauer(ctx.lambda(), l + 2);
        field.render(sphere_rule.nodes);
        const double measure = sphere_area(n - 1) / ctx.area();
        double total = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          double row = 0.0;
          for (std::size_t j = 0; j < sphere_rule.size(); ++j) {
            const double w = (*field.spatial)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            row += sphere_rule.weights[j] * w * w;
          }
          total += grid.weights[i] * measure * row;
        }
        const double norm = l2_norm(single);
        const double admissibility = predicted_degree_factor(Flavor::bilinear, m, l, grid.a_min, grid.a_max);
        energy = std::max(energy, std::abs(total / (norm * norm) - admissibility));
      }
    }
  }
  s.check("spectral_matches_spatial", spatial, 1e-9, "relative to the largest sample");
  s.expect("no_resolution_warnings", warnings.empty(), warnings.empty() ? "" : warnings.front());
  s.check("per_degree_factor_matches_grid_integral", factor, 1e-8);
  s.check("reproducing_kernel_symmetry", symmetry, 1e-13);
  s.check("single_degree_energy", energy, o.fast ? 1e-5 : 1e-6, "against the incomplete-Gamma factor");
  return s.take();
}

SuiteResult asymptotics_suite(const VerifyOptions& o) {
  Suite s("asymptotics");
  double origin = 0.0, slope = 0.0, pullback = 0.0, flavor = 0.0;
  for (int n : o.dimensions) {
    const SphereContext ctx(n);
    const double lambda = ctx.lambda();
    for (int m : o.orders) {
      const double expected = std::tgamma(m + 2.0) * gegenbauer_at_one(lambda, m + 1) / (ctx.area() * lambda);
      origin = std::max(origin, std::abs(euclidean_limit(ctx, m, 0.0) / expected - 1.0));
      const EuclideanProfile profile{ctx, m};
      slope = std::max(slope, std::abs(decay_slope(ctx, m) + profile.decay_degree()));

      // Localization statistics scale by the flavor constant.
      const PoissonWavelet raw(WaveletSpec(ctx, m, 0.3));
      const PoissonWavelet lin = raw.with_flavor(Flavor::linear);
      double sup_raw = 0.0, sup_lin = 0.0;
      const double k = envelope_exponent(ctx, m);
      for (double theta : uniform_thetas(o.fast ? 20 : 80)) {
        if (theta == 0.0) continue;
        const Colatitude c = Colatitude::from_angle(theta);
        sup_raw = std::max(sup_raw, std::abs(raw.continuation(c)) * std::pow(theta, k));
        sup_lin = std::max(sup_lin, std::abs(lin.continuation(c)) * std::pow(theta, k));
      }
      flavor = std::max(flavor, std::abs(sup_lin / sup_raw / flavor_scale(Flavor::linear, ctx, m) - 1.0));
    }
    for (int i = 0; i < 100; ++i) {
      const double sv = 0.05 * i + 0.001 * i * i;
      const double theta = stereographic_colatitude(sv);
      const double lhs = std::pow(std::sin(theta), 2.0 * lambda) / (1.0 + 0.25 * sv * sv);
      const double rhs = euclidean_measure_density(ctx, sv);
      pullback = std::max(pullback, std::abs(lhs - rhs) / std::max(rhs, 1e-300) * (rhs > 0.0));
    }
  }
  s.check("limit_at_origin", origin, 1e-14);
  s.check("decay_slope", slope, 0.05, "log-log slope on [1e2, 1e4]");
  s.check("measure_pullback", pullback, 1e-12, "sin^{2 lambda}(theta) theta'(s) = dnu/ds");
  s.check("localization_flavor_invariance", flavor, 1e-12);
  return s.take();
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> suite_names() {
  return {"special_functions", "quadrature", "coefficients", "kernels", "wavelets", "transform", "asymptotics"};
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  if (name == "special_functions")
    result = special_functions_suite(options);
  else if (name == "quadrature")
    result = quadrature_suite(options);
  else if (name == "coefficients")
    result = coefficients_suite(options);
  else if (name == "kernels")
    result = kernels_suite(options);
  else if (name == "wavelets")
    result = wavelets_suite(options);
  else if (name == "transform")
    result = transform_suite(options);
  else if (name == "asymptotics")
    result = asymptotics_suite(options);
  else
    throw DomainError("unknown suite '" + std::string(name) + "'");
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& options) {
  const std::vector<std::string> names = suite_names();
  std::vector<SuiteResult> results(names.size());
  parallel_for(names.size(), options.threads, [&](std::size_t i) { results[i] = run_suite(names[i], options); });
  return results;
}

std::vector<RepresentationRow> compare_representations(const PoissonWavelet& wavelet, std::span<const double> thetas) {
  const double peak = std::abs(wavelet.closed(Colatitude::from_angle(0.0)));
  std::vector<RepresentationRow> rows;
  rows.reserve(thetas.size());
  for (double theta : thetas) {
    const Colatitude c = Colatitude::from_angle(theta);
    RepresentationRow row;
    row.theta = theta;
    row.values = {wavelet.series(c).value, wavelet.closed(c), wavelet.continuation(c), wavelet.multipole_sum(c)};
    for (std::size_t i = 0; i < row.values.size(); ++i)
      for (std::size_t j = i + 1; j < row.values.size(); ++j)
        row.max_pairwise = std::max(row.max_pairwise, std::abs(row.values[i] - row.values[j]) / peak);
    rows.push_back(row);
  }
  return rows;
}

SphereIntegral wavelet_sphere_integral(const PoissonWavelet& wavelet) {
  const SphereContext& ctx = wavelet.spec().context();
  SphereIntegral out;
  out.nodes = static_cast<int>(std::ceil(40.0 / wavelet.spec().scale())) + 10 * wavelet.spec().order() + 50;
  const QuadratureRule rule = gauss_gegenbauer(ctx.lambda(), out.nodes);
  const double area = sphere_area(ctx.dimension() - 1);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = wavelet.closed(Colatitude::from_cosine(rule.nodes[i]));
    out.integral += area * rule.weights[i] * v;
    out.absolute += area * rule.weights[i] * std::abs(v);
  }
  return out;
}

std::vector<double> uniform_thetas(int count) {
  if (count < 2) throw DomainError("theta grid needs at least two points");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = pi * k / (count - 1);
  return out;
}

}  // namespace poisson
