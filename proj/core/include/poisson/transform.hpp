#pragma once

// Continuous wavelet transform of zonal functions with respect to Poisson
// wavelets, its bilinear and linear inversions, the reproducing kernel of
// the bilinear image space and admissibility diagnostics.
//
// Convolution is normalized as (f * g)(x) = (1/Sigma_n) int f(y) g(x.y) dsigma(y),
// under which f * K_l extracts the degree-l part of f. Zonal inputs keep
// every object zonal, so the transform acts degree by degree:
//   (f * G_a)^(l) = f^(l) filter(a l).

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poisson/quadrature.hpp"
#include "poisson/sphere.hpp"
#include "poisson/wavelets.hpp"

namespace poisson {

/// Band-limited zonal function f(t) = sum_{l=0}^{L} coeffs[l] C_l^lambda(t).
struct ZonalFunction {
  SphereContext ctx;
  std::vector<double> coeffs;

  int band_limit() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  double operator()(double t) const;
  std::vector<double> sample(std::span<const double> cosines) const;

  /// Degree-l Gegenbauer coefficients up to band_limit from samples at the
  /// nodes of a Gegenbauer rule of the same lambda.
  static ZonalFunction project(const SphereContext& ctx, const QuadratureRule& rule, std::span<const double> samples,
                               int band_limit);
  /// Coefficients uniform in [-1, 1] for l = 1..band_limit, zero at l = 0.
  static ZonalFunction random(const SphereContext& ctx, int band_limit, std::uint64_t seed);
};

/// L2(S^n) norm under <f, g> = (1/Sigma_n) int f g dsigma.
double l2_norm(const ZonalFunction& f);
/// ||f - g|| / ||f||.
double relative_l2_error(const ZonalFunction& reference, const ZonalFunction& other);

/// Coefficient of K_l in the wavelet of the given flavor at argument a*l:
/// psi_m (bilinear), gamma_m (linear) or t^m e^{-t} / Sigma_n (raw).
double flavor_filter(Flavor flavor, const SphereContext& ctx, int m, double t);

/// Transform samples on a scale grid. The spectral block holds the degree-l
/// coefficients of W(a_i, .) (rows: scales, columns: degrees); the spatial
/// block holds W(a_i, t_j) at the listed cosines.
struct TransformField {
  SphereContext ctx;
  int order = 1;
  Flavor flavor = Flavor::bilinear;
  ScaleGrid grid;
  std::optional<Eigen::MatrixXd> spectral;
  std::vector<double> cosines;
  std::optional<Eigen::MatrixXd> spatial;

  /// W(a_i, t) from the spectral block.
  double spectral_value(std::size_t scale_index, double t) const;
  /// Fills the spatial block at the given cosines from the spectral block.
  void render(std::span<const double> at);
};

/// Degree-wise transform of a zonal function on a scale grid (the scale of
/// spec is ignored; its order and flavor are used).
TransformField forward_spectral(const ZonalFunction& f, const WaveletSpec& spec, const ScaleGrid& grid);

struct SpatialConvolution {
  std::vector<double> values;
  std::optional<std::string> warning;
};

/// (f * g)(cos theta_x) by direct integration over the sphere for zonal f
/// and g, in polar coordinates about the pole: the colatitude theta_y of y
/// and the angle phi between the meridians of x and y. Both integrals use
/// composite Gauss-Legendre panels graded toward the peak of g at y = x;
/// width is the smallest feature size of g. kernel receives the angle
/// between x and y.
template <typename F, typename Kernel>
std::vector<double> zonal_convolution(const SphereContext& ctx, F&& f, Kernel&& kernel,
                                      std::span<const double> output_cosines, double width, int panel_nodes = 24);

/// Spatial oracle for forward_spectral at one scale: f * G_a evaluated by
/// quadrature. f is given by samples at the nodes of rule and is recovered
/// up to degree rule.size() - 1; a warning is raised when that does not
/// cover the stated band limit.
SpatialConvolution forward_spatial(const SphereContext& ctx, std::span<const double> f_samples,
                                   const QuadratureRule& rule, const PoissonWavelet& wavelet,
                                   std::span<const double> output_cosines, int band_limit);
SpatialConvolution forward_spatial(const ZonalFunction& f, const PoissonWavelet& wavelet, const QuadratureRule& rule,
                                   std::span<const double> output_cosines);

struct Reconstruction {
  ZonalFunction function;
  /// Grid approximation of the per-degree synthesis factor.
  std::vector<double> degree_factor;
  /// Degree 0 is annihilated by every filter and cannot be recovered.
  bool degree0_dropped = true;
  std::string path;  // "spectral" or "spatial"
};

/// f(x) = int (W(a, .) * G_a)(x) da/a on the grid. Accepts bilinear or raw
/// transforms; a raw transform is synthesized with g_a and the constant
/// 4^m Sigma_n^2 / Gamma(2m). Uses the spectral block when present,
/// otherwise projects the spatial block (requires rule).
Reconstruction invert_bilinear(const TransformField& field, const QuadratureRule* rule = nullptr,
                               int band_limit = -1);

/// f(x) = int W(a, x) da/a on the grid. Accepts linear or raw transforms; a
/// raw transform uses the constant Sigma_n / Gamma(m).
Reconstruction invert_linear(const TransformField& field, const QuadratureRule* rule = nullptr,
                             int band_limit = -1);

/// Exact value of the per-degree factor restricted to [a_min, a_max]
/// (regularized incomplete Gamma functions), and its distance from 1.
double predicted_degree_factor(Flavor flavor, int m, int l, double a_min, double a_max);
double predicted_degree_deviation(Flavor flavor, int m, int l, double a_min, double a_max);

struct ReconstructionReport {
  std::vector<std::optional<double>> per_degree_ratio;
  std::vector<double> predicted_ratio;
  double l2_error = 0.0;
  double predicted_residual = 0.0;
  double dropped_degree0 = 0.0;
};

ReconstructionReport reconstruction_report(const ZonalFunction& original, const Reconstruction& reconstruction,
                                           const ScaleGrid& grid, int m, Flavor flavor);

/// Reproducing kernel of the bilinear image space,
/// Pi^m(a, x; b, y) = sqrt(Gamma(4m))/Gamma(2m) (ab)^m/(a+b)^{2m} G_{a+b}^{2m}(x.y).
class ReproducingKernel {
 public:
  ReproducingKernel(const SphereContext& ctx, int m);

  double closed(double a, double b, const Colatitude& c) const;
  /// sum_l psi_m(a l) psi_m(b l) K_l(t).
  SeriesValue spectral(double a, double b, double t, const SeriesOptions& options = {}) const;

 private:
  SphereContext ctx_;
  int m_;
  std::shared_ptr<const WaveletTables> doubled_;
};

/// Admissibility diagnostics for the bilinear family G_a^m.
struct AdmissibilityOptions {
  double r_min = 1e-3;
  double r_max = 10.0;
  int r_count = 41;
  int panel_nodes = 24;
};

struct AdmissibilityReport {
  int order = 1;
  int dimension = 2;
  /// int_0^inf psi_m(t)^2 dt/t, numerically.
  double filter_energy = 0.0;
  /// Coefficients of W_m in int_x^inf psi_m(u)^2 du/u = W_m(x) e^{-2x}.
  std::vector<double> tail_polynomial;
  /// Largest |W_m(x) e^{-2x} - numeric tail| over the check points.
  double tail_max_error = 0.0;
  std::vector<double> r_grid;
  std::vector<double> l1_norms;
  double l1_sup = 0.0;
  /// Same sup on a doubled R grid with refined colatitude quadrature.
  double l1_sup_refined = 0.0;
  double refinement_change = 0.0;
};

/// Coefficients of W_m by repeated integration by parts.
std::vector<double> tail_polynomial(int m);

/// int_{-1}^{1} |sum_l phi_m(R l) K_l(t)| (1-t^2)^(lambda-1/2) dt, with the
/// sum evaluated as Sigma_n [p_{e^{-2R}} + sum_{k=1}^{2m-1} g_{2R}^k / k!].
double approximate_identity_l1(const SphereContext& ctx, int m, double R, int panel_nodes = 24);

AdmissibilityReport admissibility_report(int m, int n, const AdmissibilityOptions& options = {});

// ---------------------------------------------------------------- template

template <typename F, typename Kernel>
std::vector<double> zonal_convolution(const SphereContext& ctx, F&& f, Kernel&& kernel,
                                      std::span<const double> output_cosines, double width, int panel_nodes) {
  const double pi = 3.14159265358979323846;
  const double first = std::min(0.25 * width, 0.1);
  const QuadratureRule legendre = gauss_legendre(panel_nodes);
  const double twice_lambda = ctx.twice_lambda();
  const double scale = sphere_area(ctx.dimension() - 2) / ctx.area();
  const std::vector<double> ring_breaks = graded_breakpoints(0.0, pi, first);
  std::vector<double> out(output_cosines.size());
  for (std::size_t o = 0; o < output_cosines.size(); ++o) {
    const double theta_x = std::acos(clamp_cosine(output_cosines[o]));
    const double sx = std::sin(theta_x);
    // Panels graded toward theta_x from both sides.
    std::vector<double> breaks;
    if (theta_x > 0.0) {
      for (double d : graded_breakpoints(0.0, theta_x, first)) breaks.insert(breaks.begin(), theta_x - d);
      breaks.pop_back();
    }
    if (theta_x < pi) {
      const std::vector<double> right = graded_breakpoints(theta_x, pi, first);
      breaks.insert(breaks.end(), right.begin(), right.end());
    } else {
      breaks.push_back(pi);
    }
    auto outer = [&](double theta_y) {
      const double sy = std::sin(theta_y);
      const double half = std::sin(0.5 * (theta_x - theta_y));
      auto inner = [&](double phi) {
        const double h = std::sin(0.5 * phi);
        // 1 - x.y = 2 sin^2((theta_x - theta_y)/2) + 2 sin theta_x sin theta_y sin^2(phi/2)
        const double one_minus = 2.0 * half * half + 2.0 * sx * sy * h * h;
        return kernel(Colatitude{1.0 - one_minus, one_minus}) * std::pow(std::sin(phi), twice_lambda - 1.0);
      };
      return f(std::cos(theta_y)) * std::pow(sy, twice_lambda) * integrate_panels(inner, ring_breaks, legendre);
    };
    out[o] = scale * integrate_panels(outer, breaks, legendre);
  }
  return out;
}

}  // namespace poisson
