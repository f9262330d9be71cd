#pragma once

// Property suites for every module, shared by the `verify` command and the
// tests. A check passes when its measured value is at most its tolerance.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poisson/wavelets.hpp"

namespace poisson {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string module;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
};

struct VerifyOptions {
  /// Thins the grids; every suite and check still runs.
  bool fast = false;
  std::vector<int> dimensions{2, 3, 4, 5};
  std::vector<int> orders{1, 2, 3, 4};
  int threads = 1;
  std::uint64_t seed = 20240917;
};

/// special_functions, quadrature, coefficients, kernels, wavelets, transform, asymptotics.
std::vector<std::string> suite_names();

/// Throws DomainError for an unknown suite name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options);

/// All suites, in suite_names() order regardless of the thread count.
std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

/// The four representations of one wavelet at a colatitude, in the order
/// series, closed, continuation, multipole.
struct RepresentationRow {
  double theta = 0.0;
  std::array<double, 4> values{};
  /// Largest pairwise difference divided by the peak |g(theta = 0)|.
  double max_pairwise = 0.0;
};

std::vector<RepresentationRow> compare_representations(const PoissonWavelet& wavelet, std::span<const double> thetas);

/// int_{S^n} g dsigma and int_{S^n} |g| dsigma by Gauss-Gegenbauer
/// quadrature with enough nodes to resolve the degrees where e^{-a l} is
/// above roundoff.
struct SphereIntegral {
  double integral = 0.0;
  double absolute = 0.0;
  int nodes = 0;
};
SphereIntegral wavelet_sphere_integral(const PoissonWavelet& wavelet);

/// theta_k = pi k / (count - 1), k = 0 .. count-1.
std::vector<double> uniform_thetas(int count);

}  // namespace poisson
