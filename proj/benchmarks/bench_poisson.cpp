#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "poisson/coefficients.hpp"
#include "poisson/quadrature.hpp"
#include "poisson/transform.hpp"
#include "poisson/verify.hpp"

using namespace poisson;

namespace {

// Args: order m, scale a in thousandths.
void evaluate(benchmark::State& state, Representation repr) {
  const PoissonWavelet g(WaveletSpec(SphereContext(3), static_cast<int>(state.range(0)), state.range(1) * 1e-3));
  const std::vector<double> thetas = uniform_thetas(64);
  for (auto _ : state) {
    double sum = 0.0;
    for (double theta : thetas) sum += g.evaluate(Colatitude::from_angle(theta), repr);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(thetas.size()));
}

void BM_Series(benchmark::State& s) { evaluate(s, Representation::series); }
void BM_Closed(benchmark::State& s) { evaluate(s, Representation::closed); }
void BM_Continuation(benchmark::State& s) { evaluate(s, Representation::continuation); }
void BM_Multipole(benchmark::State& s) { evaluate(s, Representation::multipole); }

void representation_args(benchmark::internal::Benchmark* b) {
  for (int m : {1, 4})
    for (int a : {50, 500}) b->Args({m, a});
}

BENCHMARK(BM_Series)->Apply(representation_args);
BENCHMARK(BM_Closed)->Apply(representation_args);
BENCHMARK(BM_Continuation)->Apply(representation_args);
BENCHMARK(BM_Multipole)->Apply(representation_args);

void BM_ClosedExtendedPrecision(benchmark::State& state) {
  const PoissonWavelet g(WaveletSpec(SphereContext(3), 6, 1e-3));
  for (auto _ : state) benchmark::DoNotOptimize(g.closed(Colatitude::from_angle(1e-3)));
}
BENCHMARK(BM_ClosedExtendedPrecision);

void BM_GaussGegenbauer(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gauss_gegenbauer(1.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussGegenbauer)->RangeMultiplier(4)->Range(16, 1024);

void BM_RTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_r_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RTable)->DenseRange(2, 10, 4);

void BM_ForwardInverse(benchmark::State& state) {
  const SphereContext ctx(2);
  const ZonalFunction f = ZonalFunction::random(ctx, static_cast<int>(state.range(0)), 20240917);
  const ScaleGrid grid = log_scale_grid(1e-4, 50.0, 400);
  for (auto _ : state) {
    const TransformField field = forward_spectral(f, WaveletSpec(ctx, 2, 1.0, Flavor::bilinear), grid);
    benchmark::DoNotOptimize(invert_bilinear(field));
  }
}
BENCHMARK(BM_ForwardInverse)->Arg(10)->Arg(100);

void BM_SpatialConvolution(benchmark::State& state) {
  const SphereContext ctx(2);
  const ZonalFunction f = ZonalFunction::random(ctx, 8, 1);
  const QuadratureRule rule = gauss_gegenbauer(ctx.lambda(), 10);
  const PoissonWavelet g(WaveletSpec(ctx, 2, state.range(0) * 1e-3, Flavor::bilinear));
  const std::vector<double> out{1.0, 0.3, -0.8};
  for (auto _ : state) benchmark::DoNotOptimize(forward_spatial(f, g, rule, out));
}
BENCHMARK(BM_SpatialConvolution)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
