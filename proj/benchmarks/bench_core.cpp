#include <benchmark/benchmark.h>

#include <cmath>

#include "frameforge/envelopes.hpp"
#include "frameforge/frames.hpp"
#include "frameforge/hermite.hpp"
#include "frameforge/linalg.hpp"
#include "frameforge/series.hpp"

namespace ff = frameforge;

namespace {

ff::Matrix decaying(ff::Index n, double gamma) {
  return ff::Matrix::NullaryExpr(n, n, [gamma](ff::Index i, ff::Index j) {
    return ff::Complex(std::exp(-gamma * std::abs(static_cast<double>(i - j))));
  });
}

void BM_SpectralNorm(benchmark::State& state) {
  const ff::Matrix a = decaying(state.range(0), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(ff::spectral_norm(a));
}
BENCHMARK(BM_SpectralNorm)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_PSeries(benchmark::State& state) {
  const double beta = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ff::p_series(0.5, beta));
}
BENCHMARK(BM_PSeries)->DenseRange(1, 3);

void BM_HermiteContext(benchmark::State& state) {
  for (auto _ : state) {
    ff::HermiteContext ctx(state.range(0));
    benchmark::DoNotOptimize(ctx.nodes().data());
  }
}
BENCHMARK(BM_HermiteContext)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Project(benchmark::State& state) {
  static const ff::HermiteContext ctx(512);
  for (auto _ : state) benchmark::DoNotOptimize(ff::project(ctx, ff::Gaussian{3.0}, state.range(0)));
}
BENCHMARK(BM_Project)->Arg(128)->Arg(512);

void BM_CanonicalDual(benchmark::State& state) {
  const auto spec = ff::PerturbationSpec::constant(1, 0.5);
  for (auto _ : state) {
    const auto e = ff::build_perturbed_basis(spec, state.range(0)).system;
    benchmark::DoNotOptimize(ff::canonical_dual(e).entries().data());
  }
}
BENCHMARK(BM_CanonicalDual)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_MembershipConstant(benchmark::State& state) {
  const ff::TruncatedMatrix a(decaying(state.range(0), 1.0));
  const auto env = ff::DecayEnvelope::poly_star(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(ff::membership_constant(a, env));
}
BENCHMARK(BM_MembershipConstant)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMicrosecond);

void BM_SchurBound(benchmark::State& state) {
  const ff::TruncatedMatrix a(decaying(state.range(0), 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(ff::schur_bound(a, 2.0));
}
BENCHMARK(BM_SchurBound)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
