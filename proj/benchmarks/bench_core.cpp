#include <benchmark/benchmark.h>

#include "bohrkit/functionals.hpp"
#include "bohrkit/matrix.hpp"
#include "bohrkit/sampling.hpp"
#include "bohrkit/series.hpp"

namespace {

void BM_SpectralNorm(benchmark::State& state) {
  bohr::Rng rng(1);
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto m = bohr::random_contraction(rng, d, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(bohr::spectral_norm(m));
}
BENCHMARK(BM_SpectralNorm)->Arg(1)->Arg(4)->Arg(8);

void BM_CircleSupNorm(benchmark::State& state) {
  bohr::SampleOptions so;
  so.dim = static_cast<std::size_t>(state.range(0));
  bohr::SchurSampler sampler(1, so);
  sampler.next();
  const auto s = sampler.next();
  for (auto _ : state) benchmark::DoNotOptimize(bohr::circle_sup_norm(s, 1.0 / 3.0).value);
}
BENCHMARK(BM_CircleSupNorm)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MobiusSchur(benchmark::State& state) {
  bohr::Rng rng(2);
  const auto g = bohr::random_colligation(rng, 4, 128, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(bohr::mobius_schur(0.5, g, 128).order());
}
BENCHMARK(BM_MobiusSchur)->Unit(benchmark::kMillisecond);

void BM_FunctionalValue(benchmark::State& state) {
  bohr::SchurSampler sampler(3, bohr::SampleOptions{});
  sampler.next();
  const auto s = sampler.next();
  for (auto _ : state) benchmark::DoNotOptimize(bohr::functional_value(bohr::kind::M{2}, s, 1.0 / 3.0).value);
}
BENCHMARK(BM_FunctionalValue)->Unit(benchmark::kMillisecond);

}  // namespace

// libbenchmark_main.a ships as LTO bytecode tied to one compiler build, so main lives here.
BENCHMARK_MAIN();
