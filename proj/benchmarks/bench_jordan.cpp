#include <benchmark/benchmark.h>

#include <random>

#include "jcf/jcf.hpp"
#include "testkit.hpp"

namespace {

// One nontrivial instance per dimension: eigenvalues -1, 0, 2 with mixed block sizes.
jcf::Mat instance(std::size_t n) {
  using jcf::Rational;
  jcf::testkit::BlockSpec spec;
  const std::size_t third = n / 3;
  spec.pairs.push_back({Rational(0), {third + n % 3}});
  if (third > 0) {
    spec.pairs.push_back({Rational(2), {(third + 1) / 2}});
    if (third / 2 > 0) spec.pairs.back().sizes.push_back(third / 2);
    spec.pairs.push_back({Rational(-1), std::vector<std::size_t>(third, 1)});
  }
  return jcf::testkit::random_similar(spec, 42 + n).a;
}

void BM_CharPoly(benchmark::State& state) {
  const auto a = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jcf::char_poly(a));
}
BENCHMARK(BM_CharPoly)->DenseRange(4, 16, 4);

void BM_JordanForm(benchmark::State& state) {
  const auto a = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jcf::jordan_form(a));
}
BENCHMARK(BM_JordanForm)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_BlockSizes(benchmark::State& state) {
  jcf::testkit::BlockSpec spec{{{jcf::Rational(0), {static_cast<std::size_t>(state.range(0)) - 1, 1}}}};
  const auto a = jcf::testkit::random_similar(spec, 7).a;
  for (auto _ : state) benchmark::DoNotOptimize(jcf::block_sizes(a));
}
BENCHMARK(BM_BlockSizes)->DenseRange(4, 16, 4);

void BM_ExpEigenbasis(benchmark::State& state) {
  const auto a = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jcf::matrix_exp(a));
}
BENCHMARK(BM_ExpEigenbasis)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_ExpJordan(benchmark::State& state) {
  const auto a = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jcf::matrix_exp_jordan(a));
}
BENCHMARK(BM_ExpJordan)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
