#include <benchmark/benchmark.h>

#include "mahlerlab/functions.hpp"
#include "mahlerlab/identities.hpp"
#include "mahlerlab/liouville.hpp"
#include "mahlerlab/mahler.hpp"
#include "mahlerlab/maillet.hpp"

namespace {

using namespace mahlerlab;

void BM_WnSearchSqrt2(benchmark::State& state) {
  const NumberSpec x = parse_number("sqrt:2/1");
  const Integer H(state.range(0));
  SearchOptions one;
  one.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(wn_search(x, 1, H, kDefaultPrecision, one));
}
BENCHMARK(BM_WnSearchSqrt2)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMillisecond);

void BM_WnSearchPi(benchmark::State& state) {
  const NumberSpec x = parse_number("pi");
  const Integer H(state.range(0));
  SearchOptions one;
  one.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(wn_search(x, 2, H, kDefaultPrecision, one));
}
BENCHMARK(BM_WnSearchPi)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_WnNaiveVsSearch(benchmark::State& state) {
  const NumberSpec x = parse_number("rational:5/7");
  SearchOptions one;
  one.threads = 1;
  for (auto _ : state) {
    if (state.range(0) == 0) {
      benchmark::DoNotOptimize(wn_naive(x, 2, Integer(12), kDefaultPrecision, one));
    } else {
      benchmark::DoNotOptimize(wn_search(x, 2, Integer(12), kDefaultPrecision, one));
    }
  }
}
BENCHMARK(BM_WnNaiveVsSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FindWitness(benchmark::State& state) {
  const LacunaryNumber l = LacunaryNumber::liouville(10);
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(l, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_FindWitness)->DenseRange(2, 6, 2);

void BM_EvalSin(benchmark::State& state) {
  const Precision p = state.range(0);
  const ComplexBall z(to_ball(parse_number("rational:1/3"), p + 64));
  for (auto _ : state) benchmark::DoNotOptimize(eval_fn(FunctionTag::kSin, z, p));
}
BENCHMARK(BM_EvalSin)->RangeMultiplier(4)->Range(64, 4096);

void BM_VerifyIdentity(benchmark::State& state) {
  const NumberSpec a = parse_number("rational:1/3");
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity("arcsin-dependence", a, 256));
}
BENCHMARK(BM_VerifyIdentity)->Unit(benchmark::kMillisecond);

void BM_Maillet(benchmark::State& state) {
  const LacunaryNumber l = LacunaryNumber::liouville(10);
  const RationalFunction r = RationalFunction::cosh_transform();
  for (auto _ : state) benchmark::DoNotOptimize(image_exponent_experiment(r, l, {1, 2, 3, 4}, 512));
}
BENCHMARK(BM_Maillet)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
