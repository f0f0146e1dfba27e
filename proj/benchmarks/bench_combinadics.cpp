#include <benchmark/benchmark.h>

#include "combinadics/binomial.hpp"
#include "combinadics/combinadic.hpp"
#include "combinadics/combination.hpp"
#include "combinadics/natural.hpp"
#include "combinadics/verify.hpp"

namespace {

using combinadics::binomial;
using combinadics::ColexStream;
using combinadics::Combinadic;
using combinadics::decode;
using combinadics::encode;
using combinadics::Natural;
using combinadics::rank;
using combinadics::successor;
using combinadics::sweep_uniqueness;
using combinadics::unrank;

Natural pow10(int exponent) {
  Natural v = 1;
  for (int i = 0; i < exponent; ++i) v *= 10;
  return v;
}

void BM_Binomial(benchmark::State& state) {
  const Natural n(static_cast<unsigned long long>(state.range(0)));
  const Natural r(static_cast<unsigned long long>(state.range(0) / 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binomial(n, r));
  }
}
BENCHMARK(BM_Binomial)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096);

void BM_Encode(benchmark::State& state) {
  const Natural m = pow10(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(m, 8));
  }
}
BENCHMARK(BM_Encode)->Arg(3)->Arg(6)->Arg(12)->Arg(24)->Arg(48);

void BM_Decode(benchmark::State& state) {
  const Combinadic rep = encode(pow10(static_cast<int>(state.range(0))), 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode(rep));
  }
}
BENCHMARK(BM_Decode)->Arg(3)->Arg(6)->Arg(12)->Arg(24)->Arg(48);

void BM_Successor(benchmark::State& state) {
  Combinadic current = encode(pow10(9), 8);
  for (auto _ : state) {
    current = successor(current);
    benchmark::DoNotOptimize(current);
  }
}
BENCHMARK(BM_Successor);

void BM_StreamAdvance(benchmark::State& state) {
  ColexStream stream(8, pow10(9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stream.next());
  }
}
BENCHMARK(BM_StreamAdvance);

void BM_Rank(benchmark::State& state) {
  const auto comb = unrank(pow10(static_cast<int>(state.range(0))), 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(comb));
  }
}
BENCHMARK(BM_Rank)->Arg(6)->Arg(12)->Arg(24);

void BM_Unrank(benchmark::State& state) {
  const Natural x = pow10(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(unrank(x, 10));
  }
}
BENCHMARK(BM_Unrank)->Arg(6)->Arg(12)->Arg(24);

void BM_SweepUniqueness(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_uniqueness(3, 20));
  }
}
BENCHMARK(BM_SweepUniqueness);

}  // namespace

BENCHMARK_MAIN();
