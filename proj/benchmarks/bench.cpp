#include <random>

#include <benchmark/benchmark.h>

#include "trop/descartes.hpp"
#include "trop/multiplicity.hpp"

using namespace trop;

namespace {

TPoly random_tpoly(std::mt19937_64& rng, unsigned deg) {
  std::uniform_int_distribution<int> c(-50, 50);
  TPoly p;
  for (unsigned k = 0; k <= deg; ++k) p.set(k, GVal::fin(rat(c(rng), 7)));
  return p;
}

SPoly random_signed(std::mt19937_64& rng, unsigned deg, bool bs) {
  std::uniform_int_distribution<int> m(-4, 4), s(0, 1);
  SPoly p;
  for (unsigned k = 0; k <= deg; ++k) {
    Rational mag = bs ? Rational(0) : rat(m(rng), 2);
    p.set(k, s(rng) ? SVal::pos(mag) : SVal::neg(mag));
  }
  return p;
}

void BM_Corners(benchmark::State& state) {
  std::mt19937_64 rng(1);
  TPoly p = random_tpoly(rng, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(corners(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Corners)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  TPoly p = random_tpoly(rng, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(p));
}
BENCHMARK(BM_CanonicalForm)->RangeMultiplier(4)->Range(4, 64);

void BM_MultSignChanges(benchmark::State& state) {
  std::mt19937_64 rng(3);
  SPoly p = random_signed(rng, static_cast<unsigned>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(mult(p, SVal::one()));
}
BENCHMARK(BM_MultSignChanges)->DenseRange(2, 8, 2);

void BM_MultOracle(benchmark::State& state) {
  std::mt19937_64 rng(3);
  BsPoly q = to_bs_poly(random_signed(rng, static_cast<unsigned>(state.range(0)), true));
  for (auto _ : state) {
    BsOracle oracle;  // fresh memo each time
    benchmark::DoNotOptimize(oracle.mult(q, BsVal::One));
  }
}
BENCHMARK(BM_MultOracle)->DenseRange(2, 8, 2);

void BM_VerifyDescartes(benchmark::State& state) {
  std::mt19937_64 rng(4);
  SPoly p = random_signed(rng, static_cast<unsigned>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(verify_descartes(p));
}
BENCHMARK(BM_VerifyDescartes)->DenseRange(2, 8, 2);

}  // namespace
BENCHMARK_MAIN();
