#include <benchmark/benchmark.h>

#include <random>

#include "homcalc/homology.hpp"
#include "homcalc/io.hpp"
#include "homcalc/verifier.hpp"

using namespace homcalc;

namespace {

HomAlgebra fixture(const std::string& name) {
  return to_algebra(load_algebra_spec(std::string(HOMCALC_FIXTURES_DIR) + "/" + name + ".json"));
}

void BM_rref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  Matrix m(n, n);
  for (auto& e : m.a) e = Rational(static_cast<long>(rng() % 7) - 3);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(16)->Arg(32)->Arg(64);

void BM_coboundary(benchmark::State& state) {
  HomAlgebra alg = fixture("dual_numbers_twist_2");
  std::mt19937_64 rng(2);
  Cochain f = random_cochain(alg, static_cast<int>(state.range(0)), rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(delta_alpha(alg, f));
}
BENCHMARK(BM_coboundary)->Arg(2)->Arg(3)->Arg(4);

void BM_cohomology_complex(benchmark::State& state) {
  HomAlgebra alg = fixture(state.range(0) == 2 ? "dual_numbers_twist_2" : "poly_x3_twist");
  for (auto _ : state) {
    CochainComplex cc(alg, 3);
    benchmark::DoNotOptimize(cc.cohomology(3).dim());
  }
}
BENCHMARK(BM_cohomology_complex)->Arg(2)->Arg(3);

void BM_chain_complex_normalized(benchmark::State& state) {
  HomAlgebra alg = fixture("dual_numbers_twist_2");
  for (auto _ : state) {
    ChainComplex mc(alg, static_cast<int>(state.range(0)), true);
    benchmark::DoNotOptimize(mc.homology(static_cast<int>(state.range(0))).dim());
  }
}
BENCHMARK(BM_chain_complex_normalized)->Arg(3)->Arg(4);

void BM_suite_operad(benchmark::State& state) {
  HomAlgebra alg = fixture("kxk_swap");
  Caps caps;
  caps.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(suite_operad(alg, caps, 42).passed());
}
BENCHMARK(BM_suite_operad)->Arg(10)->Arg(100);

void BM_connes_operator(benchmark::State& state) {
  HomAlgebra alg = fixture("dual_numbers_twist_2");
  std::mt19937_64 rng(3);
  Chain x = random_chain(alg, static_cast<int>(state.range(0)), rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(connes_B(alg, x));
}
BENCHMARK(BM_connes_operator)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
