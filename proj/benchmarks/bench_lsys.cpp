#include <benchmark/benchmark.h>

#include <random>

#include "lsys/analysis.hpp"
#include "lsys/circuit.hpp"
#include "lsys/coupling.hpp"
#include "lsys/elementary.hpp"

namespace {

using namespace lsys;

/// Chain of n elementary couplings, giving an n x n upper-triangular T.
LSystem chain(int n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  std::uniform_real_distribution<double> im(0.1, 3.0);
  LSystem sys = make_elementary({re(rng), im(rng)}).system;
  for (int k = 1; k < n; ++k) sys = couple(sys, make_elementary({re(rng), im(rng)}).system).system;
  return sys;
}

void BM_TransferResolvent(benchmark::State& state) {
  const LSystem sys = chain(static_cast<int>(state.range(0)));
  const Complex z{0.3, -0.7};
  for (auto _ : state) benchmark::DoNotOptimize(transfer_function(sys, z));
}
BENCHMARK(BM_TransferResolvent)->RangeMultiplier(2)->Range(1, 64);

void BM_ImpedanceResolvent(benchmark::State& state) {
  const LSystem sys = chain(static_cast<int>(state.range(0)));
  const Complex z{0.3, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(impedance_function(sys, z));
}
BENCHMARK(BM_ImpedanceResolvent)->RangeMultiplier(2)->Range(1, 64);

void BM_ClosedFormCouplingTransfer(benchmark::State& state) {
  const RationalFunction w = coupling_transfer({1.0, 1.0}, {-0.5, 2.0});
  const Complex z{0.3, -0.7};
  for (auto _ : state) benchmark::DoNotOptimize(w(z));
}
BENCHMARK(BM_ClosedFormCouplingTransfer);

void BM_EntropySurface(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(entropy_surface(-2.0, 2.0, 0.05, 3.0, 81, 61));
}
BENCHMARK(BM_EntropySurface);

void BM_PartialFractions(benchmark::State& state) {
  FosterSpec spec{1.0, {}};
  for (int k = 0; k < state.range(0); ++k) spec.stages.push_back({1.0 + 0.1 * k, 0.5 + 0.7 * k});
  const RationalFunction m = foster_to_herglotz(spec);
  for (auto _ : state) benchmark::DoNotOptimize(partial_fractions_real_poles(m));
}
BENCHMARK(BM_PartialFractions)->DenseRange(1, 8, 1);

void BM_CayleyRoundTrip(benchmark::State& state) {
  const RationalFunction w = self_skew_transfer({0.4, 1.3});
  for (auto _ : state) benchmark::DoNotOptimize(cayley_v_to_w(cayley_w_to_v(w)));
}
BENCHMARK(BM_CayleyRoundTrip);

}  // namespace

BENCHMARK_MAIN();
