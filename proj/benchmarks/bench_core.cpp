#include <benchmark/benchmark.h>

#include <cmath>

#include "sl3/endoscopy.hpp"
#include "sl3/orbital.hpp"
#include "sl3/roots.hpp"
#include "sl3/testfn.hpp"
#include "sl3/trace_finite.hpp"

using namespace sl3;

static void BM_WeylQuotient(benchmark::State& state) {
  const Weight lambda(static_cast<int>(state.range(0)), 1, 0);
  const TorusPoint z{std::polar(1.0, 0.4), std::polar(1.0, 1.3), std::polar(1.0, -1.7)};
  for (auto _ : state) benchmark::DoNotOptimize(weyl_character_quotient(lambda, z));
}
BENCHMARK(BM_WeylQuotient)->Arg(2)->Arg(8)->Arg(32);

static void BM_KAverageEval(benchmark::State& state) {
  const KAveragedFunction F = k_average(make_bump(GroupElement(), 2.0, {1.0, 0.3}), static_cast<int>(state.range(0)));
  const Mat3 g = so2_orbit_point(1.3, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(F(g));
}
BENCHMARK(BM_KAverageEval)->Arg(8)->Arg(12);

static void BM_EllipticClosed(benchmark::State& state) {
  const auto g = EllipticElement::make(2, 1, 0.5);
  const TestFunction f = make_bump(GroupElement(g.matrix()), 0.6, {1.0, 0.5});
  QuadratureSpec s;
  s.rel_tol = 1e-6;
  for (auto _ : state) benchmark::DoNotOptimize(orbital_integral_elliptic_closed(f, g, s).value);
}
BENCHMARK(BM_EllipticClosed)->Unit(benchmark::kMillisecond);

static void BM_SL2ConventionScan(benchmark::State& state) {
  std::vector<double> grid;
  for (int i = 0; i < 10; ++i) grid.push_back(0.2 + 0.27 * i);
  for (auto _ : state) benchmark::DoNotOptimize(convention_search_sl2(3, grid).best);
}
BENCHMARK(BM_SL2ConventionScan);

static void BM_FiniteTrace(benchmark::State& state) {
  const auto m = finite_model("sl2f3-borel");
  const auto f = finite_function(m, "random:7");
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_side(m, f));
    benchmark::DoNotOptimize(spectral_side(m, f));
  }
}
BENCHMARK(BM_FiniteTrace);

BENCHMARK_MAIN();
