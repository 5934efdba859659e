// Compares the batch layers at several worker counts against the serial
// reference (workers = 1). The Groebner kernel itself is sequential; the
// parallelism lives across independent gin trials and search samples.

#include <benchmark/benchmark.h>

#include "lefkit/arrangement.hpp"
#include "lefkit/gin.hpp"
#include "lefkit/groebner.hpp"
#include "lefkit/text_io.hpp"

namespace {

using namespace lefkit;

Arrangement braid() {
  RingPtr r = RingContext::create_xyzw(3);
  return Arrangement(r, parse_polynomial_list("x, y, z, x - y, x - z, y - z", r));
}

void BM_buchberger_braid_jacobian(benchmark::State& state) {
  Ideal J = jacobian_ideal(braid());
  for (auto _ : state) {
    GroebnerBasis basis = buchberger(J);
    benchmark::DoNotOptimize(basis.elements.size());
  }
}

void BM_rgin_braid(benchmark::State& state) {
  Ideal J = jacobian_ideal(braid());
  GinOptions o;
  o.seed = 42;
  o.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GinResult g = rgin(J, o);
    benchmark::DoNotOptimize(g.trials_used);
  }
}

void BM_conjecture_search(benchmark::State& state) {
  ConjectureSearchParams p;
  p.l = 3;
  p.n_min = 3;
  p.n_max = 6;
  p.count = 40;
  p.seed = 99;
  p.coeff_bound = 5;
  p.workers = static_cast<int>(state.range(0));
  p.gin.workers = 1;
  for (auto _ : state) {
    ConjectureSearchSummary s = run_conjecture_search(p);
    benchmark::DoNotOptimize(s.holds);
  }
}

}  // namespace

BENCHMARK(BM_buchberger_braid_jacobian)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rgin_braid)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conjecture_search)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Arg(8)
    ->Unit(benchmark::kMillisecond)
    ->MeasureProcessCPUTime()
    ->UseRealTime();

BENCHMARK_MAIN();
