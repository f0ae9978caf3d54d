// Serial reference vs OpenMP kernels on the census, the lemma suite and the
// counterexample search. Arg 0 runs serially, arg 1 in parallel.

#include <benchmark/benchmark.h>

#include "shq/checks.hpp"

using namespace shq;

namespace {

Exec policy(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_Scan(benchmark::State& state) {
  ScanOptions o;
  o.max_order = 8;
  o.cap = 2000;
  o.exec = policy(state);
  for (auto _ : state) {
    ScanReport r = scan_equivalence(o);
    benchmark::DoNotOptimize(r.rows.size());
  }
}

void BM_ScanAudit(benchmark::State& state) {
  ScanOptions o;
  o.max_order = 6;
  o.audit = AuditOptions{};
  o.exec = policy(state);
  for (auto _ : state) {
    ScanReport r = scan_equivalence(o);
    benchmark::DoNotOptimize(r.audit->searches);
  }
}

void BM_LemmaSuite(benchmark::State& state) {
  InstanceBounds b;
  b.cap = 200;
  for (auto _ : state) {
    LemmaSuite s = run_lemma_suite(LemmaId::T1_3, b, policy(state));
    benchmark::DoNotOptimize(s.reports.size());
  }
}

void BM_Search(benchmark::State& state) {
  CounterexampleOptions o;
  o.exec = policy(state);
  for (auto _ : state) {
    CounterexampleResult r = search_counterexample(o);
    benchmark::DoNotOptimize(r.graphs);
  }
}

}  // namespace

BENCHMARK(BM_Scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanAudit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LemmaSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Search)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
