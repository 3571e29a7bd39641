#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "scgame/compiler.hpp"
#include "scgame/distillation.hpp"
#include "scgame/factory_sim.hpp"
#include "scgame/game.hpp"
#include "scgame/stab_oracle.hpp"

namespace scg {
namespace {

void BM_UndetectedEnumeration(benchmark::State& state) {
  auto code = reed_muller15();
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_undetected(code, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_UndetectedEnumeration)->Arg(3)->Arg(4);

void BM_DetectionAnalysis(benchmark::State& state) {
  auto code = reed_muller15();
  for (auto _ : state) benchmark::DoNotOptimize(analyze_detection(code, 1e-4));
}
BENCHMARK(BM_DetectionAnalysis);

void BM_TableauRandomCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  for (auto _ : state) {
    Tableau t(n);
    for (int i = 0; i < 200; ++i) {
      int q = static_cast<int>(rng() % n);
      switch (rng() % 4u) {
        case 0: t.h(q); break;
        case 1: t.s(q); break;
        case 2: t.cx(q, (q + 1) % n); break;
        case 3: t.measure_z(q, static_cast<int>(rng() & 1u)); break;
      }
    }
    benchmark::DoNotOptimize(t.canonical_stabilizers());
  }
}
BENCHMARK(BM_TableauRandomCircuit)->Arg(16)->Arg(64);

void BM_CompileAndRun(benchmark::State& state) {
  auto circ = random_clifford_circuit(static_cast<int>(state.range(0)), 80, 11);
  for (auto _ : state) {
    auto lowered = compile_circuit(circ, CompilerConfig{});
    auto res = run_schedule(lowered.placement.grid, lowered.ops, GameConfig{},
                            pinned_durations());
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_CompileAndRun)->Arg(4)->Arg(8);

void BM_TFactory(benchmark::State& state) {
  auto cfg = FactoryConfig::defaults();
  cfg.n_mb = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_t_factory(cfg));
}
BENCHMARK(BM_TFactory)->Arg(1)->Arg(4);

void BM_RouteHeavySchedule(benchmark::State& state) {
  // One cell zig-zags across an otherwise empty row.
  std::ostringstream text;
  text << "prep 0 0 zero\n";
  for (int i = 0; i < 40; ++i) {
    text << "route " << (i % 2 ? 7 : 0) << " 0 " << (i % 2 ? 0 : 7) << " 0\n";
    text << "se " << (i % 2 ? 0 : 7) << " 0\n";
  }
  std::istringstream in(text.str());
  Schedule sched = parse_schedule(in);
  for (auto _ : state) {
    auto res = run_schedule(make_grid(8, 1), sched, GameConfig{}, pinned_durations());
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_RouteHeavySchedule);

}  // namespace
}  // namespace scg

BENCHMARK_MAIN();
