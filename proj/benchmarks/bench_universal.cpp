#include <benchmark/benchmark.h>

#include "ortholog/classical.hpp"
#include "ortholog/universal.hpp"

using namespace ortholog;

namespace {

void enumerate(benchmark::State& state, const char* name) {
  const auto kappa = static_cast<std::size_t>(state.range(0));
  const auto e = make_engine(std::vector<OrthoLattice>(kappa, catalog_by_name(name)));
  int size = 0;
  for (auto _ : state) {
    const auto u = enumerate_universal(e);
    size = u.size();
  }
  state.counters["carrier"] = size;
}

void BM_EnumerateB2(benchmark::State& state) { enumerate(state, "B2"); }
BENCHMARK(BM_EnumerateB2)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EnumerateMO2(benchmark::State& state) { enumerate(state, "MO2"); }
BENCHMARK(BM_EnumerateMO2)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_LogicAxiomsMO2Sq(benchmark::State& state) {
  const auto u = enumerate_universal(make_engine({catalog_by_name("MO2"), catalog_by_name("MO2")}));
  for (auto _ : state) benchmark::DoNotOptimize(verify_logic_axioms(u));
}
BENCHMARK(BM_LogicAxiomsMO2Sq)->Unit(benchmark::kMillisecond);

void BM_ClassicalAlgebra(benchmark::State& state) {
  const auto e = catalog_by_name("B2");
  for (auto _ : state) benchmark::DoNotOptimize(build_classical(e, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_ClassicalAlgebra)->Arg(2)->Arg(3)->Arg(4);

}  // namespace
