#include <benchmark/benchmark.h>

#include "ortholog/downset.hpp"
#include "ortholog/universal.hpp"

using namespace ortholog;

namespace {

std::shared_ptr<const DownsetEngine> engine_for(const char* name, int kappa) {
  return make_engine(std::vector<OrthoLattice>(static_cast<std::size_t>(kappa), catalog_by_name(name)));
}

std::vector<DownSet> corpus(const DownsetEngine& e, int n) {
  Rng rng(1);
  std::vector<DownSet> out;
  for (int i = 0; i < n; ++i) out.push_back(e.random_downset(rng, 6));
  return out;
}

void BM_Star(benchmark::State& state) {
  const auto e = engine_for("MO3", static_cast<int>(state.range(0)));
  const auto xs = corpus(*e, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e->star(xs[i++ % xs.size()]));
  }
}
BENCHMARK(BM_Star)->Arg(1)->Arg(2)->Arg(3);

void BM_StarChoiceFn(benchmark::State& state) {
  const auto e = engine_for("MO3", static_cast<int>(state.range(0)));
  const auto xs = corpus(*e, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e->star_choicefn(xs[i++ % xs.size()]));
  }
}
BENCHMARK(BM_StarChoiceFn)->Arg(1)->Arg(2)->Arg(3);

void BM_Closure(benchmark::State& state) {
  const auto e = engine_for("B2", static_cast<int>(state.range(0)));
  const auto xs = corpus(*e, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e->closure(xs[i++ % xs.size()]));
  }
}
BENCHMARK(BM_Closure)->Arg(2)->Arg(4)->Arg(6);

void BM_Maximals(benchmark::State& state) {
  const auto e = engine_for("B2", 5);
  const auto xs = corpus(*e, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e->maximals(xs[i++ % xs.size()]));
  }
}
BENCHMARK(BM_Maximals);

}  // namespace
