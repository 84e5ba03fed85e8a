#include <benchmark/benchmark.h>

#include "hypervar/analysis.hpp"
#include "hypervar/catalog.hpp"
#include "hypervar/free_algebra.hpp"
#include "hypervar/green_rees.hpp"
#include "hypervar/models.hpp"

using namespace hypervar;

namespace {

  VarietyPresentation fresh(std::string_view name) {
    auto const& v = catalog_variety(name);
    return {v.name(),        v.signature(),          v.base(),
            v.extra_basis(), v.generating_algebras(), v.generators_declared()};
  }

  void BM_FreeBand(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
      benchmark::DoNotOptimize(free_band(n).size());
  }
  BENCHMARK(BM_FreeBand)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

  // Band route: congruence closure over F_B(3).
  void BM_CongruenceQuotient(benchmark::State& state) {
    auto v = fresh(state.range(0) == 0 ? "W2" : "V3");
    for (auto _ : state)
      benchmark::DoNotOptimize(compute_free_algebra(v, 3).size());
  }
  BENCHMARK(BM_CongruenceQuotient)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  // Generator route on the two-element Boolean algebra.
  void BM_GeneratorRoute(benchmark::State& state) {
    auto v = fresh("BA");
    auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
      benchmark::DoNotOptimize(compute_free_algebra(v, n).size());
  }
  BENCHMARK(BM_GeneratorRoute)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

  void BM_EnumerateBands(benchmark::State& state) {
    auto const& basis = catalog_variety("B").basis();
    auto        size  = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
      benchmark::DoNotOptimize(enumerate_models_of_size(basis, band_signature(), size).size());
  }
  BENCHMARK(BM_EnumerateBands)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

  void BM_GreenReesWords(benchmark::State& state) {
    std::vector<std::vector<VarIndex>> words;
    std::vector<VarIndex>              w;
    for (VarIndex a = 1; a <= 3; ++a)
      for (VarIndex b = 1; b <= 3; ++b)
        for (VarIndex c = 1; c <= 3; ++c)
          for (VarIndex d = 1; d <= 3; ++d)
            words.push_back({a, b, c, d, a, c, b});
    for (auto _ : state) {
      GreenReesInterner interner;
      for (auto const& word : words)
        benchmark::DoNotOptimize(interner.id_of(word));
    }
  }
  BENCHMARK(BM_GreenReesWords);

  void BM_Fluid(benchmark::State& state) {
    auto const* name = state.range(0) == 0 ? "DL" : "BA";
    for (auto _ : state)
      benchmark::DoNotOptimize(is_fluid(fresh(name)).value);
    state.SetLabel(name);
  }
  BENCHMARK(BM_Fluid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void BM_SolidBands(benchmark::State& state) {
    for (auto _ : state)
      benchmark::DoNotOptimize(is_solid(fresh("W2")).value);
  }
  BENCHMARK(BM_SolidBands)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
