#include <benchmark/benchmark.h>

#include <random>

#include "hecketl/temperley_lieb.hpp"

using namespace hecketl;

namespace {

const char* const kGraphs[] = {"A3", "A4", "B3", "B4", "D4", "H3", "F4", "E6"};

const GroupTable& cached_group(int index) {
  static std::vector<std::unique_ptr<GroupTable>> groups(std::size(kGraphs));
  auto& slot = groups[index];
  if (!slot) slot = std::make_unique<GroupTable>(GroupTable::enumerate(parse_graph(kGraphs[index])));
  return *slot;
}

void BM_Enumerate(benchmark::State& state) {
  const auto graph = parse_graph(kGraphs[state.range(0)]);
  std::size_t size = 0;
  for (auto _ : state) {
    auto g = GroupTable::enumerate(graph);
    size = g.size();
    benchmark::DoNotOptimize(g);
  }
  state.SetLabel(kGraphs[state.range(0)]);
  state.counters["elements"] = static_cast<double>(size);
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_KLTable(benchmark::State& state) {
  const auto& g = cached_group(static_cast<int>(state.range(0)));
  const HeckeAlgebra hecke(g);
  for (auto _ : state) benchmark::DoNotOptimize(kl_table(hecke));
  state.SetLabel(kGraphs[state.range(0)]);
}
BENCHMARK(BM_KLTable)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

// Building the TL algebra precomputes theta on every basis element.
void BM_TemperleyLieb(benchmark::State& state) {
  const auto& g = cached_group(static_cast<int>(state.range(0)));
  const HeckeAlgebra hecke(g);
  for (auto _ : state) {
    TemperleyLieb tl(hecke, static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(tl);
  }
  state.SetLabel(std::string(kGraphs[state.range(0)]) + " jobs=" + std::to_string(state.range(1)));
}
BENCHMARK(BM_TemperleyLieb)->ArgsProduct({{1, 3}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_CanonicalTL(benchmark::State& state) {
  const auto& g = cached_group(static_cast<int>(state.range(0)));
  const HeckeAlgebra hecke(g);
  const TemperleyLieb tl(hecke);
  for (auto _ : state) benchmark::DoNotOptimize(ic_basis_tl(tl));
  state.SetLabel(kGraphs[state.range(0)]);
}
BENCHMARK(BM_CanonicalTL)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_BProductReduce(benchmark::State& state) {
  const auto& g = cached_group(3);  // B4
  std::mt19937_64 rng(7);
  std::vector<Word> words(256);
  for (auto& w : words) {
    w.resize(static_cast<std::size_t>(state.range(0)));
    for (auto& s : w) s = static_cast<Generator>(rng() % static_cast<unsigned>(g.rank()));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(b_product_reduce(g, words[i++ % words.size()]));
}
BENCHMARK(BM_BProductReduce)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
