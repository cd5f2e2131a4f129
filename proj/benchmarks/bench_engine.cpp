#include <benchmark/benchmark.h>

#include "dblcat/closure.hpp"
#include "dblcat/corpus.hpp"
#include "dblcat/freegg.hpp"
#include "dblcat/sampling.hpp"

using namespace dblcat;

static void BM_Prenormalize(benchmark::State& state) {
  const Presentation& z2 = *corpus_presentation("z2");
  ExprSampler sampler(z2, 0, static_cast<int>(state.range(0)));
  std::vector<CellExpr> cells;
  for (int i = 0; i < 256; ++i) cells.push_back(sampler.sample());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prenormalize(z2, cells[i++ % cells.size()]));
  }
}
BENCHMARK(BM_Prenormalize)->Arg(6)->Arg(10);

static void BM_SaturateZ2(benchmark::State& state) {
  const Presentation& z2 = *corpus_presentation("z2");
  for (auto _ : state) {
    EqualOptions opt;
    opt.budget = static_cast<int>(state.range(0));
    CongruenceEngine engine(z2, {}, opt);
    engine.saturate();
    benchmark::DoNotOptimize(engine.node_count());
  }
}
BENCHMARK(BM_SaturateZ2)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_EqualFreeProduct(benchmark::State& state) {
  const Presentation& z2 = *corpus_presentation("z2");
  CellExpr ab = parse_expr("-1 . i[-1]");
  CellExpr ba = parse_expr("i[-1] . -1");
  for (auto _ : state) {
    EqualOptions opt;
    opt.budget = static_cast<int>(state.range(0));
    benchmark::DoNotOptimize(equal(z2, ab, ba, opt));
  }
}
BENCHMARK(BM_EqualFreeProduct)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_EnumeratePoint(benchmark::State& state) {
  const Presentation& point = *corpus_presentation("point");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_cells(point, Boundary{"id_a", "id_a", "1", "1"}, 8, 100, EqualOptions{8}));
  }
}
BENCHMARK(BM_EnumeratePoint)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
