#include "qlsc/macdonald.hpp"
#include "qlsc/qbg.hpp"
#include "qlsc/qls.hpp"

#include <benchmark/benchmark.h>

using namespace qlsc;

namespace {

Weight shape(int which) {
  switch (which) {
    case 0: return Weight::from_ints({1, 0});
    case 1: return Weight::from_ints({2, 1});
    case 2: return Weight::from_ints({1, 1, 0});
    default: return Weight::from_ints({2, 1, 0});
  }
}

void BM_QbgConstruction(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    QbgGraph g(n, {});
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK(BM_QbgConstruction)->DenseRange(2, 4);

void BM_QlsEnumeration(benchmark::State& state) {
  Weight lambda = shape(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    QlsModel m(lambda);
    benchmark::DoNotOptimize(m.enumerate().size());
  }
}
BENCHMARK(BM_QlsEnumeration)->DenseRange(0, 3);

void BM_GradedCharacter(benchmark::State& state) {
  Weight lambda = shape(static_cast<int>(state.range(0)));
  QlsModel m(lambda);
  for (auto _ : state) benchmark::DoNotOptimize(m.graded_character().size());
}
BENCHMARK(BM_GradedCharacter)->DenseRange(0, 2);

void BM_AlcoveCharacter(benchmark::State& state) {
  Weight lambda = shape(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    AlcoveModel os(lambda);
    benchmark::DoNotOptimize(os.symmetric_character().size());
  }
}
BENCHMARK(BM_AlcoveCharacter)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
