#include <benchmark/benchmark.h>

#include "binoidal/dsl.hpp"
#include "binoidal/kernels.hpp"

#include <string>

using namespace binoidal;

namespace {

// Chain x0+x1 = inf, x1+x2 = inf, ... plus a few binomials on n generators.
Presentation scan_input(int n) {
  std::string text = "free(";
  for (int i = 0; i < n; ++i) text += (i ? ",x" : "x") + std::to_string(i);
  text += ")/(";
  for (int i = 0; i + 1 < n; i += 2)
    text += (i ? ", x" : "x") + std::to_string(i) + "+x" + std::to_string(i + 1) + "=inf";
  for (int i = 1; i + 2 < n; i += 3)
    text += ", 2x" + std::to_string(i) + "=x" + std::to_string(i + 1) + "+x" + std::to_string(i + 2);
  text += ")";
  return parse_presentation(text);
}

void BM_ScanSerial(benchmark::State& state) {
  const auto p = scan_input(static_cast<int>(state.range(0)));
  const auto rows = kernels::admissibility_rows(p);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_admissible_serial(rows, p.rank()));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto p = scan_input(static_cast<int>(state.range(0)));
  const auto rows = kernels::admissibility_rows(p);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_admissible_parallel(rows, p.rank()));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

const Presentation& count_input() {
  static const Presentation p = parse_presentation("free(x,y,z,w)/(x+y=z+w, 2x=3z, y+w=inf)");
  return p;
}

void BM_CountSerial(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_maps_serial(count_input(), q));
}

void BM_CountParallel(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_maps_parallel(count_input(), q));
}

} // namespace

BENCHMARK(BM_ScanSerial)->DenseRange(12, 20, 4);
BENCHMARK(BM_ScanParallel)->DenseRange(12, 20, 4);
BENCHMARK(BM_CountSerial)->Arg(11)->Arg(31);
BENCHMARK(BM_CountParallel)->Arg(11)->Arg(31);

BENCHMARK_MAIN();
