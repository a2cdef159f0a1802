#include <benchmark/benchmark.h>

#include "ibox/cartan.hpp"
#include "ibox/sweep.hpp"

using namespace ibox;

namespace {

// (1,2,3,...) repeated up to `len` over the rank of the type.
SequencePtr periodic(int rank, int len) {
  std::vector<Color> w(len);
  for (int k = 0; k < len; ++k) w[k] = k % rank;
  return make_sequence(1, std::move(w));
}

void BM_SweepSerial(benchmark::State& state) {
  const CartanMatrix c = preset("A3");
  const auto s = periodic(c.rank(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_verify_serial(s, c, s->support()));
  state.SetItemsProcessed(state.iterations() * (1LL << (state.range(0) - 1)));
}

void BM_SweepParallel(benchmark::State& state) {
  const CartanMatrix c = preset("A3");
  const auto s = periodic(c.rank(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_verify(s, c, s->support(), static_cast<int>(state.range(1))));
  state.SetItemsProcessed(state.iterations() * (1LL << (state.range(0) - 1)));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)
    ->ArgsProduct({{8, 10, 12}, {2, 4, 0}})
    ->ArgNames({"len", "workers"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
