#include <benchmark/benchmark.h>

#include "dlens/adjunction.hpp"
#include "dlens/fixtures.hpp"
#include "dlens/testgen.hpp"

namespace {

using namespace dlens;

struct Batch {
  FinCat a;
  FinCat b;
  std::vector<SymmetricLens> syms;
  std::vector<LensSpan> spans;
};

Batch make_batch(int count) {
  Batch batch{fixtures::three(), fixtures::two(), {}, {}};
  for (int i = 0; i < count; ++i) {
    GenConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(i);
    cfg.max_states = 4;
    cfg.morphism_cap = 24;
    batch.syms.push_back(gen_symlens(cfg, batch.a, batch.b));
    batch.spans.push_back(gen_span(cfg, batch.a, batch.b));
  }
  return batch;
}

void BM_VerifySerial(benchmark::State& state) {
  const Batch batch = make_batch(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_adjunctions_serial(batch.a, batch.b, batch.syms, batch.spans));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyParallel(benchmark::State& state) {
  const Batch batch = make_batch(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_adjunctions(batch.a, batch.b, batch.syms, batch.spans));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
