// Serial reference vs OpenMP path for the hot kernels.

#include <benchmark/benchmark.h>

#include "test_util.hpp"
#include "thinkret/index.hpp"
#include "thinkret/kernels.hpp"
#include "thinkret/losses.hpp"

using namespace thinkret;

namespace {

ExecPolicy policy_of(const benchmark::State& st) {
  return st.range(0) == 0 ? ExecPolicy::kSerial : ExecPolicy::kParallel;
}

void BM_InnerProducts(benchmark::State& st) {
  const std::size_t n = 20000, dim = 64;
  Rng rng(1);
  std::vector<float> rows(n * dim);
  for (auto& x : rows) x = static_cast<float>(rng.normal());
  std::vector<double> q(dim), scores(n);
  for (auto& x : q) x = rng.normal();
  for (auto _ : st) {
    kernels::inner_products(policy_of(st), rows, dim, q, scores);
    benchmark::DoNotOptimize(scores.data());
  }
  st.SetItemsProcessed(static_cast<int64_t>(st.iterations() * n));
}
BENCHMARK(BM_InnerProducts)->Arg(0)->Arg(1);

void BM_Search(benchmark::State& st) {
  const std::size_t n = 20000, dim = 64;
  Rng rng(2);
  EmbeddingStore store(dim, true);
  std::vector<double> v(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& x : v) x = rng.normal();
    store.add("d" + std::to_string(i), v);
  }
  for (auto& x : v) x = rng.normal();
  for (auto _ : st) benchmark::DoNotOptimize(store.search(v, 100, policy_of(st)));
}
BENCHMARK(BM_Search)->Arg(0)->Arg(1);

void BM_JointGradient(benchmark::State& st) {
  auto mc = testutil::micro_config(200, 32, 2, 4, 64, 48);
  mc.init_std = 0.1;
  const auto p = init_params(mc, 3);
  Rng rng(4);
  const SequenceLimits lim{8, 16, 16};
  const auto batch = testutil::random_batch(rng, mc.vocab_size, 16, 3, lim);
  LossConfig cfg;
  cfg.similarity = Similarity::kCosine;
  for (auto _ : st) benchmark::DoNotOptimize(compute_grad(p, batch, cfg, policy_of(st)));
}
BENCHMARK(BM_JointGradient)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
