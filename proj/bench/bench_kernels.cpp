#include <benchmark/benchmark.h>

#include "reconf/kernels.hpp"
#include "reconf/pipeline.hpp"

using namespace reconf;

namespace {

// e3sat with n variables and 2n clauses; the lattice has 2^n states.
ReconfigInstance sat_instance(int n) {
  return generate_instance("e3sat", {{"n", n}, {"m", 2 * n}}, 7);
}

template <bool Parallel>
void BM_Tabulate(benchmark::State& st) {
  const auto in = sat_instance(static_cast<int>(st.range(0)));
  const auto model = kernels::make_score_model(in);
  std::vector<std::int32_t> scores(model->lattice().size());
  for (auto _ : st) {
    if (Parallel) kernels::tabulate_parallel(*model, scores);
    else kernels::tabulate_serial(*model, scores);
    benchmark::DoNotOptimize(scores.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(scores.size()));
}

template <bool Parallel>
void BM_Bfs(benchmark::State& st) {
  const auto in = sat_instance(static_cast<int>(st.range(0)));
  const auto model = kernels::make_score_model(in);
  std::vector<std::int32_t> scores(model->lattice().size());
  kernels::tabulate_serial(*model, scores);
  const auto s = model->encode(in.start), t = model->encode(in.target);
  // a threshold of 0 admits every state, so the BFS sweeps the whole lattice
  const kernels::Threshold th{0, false};
  for (auto _ : st) {
    auto dist = Parallel ? kernels::bfs_parallel(model->lattice(), scores, th, s, t)
                         : kernels::bfs_serial(model->lattice(), scores, th, s, t);
    benchmark::DoNotOptimize(dist.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(scores.size()));
}

void BM_Oracle(benchmark::State& st) {
  const auto in = sat_instance(static_cast<int>(st.range(0)));
  OracleConfig cfg;
  cfg.parallel = st.range(1) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(optimal_value(in, cfg).value);
}

}  // namespace

BENCHMARK(BM_Tabulate<false>)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_Tabulate<true>)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_Bfs<false>)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_Bfs<true>)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_Oracle)->Args({16, 0})->Args({16, 1});

BENCHMARK_MAIN();
