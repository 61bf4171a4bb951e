#include <algorithm>
#include <atomic>

#include <omp.h>

#include "reconf/kernels.hpp"

namespace reconf::kernels {

void tabulate_parallel(const ScoreModel& model, std::span<std::int32_t> out) {
  const auto n = static_cast<std::int64_t>(model.lattice().size());
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < n; ++c) out[c] = model.score(static_cast<std::uint64_t>(c));
}

std::vector<std::int32_t> bfs_parallel(const Lattice& lattice, std::span<const std::int32_t> scores, Threshold th,
                                       std::uint64_t source, std::uint64_t target) {
  std::vector<std::int32_t> dist(lattice.size(), -1);
  if (!th.admits(scores[source])) return dist;
  dist[source] = 0;
  std::vector<std::uint64_t> frontier{source};
  for (std::int32_t level = 0; !frontier.empty() && dist[target] < 0; ++level) {
    std::vector<std::vector<std::uint64_t>> local(omp_get_max_threads());
    const auto fsize = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel
    {
      auto& mine = local[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t i = 0; i < fsize; ++i)
        lattice.for_each_neighbor(frontier[i], [&](std::uint64_t nb) {
          if (!th.admits(scores[nb])) return;
          std::atomic_ref<std::int32_t> slot(dist[nb]);
          std::int32_t expected = -1;
          if (slot.load(std::memory_order_relaxed) < 0 && slot.compare_exchange_strong(expected, level + 1))
            mine.push_back(nb);
        });
    }
    frontier.clear();
    for (auto& part : local) frontier.insert(frontier.end(), part.begin(), part.end());
    std::sort(frontier.begin(), frontier.end());
  }
  return dist;
}

}  // namespace reconf::kernels
