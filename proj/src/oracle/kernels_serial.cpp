#include "reconf/kernels.hpp"

namespace reconf::kernels {

void tabulate_serial(const ScoreModel& model, std::span<std::int32_t> out) {
  const auto n = model.lattice().size();
  for (std::uint64_t c = 0; c < n; ++c) out[c] = model.score(c);
}

std::vector<std::int32_t> bfs_serial(const Lattice& lattice, std::span<const std::int32_t> scores, Threshold th,
                                     std::uint64_t source, std::uint64_t target) {
  std::vector<std::int32_t> dist(lattice.size(), -1);
  if (!th.admits(scores[source])) return dist;
  dist[source] = 0;
  std::vector<std::uint64_t> frontier{source}, next;
  for (std::int32_t level = 0; !frontier.empty() && dist[target] < 0; ++level) {
    next.clear();
    for (auto c : frontier)
      lattice.for_each_neighbor(c, [&](std::uint64_t nb) {
        if (dist[nb] < 0 && th.admits(scores[nb])) {
          dist[nb] = level + 1;
          next.push_back(nb);
        }
      });
    frontier.swap(next);
  }
  return dist;
}

}  // namespace reconf::kernels
