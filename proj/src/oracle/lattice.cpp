#include <algorithm>
#include <limits>

#include "reconf/kernels.hpp"

namespace reconf::kernels {

Lattice::Lattice(std::vector<std::uint32_t> radix) : radix_(std::move(radix)), stride_(radix_.size()), size_(1) {
  for (std::size_t p = 0; p < radix_.size(); ++p) {
    if (radix_[p] == 0) throw DomainError("lattice radix must be positive");
    stride_[p] = size_;
    if (size_ > std::numeric_limits<std::uint64_t>::max() / 2 / radix_[p])
      throw CapacityError("state space does not fit a 64-bit encoding");
    size_ *= radix_[p];
  }
}

std::vector<std::uint64_t> trace_path(const Lattice& lattice, std::span<const std::int32_t> dist,
                                      std::uint64_t target) {
  if (dist[target] < 0) return {};
  std::vector<std::uint64_t> path{target};
  auto cur = target;
  while (dist[cur] > 0) {
    const auto want = dist[cur] - 1;
    auto best = std::numeric_limits<std::uint64_t>::max();
    lattice.for_each_neighbor(cur, [&](std::uint64_t nb) {
      if (dist[nb] == want) best = std::min(best, nb);
    });
    cur = best;
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace reconf::kernels
