#include <algorithm>
#include <random>
#include <set>

#include "reconf/spectral.hpp"

namespace reconf {

RegularGraph complete_graph(int n) {
  if (n < 1) throw DomainError("complete_graph: n must be positive");
  RegularGraph g{n, n - 1, {}};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

RegularGraph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle_graph: n must be at least 3");
  RegularGraph g{n, 2, {}};
  for (int u = 0; u < n; ++u) g.edges.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool is_connected(const RegularGraph& g) {
  if (g.n <= 1) return true;
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.n;
}

namespace {

// One pairing attempt; points are paired one at a time, rejecting pairs that would
// create a loop or a multi-edge, and giving up when too many rejections accumulate.
std::optional<std::vector<std::pair<int, int>>> try_pairing(int n, int d, std::mt19937_64& rng) {
  std::vector<int> points;
  points.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) points.push_back(v);
  std::set<std::pair<int, int>> edges;
  std::size_t rejections = 0;
  const std::size_t limit = 50 * points.size() + 1000;
  while (!points.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    auto i = pick(rng), j = pick(rng);
    int u = points[i], v = points[j];
    if (i == j || u == v || edges.count({std::min(u, v), std::max(u, v)})) {
      if (++rejections > limit) return std::nullopt;
      continue;
    }
    edges.emplace(std::min(u, v), std::max(u, v));
    if (i < j) std::swap(i, j);
    std::swap(points[i], points.back());
    points.pop_back();
    std::swap(points[j], points.back());
    points.pop_back();
  }
  return std::vector<std::pair<int, int>>(edges.begin(), edges.end());
}

}  // namespace

RegularGraph random_regular(int n, int d, std::uint64_t seed) {
  if (d < 3 || d >= n) throw DomainError("random_regular: need 3 <= d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0) throw DomainError("random_regular: n*d must be even");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto edges = try_pairing(n, d, rng);
    if (!edges) continue;
    RegularGraph g{n, d, std::move(*edges)};
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_regular: rejection budget exhausted");
}

}  // namespace reconf
