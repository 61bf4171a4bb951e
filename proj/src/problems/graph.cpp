#include <algorithm>

#include "reconf/problems.hpp"

namespace reconf {

SimpleGraph::SimpleGraph(std::size_t n, std::vector<std::pair<int, int>> edges)
    : adj_(n), matrix_(n * n, 0) {
  const int ni = static_cast<int>(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= ni || v >= ni) throw DomainError("edge references unknown vertex");
    if (u == v) throw DomainError("self-loop in simple graph");
    if (u > v) std::swap(u, v);
    if (matrix_[u * n + v]) throw DomainError("multi-edge in simple graph");
    matrix_[u * n + v] = matrix_[v * n + u] = 1;
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool SimpleGraph::has_edge(int u, int v) const {
  const auto n = adj_.size();
  return matrix_.at(static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)) != 0;
}

SimpleGraph SimpleGraph::complement() const {
  const int n = static_cast<int>(adj_.size());
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!has_edge(u, v)) e.emplace_back(u, v);
  return SimpleGraph(adj_.size(), std::move(e));
}

bool is_independent_set(const SimpleGraph& g, const State& members) {
  for (auto [u, v] : g.edges())
    if (members[u] && members[v]) return false;
  return true;
}

bool is_vertex_cover(const SimpleGraph& g, const State& members) {
  for (auto [u, v] : g.edges())
    if (!members[u] && !members[v]) return false;
  return true;
}

bool is_clique(const SimpleGraph& g, const State& members) {
  const int n = static_cast<int>(g.num_vertices());
  for (int u = 0; u < n; ++u) {
    if (!members[u]) continue;
    for (int v = u + 1; v < n; ++v)
      if (members[v] && !g.has_edge(u, v)) return false;
  }
  return true;
}

std::size_t subset_size(const State& members) {
  return static_cast<std::size_t>(std::count_if(members.begin(), members.end(), [](auto b) { return b != 0; }));
}

State members_to_state(std::size_t n, std::span<const int> members) {
  State s(n, 0);
  for (int v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw DomainError("member outside vertex range");
    if (s[v]) throw DomainError("duplicate member");
    s[v] = 1;
  }
  return s;
}

std::vector<int> state_to_members(const State& members) {
  std::vector<int> out;
  for (std::size_t v = 0; v < members.size(); ++v)
    if (members[v]) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace reconf
