#include <algorithm>
#include <set>

#include "reconf/problems.hpp"

namespace reconf {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw DomainError("alphabet must be nonempty");
  std::set<std::string> seen(symbols_.begin(), symbols_.end());
  if (seen.size() != symbols_.size()) throw DomainError("alphabet symbols must be distinct");
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return i;
  return std::nullopt;
}

ConstraintGraph::ConstraintGraph(int arity, Alphabet alphabet, std::vector<std::string> vertex_names,
                                 std::vector<Hyperedge> edges, std::vector<std::vector<int>> domains)
    : arity_(arity), alphabet_(std::move(alphabet)), names_(std::move(vertex_names)), edges_(std::move(edges)),
      domains_(std::move(domains)) {
  if (arity_ < 1) throw DomainError("arity must be positive");
  const auto w = alphabet_.size();
  if (w == 0) throw DomainError("alphabet must be nonempty");
  std::size_t table_size = 1;
  for (int i = 0; i < arity_; ++i) {
    table_size *= w;
    if (table_size > (std::size_t{1} << 24)) throw CapacityError("constraint table too large");
  }
  const auto n = names_.size();
  if (domains_.empty()) {
    std::vector<int> all(w);
    for (std::size_t i = 0; i < w; ++i) all[i] = static_cast<int>(i);
    domains_.assign(n, all);
  }
  if (domains_.size() != n) throw DomainError("one domain per vertex required");
  for (auto& d : domains_) {
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    if (d.empty()) throw DomainError("vertex domain must be nonempty");
    for (int s : d)
      if (s < 0 || static_cast<std::size_t>(s) >= w) throw DomainError("domain symbol outside alphabet");
  }
  incident_.assign(n, {});
  tables_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& he = edges_[e];
    if (static_cast<int>(he.vertices.size()) != arity_) throw DomainError("hyperedge arity mismatch");
    for (std::size_t i = 0; i < he.vertices.size(); ++i) {
      int v = he.vertices[i];
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw DomainError("hyperedge references unknown vertex");
      for (std::size_t j = 0; j < i; ++j)
        if (he.vertices[j] == v) throw DomainError("hyperedge vertices must be distinct");
      incident_[v].push_back(e);
    }
    std::vector<std::uint8_t> table(table_size, 0);
    for (const auto& t : he.allowed) {
      if (static_cast<int>(t.size()) != arity_) throw DomainError("constraint tuple arity mismatch");
      for (int s : t)
        if (s < 0 || static_cast<std::size_t>(s) >= w) throw DomainError("constraint symbol outside alphabet");
      table[table_index(t)] = 1;
    }
    he.allowed.clear();
    std::vector<int> tuple(arity_, 0);
    for (std::size_t idx = 0; idx < table_size; ++idx) {
      std::size_t rest = idx;
      for (int i = arity_ - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(rest % w);
        rest /= w;
      }
      if (table[idx]) he.allowed.push_back(tuple);
    }
    tables_.push_back(std::move(table));
  }
}

std::size_t ConstraintGraph::table_index(std::span<const int> tuple) const {
  std::size_t idx = 0;
  for (int s : tuple) idx = idx * alphabet_.size() + static_cast<std::size_t>(s);
  return idx;
}

bool ConstraintGraph::in_domain(std::size_t v, int symbol) const {
  const auto& d = domains_.at(v);
  return std::binary_search(d.begin(), d.end(), symbol);
}

bool ConstraintGraph::accepts(std::size_t e, std::span<const int> tuple) const {
  return tables_.at(e)[table_index(tuple)] != 0;
}

bool ConstraintGraph::satisfied(std::size_t e, const State& assignment) const {
  std::size_t idx = 0;
  for (int v : edges_[e].vertices) idx = idx * alphabet_.size() + assignment[v];
  return tables_[e][idx] != 0;
}

int ConstraintGraph::max_degree() const {
  int best = 0;
  for (const auto& inc : incident_) best = std::max(best, static_cast<int>(inc.size()));
  return best;
}

Rational csp_value(const ConstraintGraph& g, const State& psi) {
  if (g.num_edges() == 0) throw DomainError("csp_value: empty edge set");
  if (psi.size() != g.num_vertices()) throw DomainError("csp_value: assignment is not total");
  for (std::size_t v = 0; v < psi.size(); ++v)
    if (psi[v] >= g.alphabet().size()) throw DomainError("csp_value: symbol outside alphabet");
  std::int64_t sat = 0;
  for (std::size_t e = 0; e < g.num_edges(); ++e) sat += g.satisfied(e, psi);
  return Rational(sat, static_cast<std::int64_t>(g.num_edges()));
}

}  // namespace reconf
