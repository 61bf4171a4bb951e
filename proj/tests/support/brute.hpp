#pragma once

// Independent reference computations for tests. Nothing here goes through the
// oracle's lattice encoding or threshold search.

#include <map>
#include <queue>
#include <random>

#include "reconf/problems.hpp"

namespace brute {

using namespace reconf;

inline std::vector<int> radix(const ReconfigInstance& in) {
  const auto n = state_length(in);
  if (in.kind == ProblemKind::Csp) return std::vector<int>(n, static_cast<int>(in.csp().alphabet().size()));
  return std::vector<int>(n, 2);
}

inline bool feasible(const ReconfigInstance& in, const State& s) {
  return state_well_formed(in, s) && state_feasible(in, s);
}

inline std::vector<State> all_states(const ReconfigInstance& in) {
  const auto r = radix(in);
  std::vector<State> out;
  State s(r.size(), 0);
  for (;;) {
    if (feasible(in, s)) out.push_back(s);
    std::size_t p = 0;
    while (p < s.size() && ++s[p] == r[p]) s[p++] = 0;
    if (p == s.size()) break;
  }
  return out;
}

inline std::vector<State> neighbors(const ReconfigInstance& in, const State& s) {
  const auto r = radix(in);
  std::vector<State> out;
  for (std::size_t p = 0; p < s.size(); ++p)
    for (int v = 0; v < r[p]; ++v) {
      if (v == s[p]) continue;
      State t = s;
      t[p] = static_cast<std::uint8_t>(v);
      if (feasible(in, t)) out.push_back(std::move(t));
    }
  return out;
}

// Widest-path search: best over sequences of the worst state value.
inline Rational bottleneck(const ReconfigInstance& in) {
  const bool minimize = minimizes(in.kind);
  auto better = [&](const Rational& a, const Rational& b) { return minimize ? a < b : a > b; };
  auto worse_of = [&](const Rational& a, const Rational& b) { return better(a, b) ? b : a; };
  std::map<State, Rational> best;
  auto cmp = [&](const std::pair<Rational, State>& a, const std::pair<Rational, State>& b) {
    return better(b.first, a.first);
  };
  std::priority_queue<std::pair<Rational, State>, std::vector<std::pair<Rational, State>>, decltype(cmp)> pq(cmp);
  best[in.start] = state_value(in, in.start);
  pq.push({best[in.start], in.start});
  while (!pq.empty()) {
    auto [v, s] = pq.top();
    pq.pop();
    if (best.at(s) != v) continue;
    if (s == in.target) return v;
    for (auto& t : neighbors(in, s)) {
      auto w = worse_of(v, state_value(in, t));
      auto it = best.find(t);
      if (it == best.end() || better(w, it->second)) {
        best[t] = w;
        pq.push({w, t});
      }
    }
  }
  throw DomainError("unreachable");
}

inline int alpha(const SimpleGraph& g) {
  const auto n = g.num_vertices();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && !(((mask >> u) & 1) && ((mask >> v) & 1));
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// Random walk of feasible states of the given length (equal states allowed).
inline ReconfigSequence random_walk(const ReconfigInstance& in, std::mt19937_64& rng, int steps) {
  ReconfigSequence seq{in.start};
  for (int i = 0; i < steps; ++i) {
    auto nb = neighbors(in, seq.back());
    if (nb.empty() || rng() % 5 == 0) seq.push_back(seq.back());
    else seq.push_back(nb[rng() % nb.size()]);
  }
  return seq;
}

}  // namespace brute
