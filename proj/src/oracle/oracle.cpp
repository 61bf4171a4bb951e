#include "reconf/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "reconf/kernels.hpp"

namespace reconf {

namespace {

using kernels::Lattice;
using kernels::ScoreModel;
using kernels::Threshold;

struct Search {
  std::optional<std::vector<std::uint64_t>> path;
  std::uint64_t explored = 0;
};

Search eager_search(const Lattice& lattice, const std::vector<std::int32_t>& scores, Threshold th, std::uint64_t s,
                    std::uint64_t t, bool parallel) {
  auto dist = parallel ? kernels::bfs_parallel(lattice, scores, th, s, t) : kernels::bfs_serial(lattice, scores, th, s, t);
  Search r;
  r.explored = static_cast<std::uint64_t>(std::count_if(dist.begin(), dist.end(), [](auto d) { return d >= 0; }));
  if (dist[t] >= 0) r.path = kernels::trace_path(lattice, dist, t);
  return r;
}

Search lazy_search(const ScoreModel& model, Threshold th, std::uint64_t s, std::uint64_t t, std::uint64_t cap) {
  const auto& lattice = model.lattice();
  std::unordered_map<std::uint64_t, std::uint64_t> parent;
  std::unordered_map<std::uint64_t, bool> rejected;
  parent.emplace(s, s);
  std::vector<std::uint64_t> frontier{s}, next;
  Search r;
  while (!frontier.empty() && !parent.count(t)) {
    next.clear();
    for (auto c : frontier)
      lattice.for_each_neighbor(c, [&](std::uint64_t nb) {
        if (parent.count(nb) || rejected.count(nb)) return;
        if (!th.admits(model.score(nb))) {
          rejected.emplace(nb, true);
          return;
        }
        parent.emplace(nb, c);
        next.push_back(nb);
      });
    if (parent.size() > cap)
      throw CapacityError("reachable set exceeds state cap of " + std::to_string(cap));
    frontier.swap(next);
  }
  r.explored = parent.size();
  if (parent.count(t)) {
    std::vector<std::uint64_t> path{t};
    for (auto c = t; c != s; c = parent.at(c)) path.push_back(parent.at(c));
    std::reverse(path.begin(), path.end());
    r.path = std::move(path);
  }
  return r;
}

OracleResult solve(const ReconfigInstance& in, const OracleConfig& cfg, bool minimize) {
  validate(in);
  if (cfg.state_cap < 1) throw DomainError("state_cap must be at least 1");
  auto model = kernels::make_score_model(in);
  const auto& lattice = model->lattice();
  const auto s = model->encode(in.start), t = model->encode(in.target);
  const auto ss = model->score(s), st = model->score(t);
  const auto top = minimize ? std::max(ss, st) : std::min(ss, st);
  const auto den = value_denominator(in);

  OracleResult result;
  if (s == t) {
    result.value = Rational(ss, den);
    result.witness = ReconfigSequence{in.start};
    result.explored_states = 1;
    return result;
  }

  // Candidates ordered best first; reachability is monotone along this order.
  std::vector<std::int32_t> candidates;
  std::function<Search(std::int32_t)> attempt;
  std::vector<std::int32_t> scores;
  if (lattice.size() <= cfg.state_cap) {
    scores.resize(lattice.size());
    if (cfg.parallel) kernels::tabulate_parallel(*model, scores);
    else kernels::tabulate_serial(*model, scores);
    result.explored_states = lattice.size();
    const auto max_score = std::max(top, *std::max_element(scores.begin(), scores.end()));
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(max_score) + 1, 0);
    for (auto v : scores)
      if (v >= 0 && (minimize ? v >= top : v <= top)) seen[v] = 1;
    for (std::size_t v = 0; v < seen.size(); ++v)
      if (seen[v]) candidates.push_back(static_cast<std::int32_t>(v));
    attempt = [&](std::int32_t th) {
      return eager_search(lattice, scores, Threshold{th, minimize}, s, t, cfg.parallel);
    };
  } else if (cfg.explore_reachable_only) {
    std::int32_t worst = minimize ? static_cast<std::int32_t>(lattice.positions()) : 0;
    for (auto v = std::min(top, worst); v <= std::max(top, worst); ++v) candidates.push_back(v);
    attempt = [&](std::int32_t th) {
      auto r = lazy_search(*model, Threshold{th, minimize}, s, t, cfg.state_cap);
      result.explored_states += r.explored;
      return r;
    };
  } else {
    throw CapacityError("state space of " + std::to_string(lattice.size()) + " exceeds state cap " +
                        std::to_string(cfg.state_cap));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (!minimize) std::reverse(candidates.begin(), candidates.end());

  std::size_t lo = 0, hi = candidates.size() - 1;
  auto best = attempt(candidates[lo]);
  if (!best.path) {
    auto last = attempt(candidates[hi]);
    if (!last.path) throw DomainError("target is unreachable from start");
    best = std::move(last);
    while (hi - lo > 1) {
      auto mid = lo + (hi - lo) / 2;
      auto r = attempt(candidates[mid]);
      if (r.path) {
        hi = mid;
        best = std::move(r);
      } else {
        lo = mid;
      }
    }
    lo = hi;
  }
  ReconfigSequence witness;
  std::int32_t worst_seen = candidates[lo];
  for (auto c : *best.path) {
    witness.push_back(model->decode(c));
    auto sc = scores.empty() ? model->score(c) : scores[c];
    worst_seen = minimize ? std::max(worst_seen, sc) : std::min(worst_seen, sc);
  }
  result.value = Rational(worst_seen, den);
  result.witness = std::move(witness);
  return result;
}

ValueMode mode_for(const ReconfigInstance& in, const OracleConfig& cfg) {
  auto natural = minimizes(in.kind) ? ValueMode::Minmax : ValueMode::Maxmin;
  if (cfg.value_mode && *cfg.value_mode != natural)
    throw DomainError("value mode does not match the problem kind");
  return natural;
}

}  // namespace

OracleResult maxmin_value(const ReconfigInstance& in, const OracleConfig& cfg) {
  if (mode_for(in, cfg) != ValueMode::Maxmin) throw DomainError("maxmin_value: vertex cover instances are minmax");
  return solve(in, cfg, false);
}

OracleResult minmax_value(const ReconfigInstance& in, const OracleConfig& cfg) {
  if (mode_for(in, cfg) != ValueMode::Minmax) throw DomainError("minmax_value: only vertex cover instances are minmax");
  return solve(in, cfg, true);
}

OracleResult optimal_value(const ReconfigInstance& in, const OracleConfig& cfg) {
  return minimizes(in.kind) ? minmax_value(in, cfg) : maxmin_value(in, cfg);
}

}  // namespace reconf
