#include <algorithm>
#include <numeric>
#include <random>

#include "reconf/pipeline.hpp"

namespace reconf {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> distinct_sample(Rng& rng, int n, int k) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

ReconfigInstance gen_qcsp(const Json& p, Rng& rng) {
  const int q = p.value("q", 2), w = p.value("W", 3), n = p.value("vertices", 4), m = p.value("edges", 5);
  const int density = p.value("density_percent", 50);
  const bool planted = p.value("planted", true);
  if (q < 1 || w < 1 || n < q || m < 1) throw DomainError("qcsp generator: need q >= 1, W >= 1, |V| >= q, |E| >= 1");
  std::vector<std::string> names, symbols;
  for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v + 1));
  for (int s = 0; s < w; ++s) symbols.push_back(w <= 26 ? std::string(1, static_cast<char>('a' + s)) : "s" + std::to_string(s));
  State start(n), target(n);
  for (int v = 0; v < n; ++v) start[v] = static_cast<std::uint8_t>(uniform(rng, 0, w - 1));
  for (int v = 0; v < n; ++v) target[v] = static_cast<std::uint8_t>(uniform(rng, 0, w - 1));
  std::size_t tuples = 1;
  for (int i = 0; i < q; ++i) tuples *= static_cast<std::size_t>(w);
  std::vector<Hyperedge> edges;
  for (int e = 0; e < m; ++e) {
    Hyperedge he{distinct_sample(rng, n, q), {}};
    for (std::size_t code = 0; code < tuples; ++code) {
      std::vector<int> t(q);
      auto rest = code;
      for (int i = q - 1; i >= 0; --i) t[i] = static_cast<int>(rest % w), rest /= w;
      bool keep = uniform(rng, 0, 99) < density;
      if (planted) {
        bool hit_s = true, hit_t = true;
        for (int i = 0; i < q; ++i) {
          hit_s = hit_s && t[i] == start[he.vertices[i]];
          hit_t = hit_t && t[i] == target[he.vertices[i]];
        }
        keep = keep || hit_s || hit_t;
      }
      if (keep) he.allowed.push_back(std::move(t));
    }
    edges.push_back(std::move(he));
  }
  return {ProblemKind::Csp, ConstraintGraph(q, Alphabet(symbols), names, std::move(edges)), start, target,
          std::nullopt};
}

ReconfigInstance gen_ksat(const Json& p, Rng& rng, int default_k) {
  const int k = p.value("k", default_k), n = p.value("n", 5), m = p.value("m", 5);
  const bool planted = p.value("planted", true);
  if (k < 1 || n < k || m < 1) throw DomainError("ksat generator: need k >= 1, n >= k, m >= 1");
  State start(n), target(n);
  for (auto& b : start) b = static_cast<std::uint8_t>(uniform(rng, 0, 1));
  for (auto& b : target) b = static_cast<std::uint8_t>(uniform(rng, 0, 1));
  std::vector<std::string> vars;
  for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));
  std::vector<Clause> clauses;
  for (int j = 0; j < m; ++j) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000) throw DomainError("ksat generator: no clause satisfied by both endpoints");
      Clause c;
      for (int v : distinct_sample(rng, n, k)) c.push_back({v, uniform(rng, 0, 1) == 1});
      auto sat = [&](const State& s) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return literal_true(l, s); });
      };
      if (!planted || (sat(start) && sat(target))) {
        clauses.push_back(std::move(c));
        break;
      }
    }
  }
  return {ProblemKind::Sat, CnfFormula(vars, std::move(clauses)), start, target, std::nullopt};
}

bool satisfies_all(const NclGraph& g, const State& o) {
  for (std::size_t v = 0; v < g.num_nodes(); ++v)
    if (!g.node_satisfied(v, o)) return false;
  return true;
}

ReconfigInstance gen_ncl(const Json& p, Rng& rng) {
  const int n_and = p.value("n_and", 2), n_or = p.value("n_or", 2);
  if (n_and < 0 || n_or < 0 || (n_and + n_or) % 2 != 0) throw DomainError("ncl_andor generator: n_and + n_or must be even");
  std::vector<NclNode> nodes;
  for (int i = 0; i < n_and; ++i) nodes.push_back({"and" + std::to_string(i + 1), NodeKind::And});
  for (int i = 0; i < n_or; ++i) nodes.push_back({"or" + std::to_string(i + 1), NodeKind::Or});
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> red, blue;
    for (int v = 0; v < n_and; ++v) red.insert(red.end(), {v, v}), blue.push_back(v);
    for (int v = n_and; v < n_and + n_or; ++v) blue.insert(blue.end(), {v, v, v});
    std::shuffle(red.begin(), red.end(), rng);
    std::shuffle(blue.begin(), blue.end(), rng);
    std::vector<NclLink> links;
    bool loop = false;
    for (std::size_t i = 0; i + 1 < red.size(); i += 2) {
      loop = loop || red[i] == red[i + 1];
      links.push_back({red[i], red[i + 1], LinkColor::Red});
    }
    for (std::size_t i = 0; i + 1 < blue.size(); i += 2) {
      loop = loop || blue[i] == blue[i + 1];
      links.push_back({blue[i], blue[i + 1], LinkColor::Blue});
    }
    if (loop) continue;
    NclGraph g(nodes, links);
    if (g.num_links() > 24) throw CapacityError("ncl_andor generator: too many links for exhaustive orientation search");
    std::vector<State> satisfying;
    State o(g.num_links());
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << g.num_links()); ++code) {
      for (std::size_t l = 0; l < o.size(); ++l) o[l] = (code >> l) & 1;
      if (satisfies_all(g, o)) satisfying.push_back(o);
    }
    if (satisfying.empty()) continue;
    const auto& s = satisfying[uniform(rng, 0, static_cast<int>(satisfying.size()) - 1)];
    const auto& t = satisfying[uniform(rng, 0, static_cast<int>(satisfying.size()) - 1)];
    return {ProblemKind::Ncl, std::move(g), s, t, std::nullopt};
  }
  throw DomainError("ncl_andor generator: no loop-free satisfiable graph within budget");
}

State random_maximal_independent_set(const SimpleGraph& g, Rng& rng) {
  std::vector<int> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  State s(g.num_vertices(), 0);
  for (int v : order) {
    bool free = true;
    for (int u : g.neighbors(v)) free = free && !s[u];
    if (free) s[v] = 1;
  }
  return s;
}

ReconfigInstance gen_isr(const Json& p, Rng& rng) {
  const int n = p.value("n", 8), percent = p.value("edge_percent", 30);
  if (n < 2) throw DomainError("isr generator: need n >= 2");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (uniform(rng, 0, 99) < percent) edges.emplace_back(u, v);
    SimpleGraph g(n, std::move(edges));
    const int a = alpha(g);
    if (a < 2) continue;
    auto s = random_maximal_independent_set(g, rng);
    auto t = random_maximal_independent_set(g, rng);
    return {ProblemKind::IndependentSet, std::move(g), s, t, a};
  }
  throw DomainError("isr generator: no graph with alpha >= 2 within budget");
}

bool perfect_value(const ReconfigInstance& in, const Rational& v) {
  return minimizes(in.kind) ? v <= 1 : v >= 1;
}

ReconfigInstance generate_once(std::string_view kind, const Json& p, Rng& rng) {
  if (kind == "qcsp") return gen_qcsp(p, rng);
  if (kind == "bcsp3") {
    Json q = p;
    q["q"] = 2;
    q["W"] = 3;
    return gen_qcsp(q, rng);
  }
  if (kind == "ksat") return gen_ksat(p, rng, 4);
  if (kind == "e3sat") {
    Json q = p;
    q["k"] = 3;
    return gen_ksat(q, rng, 3);
  }
  if (kind == "ncl_andor") return gen_ncl(p, rng);
  if (kind == "isr") return gen_isr(p, rng);
  throw DomainError("unknown generator kind: " + std::string(kind));
}

}  // namespace

ReconfigInstance generate_instance(std::string_view kind, const Json& params, std::uint64_t seed) {
  Rng rng(seed);
  if (!params.value("reconfigurable", false)) return generate_once(kind, params, rng);
  const int budget = params.value("attempts", 500);
  for (int i = 0; i < budget; ++i) {
    auto inst = generate_once(kind, params, rng);
    try {
      if (perfect_value(inst, optimal_value(inst).value)) return inst;
    } catch (const DomainError&) {
      // target unreachable; draw again
    }
  }
  throw DomainError("generator: no reconfigurable pair found within budget");
}

}  // namespace reconf
