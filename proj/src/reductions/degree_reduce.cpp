#include <algorithm>
#include <array>

#include "common.hpp"

namespace reconf {

std::vector<std::string> squared_symbols(const Alphabet& base) {
  const auto& s = base.symbols();
  return {s[0], s[1], s[2], s[0] + s[1], s[1] + s[2], s[2] + s[0]};
}

std::vector<std::vector<int>> intra_cloud_pairs() {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const int a = kSquaredMasks[i], b = kSquaredMasks[j];
      if ((a & b) == a || (a & b) == b) out.push_back({i, j});
    }
  return out;
}

int plurality(std::span<const int> values, const std::vector<int>& domain) {
  std::array<int, 3> count{};
  for (int v : values)
    for (int s = 0; s < 3; ++s) count[s] += (kSquaredMasks[v] >> s) & 1;
  int best = domain.front();
  for (int s : domain)
    if (count[s] > count[best]) best = s;
  return best;
}

namespace {

int squared_index(int mask) {
  for (int i = 0; i < 6; ++i)
    if (kSquaredMasks[i] == mask) return i;
  throw std::logic_error("not a squared symbol");
}

class DegreeReduce final : public Reduction {
 public:
  DegreeReduce(const ReconfigInstance& src, const std::vector<int>& split, const CloudProvider& clouds)
      : Reduction(ReductionTag::DegreeReduce, src) {
    detail::require(src.kind == ProblemKind::Csp, "degree_reduce: source must be a constraint graph");
    validate(src);
    const auto& g = src.csp();
    detail::require(g.arity() == 2, "degree_reduce: constraint graph must be binary");
    detail::require(g.alphabet().size() == 3, "degree_reduce: alphabet size must be 3");
    const auto n = g.num_vertices();

    std::vector<bool> is_split(n, false);
    for (int v : split) is_split.at(v) = true;
    std::vector<std::string> names;
    std::vector<std::vector<int>> domains;
    std::vector<ProvenanceEntry> prov;
    endpoint_.assign(g.num_edges(), {-1, -1});
    cloud_.assign(n, {});
    auto squared_domain = [&](std::size_t v) {
      int mask = 0;
      for (int s : g.domain(v)) mask |= 1 << s;
      std::vector<int> d;
      for (int i = 0; i < 6; ++i)
        if ((kSquaredMasks[i] & mask) == kSquaredMasks[i]) d.push_back(i);
      return d;
    };
    for (std::size_t v = 0; v < n; ++v) {
      const auto& vn = g.vertex_name(v);
      if (!is_split[v]) {
        cloud_[v].push_back(static_cast<int>(names.size()));
        prov.push_back({"vertex " + vn, "vertex " + vn});
        names.push_back(vn);
        domains.push_back(squared_domain(v));
        for (auto e : g.incident_edges(v)) slot(e, v) = cloud_[v].back();
        continue;
      }
      for (auto e : g.incident_edges(v)) {
        const auto& ev = g.edge(e).vertices;
        const auto other = static_cast<std::size_t>(ev[0] == static_cast<int>(v) ? ev[1] : ev[0]);
        cloud_[v].push_back(static_cast<int>(names.size()));
        slot(e, v) = cloud_[v].back();
        names.push_back(vn + "_" + g.vertex_name(other) + "#" + std::to_string(e));
        prov.push_back({"vertex " + names.back(), "vertex " + vn + " edge " + std::to_string(e)});
        domains.push_back(squared_domain(v));
      }
    }
    auto in_dom = [&](int vertex, int sym) {
      const auto& d = domains[vertex];
      return std::find(d.begin(), d.end(), sym) != d.end();
    };

    std::vector<Hyperedge> edges;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      auto [u, w] = endpoint_[e];
      Hyperedge he{{u, w}, {}};
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
          if (!in_dom(u, a) || !in_dom(w, b)) continue;
          bool ok = true;
          for (int s = 0; s < 3 && ok; ++s)
            for (int t = 0; t < 3 && ok; ++t)
              if (((kSquaredMasks[a] >> s) & 1) && ((kSquaredMasks[b] >> t) & 1)) ok = g.accepts(e, std::array{s, t});
          if (ok) he.allowed.push_back({a, b});
        }
      prov.push_back({"edge " + std::to_string(edges.size()), "edge " + std::to_string(e)});
      edges.push_back(std::move(he));
    }
    const auto intra = intra_cloud_pairs();
    for (std::size_t v = 0; v < n; ++v) {
      if (!is_split[v] || cloud_[v].empty()) continue;
      for (auto [i, j] : clouds(static_cast<int>(v), static_cast<int>(cloud_[v].size()))) {
        Hyperedge he{{cloud_[v].at(i), cloud_[v].at(j)}, {}};
        for (const auto& pr : intra)
          if (in_dom(he.vertices[0], pr[0]) && in_dom(he.vertices[1], pr[1])) he.allowed.push_back(pr);
        prov.push_back({"edge " + std::to_string(edges.size()), "cloud of vertex " + g.vertex_name(v)});
        edges.push_back(std::move(he));
      }
    }
    new_vertices_ = names.size();
    ConstraintGraph target_graph(2, Alphabet(squared_symbols(g.alphabet())), std::move(names), std::move(edges),
                                 std::move(domains));
    ReconfigInstance target{ProblemKind::Csp, std::move(target_graph), lift(src.start), lift(src.target),
                            std::nullopt};
    finish(std::move(target), std::move(prov));
  }

  State project_state(const State& psi) const override {
    const auto& g = source().csp();
    State out(g.num_vertices());
    for (std::size_t v = 0; v < out.size(); ++v) {
      if (cloud_[v].empty()) {
        out[v] = source().start[v];
        continue;
      }
      std::vector<int> values;
      for (int c : cloud_[v]) values.push_back(psi[c]);
      out[v] = static_cast<std::uint8_t>(plurality(values, g.domain(v)));
    }
    return out;
  }

  // Vertices without a cloud hold their start value, then move to their target value at the end.
  ReconfigSequence project_sequence(const ReconfigSequence& seq) const override {
    auto out = Reduction::project_sequence(seq);
    if (seq.empty() || seq.back() != target().target) return out;
    State s = out.back();
    for (std::size_t v = 0; v < s.size(); ++v)
      if (cloud_[v].empty() && s[v] != source().target[v]) {
        s[v] = source().target[v];
        out.push_back(s);
      }
    return out;
  }

 protected:
  State lift(const State& psi) const override {
    State out(new_vertices_);
    for (std::size_t v = 0; v < psi.size(); ++v)
      for (int c : cloud_[v]) out[c] = psi[v];
    return out;
  }

  void map_step(const State& prev, const State& next, const State& cur, std::vector<State>& out) const override {
    const auto v = detail::changed_position(prev, next);
    State state = cur;
    const int both = squared_index((1 << prev[v]) | (1 << next[v]));
    for (int target_value : {both, static_cast<int>(next[v])})
      for (int c : cloud_[v]) {
        state[c] = static_cast<std::uint8_t>(target_value);
        out.push_back(state);
      }
  }

 private:
  int& slot(std::size_t e, std::size_t v) {
    return source().csp().edge(e).vertices[0] == static_cast<int>(v) ? endpoint_[e].first : endpoint_[e].second;
  }

  std::vector<std::pair<int, int>> endpoint_;
  std::vector<std::vector<int>> cloud_;
  std::size_t new_vertices_ = 0;
};

}  // namespace

ReductionPtr degree_reduce_partial(const ReconfigInstance& src, const std::vector<int>& split,
                                   const CloudProvider& clouds) {
  return std::make_unique<DegreeReduce>(src, split, clouds);
}

ReductionPtr degree_reduce(const ReconfigInstance& src, const DegreeReductionParams& params) {
  detail::require(src.kind == ProblemKind::Csp, "degree_reduce: source must be a constraint graph");
  std::vector<int> all(src.csp().num_vertices());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<int>(v);
  auto provider = [&params](int vertex, int size) {
    auto p = params;
    p.seed = params.seed * 1000003ULL + static_cast<std::uint64_t>(vertex);
    return make_cloud(size, p).edges;
  };
  return std::make_unique<DegreeReduce>(src, all, provider);
}

}  // namespace reconf
