#include <algorithm>

#include "common.hpp"
#include "reconf/oracle.hpp"

namespace reconf {

namespace {

class NclToIsr final : public Reduction {
 public:
  explicit NclToIsr(const ReconfigInstance& src) : Reduction(ReductionTag::NclToIsr, src) {
    detail::require(src.kind == ProblemKind::Ncl, "ncl_to_isr: source must be an NCL instance");
    validate(src);
    const auto& g = src.ncl();
    detail::require(g.and_or_only(), "ncl_to_isr: only AND and OR nodes are supported");
    detail::require((g.count(NodeKind::And) + g.count(NodeKind::Or)) % 2 == 0,
                    "ncl_to_isr: the number of AND and OR nodes must be even");
    detail::require(g.num_nodes() == 0 || (ncl_value(g, src.start) == Rational(1) && ncl_value(g, src.target) == Rational(1)),
                    "ncl_to_isr: start and target orientations must satisfy every node");

    std::vector<std::pair<int, int>> edges;
    std::vector<ProvenanceEntry> prov;
    p_.assign(g.num_links(), {-1, -1});
    t_.assign(g.num_nodes(), {});
    int next = 0;
    for (std::size_t v = 0; v < g.num_nodes(); ++v) {
      const auto& inc = g.incident_links(v);
      const auto& name = g.node(v).name;
      std::vector<int> own;
      for (auto l : inc) {
        own.push_back(next);
        side(l, v) = next;
        prov.push_back({"vertex " + std::to_string(next++), "node " + name + " link " + std::to_string(l)});
      }
      if (g.node(v).kind == NodeKind::And) {
        std::size_t blue = 0;
        while (g.link(inc[blue]).color != LinkColor::Blue) ++blue;
        for (std::size_t i = 0; i < inc.size(); ++i)
          if (i != blue) edges.emplace_back(own[blue], own[i]);
      } else {
        for (std::size_t i = 0; i < inc.size(); ++i) {
          t_[v].push_back(next);
          edges.emplace_back(next, own[i]);
          prov.push_back({"vertex " + std::to_string(next++), "node " + name + " triangle"});
        }
        edges.emplace_back(t_[v][0], t_[v][1]);
        edges.emplace_back(t_[v][1], t_[v][2]);
        edges.emplace_back(t_[v][0], t_[v][2]);
      }
    }
    for (std::size_t l = 0; l < g.num_links(); ++l) edges.emplace_back(p_[l].first, p_[l].second);
    SimpleGraph host(static_cast<std::size_t>(next), std::move(edges));
    const int a = alpha(host);
    ReconfigInstance target{ProblemKind::IndependentSet, std::move(host), lift(src.start), lift(src.target), a};
    finish(std::move(target), std::move(prov));
  }

  // Link (a,b) points toward a exactly when b's token-edge endpoint is chosen.
  State project_state(const State& members) const override {
    State o(p_.size());
    for (std::size_t l = 0; l < p_.size(); ++l) o[l] = members[p_[l].second] ? 0 : 1;
    return o;
  }

 protected:
  State lift(const State& o) const override {
    const auto& g = source().ncl();
    State members(vertex_count(), 0);
    for (std::size_t l = 0; l < p_.size(); ++l) members[o[l] ? p_[l].first : p_[l].second] = 1;
    for (std::size_t v = 0; v < g.num_nodes(); ++v)
      if (auto i = canonical_triangle(v, o)) members[t_[v][*i]] = 1;
    return members;
  }

  void map_step(const State& prev, const State& next, const State& cur, std::vector<State>& out) const override {
    const auto& g = source().ncl();
    const auto l = detail::changed_position(prev, next);
    const auto& link = g.link(l);
    const auto old_head = static_cast<std::size_t>(NclGraph::head(link, prev[l]));
    const auto new_head = static_cast<std::size_t>(NclGraph::head(link, next[l]));
    State state = cur;
    auto set = [&](int vertex, std::uint8_t value) {
      if (state[vertex] == value) return;
      state[vertex] = value;
      out.push_back(state);
    };
    auto retoken = [&](std::size_t v) {
      if (g.node(v).kind != NodeKind::Or) return;
      auto want = canonical_triangle(v, next);
      for (std::size_t i = 0; i < t_[v].size(); ++i)
        if (state[t_[v][i]] && (!want || *want != i)) set(t_[v][i], 0);
      if (want) set(t_[v][*want], 1);
    };
    retoken(old_head);
    set(own(l, new_head), 0);
    set(own(l, old_head), 1);
    retoken(new_head);
  }

 private:
  std::size_t vertex_count() const {
    std::size_t n = 2 * p_.size();
    for (const auto& t : t_) n += t.size();
    return n;
  }
  int& side(std::size_t l, std::size_t v) {
    return source().ncl().link(l).a == static_cast<int>(v) ? p_[l].first : p_[l].second;
  }
  int own(std::size_t l, std::size_t v) const {
    return source().ncl().link(l).a == static_cast<int>(v) ? p_[l].first : p_[l].second;
  }
  // Index of the first incident link pointing into OR node v.
  std::optional<std::size_t> canonical_triangle(std::size_t v, const State& o) const {
    const auto& g = source().ncl();
    if (g.node(v).kind != NodeKind::Or) return std::nullopt;
    const auto& inc = g.incident_links(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      if (g.inward(inc[i], v, o)) return i;
    return std::nullopt;
  }

  std::vector<std::pair<int, int>> p_;  // per link: vertex on the a side, vertex on the b side
  std::vector<std::vector<int>> t_;
};

}  // namespace

ReductionPtr ncl_to_isr(const ReconfigInstance& src) { return std::make_unique<NclToIsr>(src); }

}  // namespace reconf
