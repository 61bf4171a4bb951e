#include "common.hpp"

namespace reconf {

namespace {

struct LiteralTree {
  std::size_t root = 0;
  std::vector<std::size_t> links;  // pre-order, root first
};

class E3satToNcl final : public Reduction {
 public:
  explicit E3satToNcl(const ReconfigInstance& src) : Reduction(ReductionTag::E3satToNcl, src) {
    detail::require_3sat(src, "e3sat_to_ncl");
    const auto& phi = src.cnf();
    detail::require_distinct_variables(phi, "e3sat_to_ncl");
    const auto n = phi.num_variables();
    std::vector<NclNode> nodes;
    std::vector<NclLink> links;
    std::vector<ProvenanceEntry> prov;
    auto add_node = [&](std::string name, NodeKind kind, const std::string& from) {
      prov.push_back({"node " + name, from});
      nodes.push_back({std::move(name), kind});
      return static_cast<int>(nodes.size() - 1);
    };
    auto add_link = [&](int a, int b, LinkColor c, const std::string& from) {
      prov.push_back({"link " + std::to_string(links.size()), from});
      links.push_back({a, b, c});
      return links.size() - 1;
    };

    std::vector<int> choice(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& x = phi.variable_name(i);
      choice[i] = add_node(x, NodeKind::Choice, "var " + x);
      int term = add_node(x + ":free", NodeKind::FreeTerminator, "var " + x);
      terminal_links_.push_back(add_link(choice[i], term, LinkColor::Red, "var " + x));
    }
    std::vector<int> clause_node;
    for (std::size_t j = 0; j < phi.num_clauses(); ++j)
      clause_node.push_back(add_node("C" + std::to_string(j + 1), NodeKind::Or, "clause " + std::to_string(j)));

    trees_.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (bool positive : {true, false}) {
        const std::string lit = phi.variable_name(i) + (positive ? "+" : "-");
        const std::string from = "literal " + lit;
        std::vector<std::size_t> occ;
        for (std::size_t j = 0; j < phi.num_clauses(); ++j)
          for (const auto& l : phi.clause(j))
            if (l.var == static_cast<int>(i) && l.positive == positive) occ.push_back(j);
        auto& tree = trees_[2 * i + (positive ? 0 : 1)];
        if (occ.empty()) {
          int end = add_node(lit + ":free", NodeKind::FreeTerminator, from);
          tree.links.push_back(add_link(choice[i], end, LinkColor::Red, from));
        } else {
          int rb = add_node(lit + ":rb0", NodeKind::RedBlue, from);
          tree.links.push_back(add_link(choice[i], rb, LinkColor::Red, from));
          for (std::size_t k = 0; k < occ.size(); ++k) {
            const auto tag = std::to_string(k + 1);
            if (k + 1 == occ.size()) {
              tree.links.push_back(add_link(rb, clause_node[occ[k]], LinkColor::Blue, from));
              break;
            }
            int fo = add_node(lit + ":fo" + tag, NodeKind::Fanout, from);
            tree.links.push_back(add_link(rb, fo, LinkColor::Blue, from));
            int leaf = add_node(lit + ":rb" + tag + "a", NodeKind::RedBlue, from);
            tree.links.push_back(add_link(fo, leaf, LinkColor::Red, from));
            tree.links.push_back(add_link(leaf, clause_node[occ[k]], LinkColor::Blue, from));
            rb = add_node(lit + ":rb" + tag + "b", NodeKind::RedBlue, from);
            tree.links.push_back(add_link(fo, rb, LinkColor::Red, from));
          }
        }
        tree.root = tree.links.front();
      }
    num_links_ = links.size();
    ReconfigInstance target{ProblemKind::Ncl, NclGraph(std::move(nodes), std::move(links)), lift(src.start),
                            lift(src.target), std::nullopt};
    finish(std::move(target), std::move(prov));
  }

  State project_state(const State& o) const override {
    State sigma(trees_.size() / 2);
    for (std::size_t i = 0; i < sigma.size(); ++i)
      sigma[i] = o[trees_[2 * i].root] == 1 && o[trees_[2 * i + 1].root] == 0;
    return sigma;
  }

  const LiteralTree& tree(std::size_t var, bool positive) const { return trees_[2 * var + (positive ? 0 : 1)]; }

 protected:
  // Terminal links point into their CHOICE node; literal trees point away from the variable iff the literal is true.
  State lift(const State& sigma) const override {
    State o(num_links_, 0);
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (bool positive : {true, false})
        for (auto l : tree(i, positive).links) o[l] = (sigma[i] != 0) == positive;
    return o;
  }

  void map_step(const State& prev, const State& next, const State& cur, std::vector<State>& out) const override {
    const auto x = detail::changed_position(prev, next);
    State state = cur;
    const auto& falling = tree(x, prev[x] != 0).links;
    for (auto it = falling.rbegin(); it != falling.rend(); ++it)
      if (state[*it] != 0) {
        state[*it] = 0;
        out.push_back(state);
      }
    for (auto l : tree(x, next[x] != 0).links)
      if (state[l] != 1) {
        state[l] = 1;
        out.push_back(state);
      }
  }

 private:
  std::vector<std::size_t> terminal_links_;
  std::vector<LiteralTree> trees_;
  std::size_t num_links_ = 0;
};

}  // namespace

ReductionPtr e3sat_to_ncl(const ReconfigInstance& src) { return std::make_unique<E3satToNcl>(src); }

}  // namespace reconf
