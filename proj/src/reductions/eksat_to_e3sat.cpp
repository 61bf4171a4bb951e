#include <deque>
#include <map>

#include "common.hpp"

namespace reconf {

namespace {

class EksatToE3sat final : public Reduction {
 public:
  explicit EksatToE3sat(const ReconfigInstance& src) : Reduction(ReductionTag::EksatToE3sat, src) {
    detail::require(src.kind == ProblemKind::Sat, "eksat_to_e3sat: source must be a CNF instance");
    validate(src);
    const auto& phi = src.cnf();
    auto w = phi.uniform_width();
    detail::require(w.has_value(), "eksat_to_e3sat: non-uniform clause width");
    detail::require(*w >= 4, "eksat_to_e3sat: width must be at least 4");
    k_ = *w;
    n_ = phi.num_variables();

    std::vector<std::string> vars = phi.variables();
    std::vector<ProvenanceEntry> prov;
    for (std::size_t j = 0; j < phi.num_clauses(); ++j)
      for (int i = 1; i <= k_ - 3; ++i) {
        vars.push_back("z[" + std::to_string(j) + "," + std::to_string(i) + "]");
        prov.push_back({"var " + vars.back(), "clause " + std::to_string(j)});
      }
    std::vector<Clause> clauses;
    for (std::size_t j = 0; j < phi.num_clauses(); ++j)
      for (auto& c : chain(j)) {
        prov.push_back({"clause " + std::to_string(clauses.size()), "clause " + std::to_string(j)});
        clauses.push_back(std::move(c));
      }
    for (std::size_t i = 0; i < n_; ++i) prov.push_back({"var " + vars[i], "var " + vars[i]});
    ReconfigInstance target{ProblemKind::Sat, CnfFormula(std::move(vars), std::move(clauses)), lift(src.start),
                            lift(src.target), std::nullopt};
    finish(std::move(target), std::move(prov));
  }

  State project_state(const State& s) const override { return State(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n_)); }

 protected:
  State lift(const State& sigma) const override {
    State out = sigma;
    const auto& phi = source().cnf();
    for (std::size_t j = 0; j < phi.num_clauses(); ++j) {
      auto z = canonical_block(j, sigma);
      out.insert(out.end(), z.begin(), z.end());
    }
    return out;
  }

  void map_step(const State& prev, const State& next, const State& cur, std::vector<State>& out) const override {
    const auto x = detail::changed_position(prev, next);
    const auto& phi = source().cnf();
    std::vector<std::size_t> touched;
    for (std::size_t j = 0; j < phi.num_clauses(); ++j)
      for (const auto& l : phi.clause(j))
        if (static_cast<std::size_t>(l.var) == x) {
          touched.push_back(j);
          break;
        }
    State state = cur;
    for (auto j : touched)
      move_block(j, state, prev, [&](const State& z) { return chain_ok(j, prev, z) && chain_ok(j, next, z); }, out);
    state[x] = next[x];
    out.push_back(state);
    for (auto j : touched) {
      auto goal = canonical_block(j, next);
      move_block(j, state, next, [&](const State& z) { return z == goal; }, out);
    }
  }

 private:
  std::size_t zvar(std::size_t j, int i) const { return n_ + j * (k_ - 3) + (i - 1); }

  std::vector<Clause> chain(std::size_t j) const {
    const auto& c = source().cnf().clause(j);
    auto z = [&](int i, bool pos) { return Literal{static_cast<int>(zvar(j, i)), pos}; };
    std::vector<Clause> out;
    out.push_back({c[0], c[1], z(1, true)});
    for (int i = 2; i <= k_ - 3; ++i) out.push_back({c[i], z(i - 1, false), z(i, true)});
    out.push_back({c[k_ - 2], c[k_ - 1], z(k_ - 3, false)});
    return out;
  }

  // z-block of clause j that is valid under sigma: i* = first true literal (1 if none).
  State canonical_block(std::size_t j, const State& sigma) const {
    const auto& c = source().cnf().clause(j);
    int star = 1;
    for (int i = 0; i < k_; ++i)
      if (literal_true(c[i], sigma)) {
        star = i + 1;
        break;
      }
    State z(k_ - 3);
    for (int i = 1; i <= k_ - 3; ++i) z[i - 1] = i <= star - 2;
    return z;
  }

  bool chain_ok(std::size_t j, const State& sigma, const State& z) const {
    State full = sigma;
    full.resize(n_ + source().cnf().num_clauses() * (k_ - 3), 0);
    for (int i = 1; i <= k_ - 3; ++i) full[zvar(j, i)] = z[i - 1];
    for (const auto& c : chain(j)) {
      bool sat = false;
      for (const auto& l : c) sat = sat || literal_true(l, full);
      if (!sat) return false;
    }
    return true;
  }

  // BFS over the clause's z-block with the original variables frozen at sigma.
  template <class Goal>
  void move_block(std::size_t j, State& state, const State& sigma, Goal&& goal, std::vector<State>& out) const {
    State start(state.begin() + static_cast<std::ptrdiff_t>(zvar(j, 1)),
                state.begin() + static_cast<std::ptrdiff_t>(zvar(j, 1) + k_ - 3));
    if (goal(start)) return;
    std::map<State, State> parent{{start, start}};
    std::deque<State> queue{start};
    std::optional<State> found;
    while (!queue.empty() && !found) {
      auto z = queue.front();
      queue.pop_front();
      for (int i = 0; i < k_ - 3 && !found; ++i) {
        auto y = z;
        y[i] ^= 1;
        if (parent.count(y) || !chain_ok(j, sigma, y)) continue;
        parent.emplace(y, z);
        if (goal(y)) found = y;
        queue.push_back(y);
      }
    }
    if (!found) throw std::logic_error("eksat_to_e3sat: z-block cannot be moved");
    std::vector<State> path;
    for (auto z = *found; z != start; z = parent.at(z)) path.push_back(z);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      for (int i = 1; i <= k_ - 3; ++i) state[zvar(j, i)] = (*it)[i - 1];
      out.push_back(state);
    }
  }

  int k_ = 0;
  std::size_t n_ = 0;
};

}  // namespace

ReductionPtr eksat_to_e3sat(const ReconfigInstance& src) { return std::make_unique<EksatToE3sat>(src); }

}  // namespace reconf
