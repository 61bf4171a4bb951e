#include "common.hpp"

namespace reconf {

namespace {

class E3satTo2sat final : public Reduction {
 public:
  explicit E3satTo2sat(const ReconfigInstance& src) : Reduction(ReductionTag::E3satTo2sat, src) {
    detail::require_3sat(src, "e3sat_to_2sat");
    const auto& phi = src.cnf();
    n_ = phi.num_variables();
    std::vector<std::string> vars = phi.variables();
    std::vector<Clause> clauses;
    std::vector<ProvenanceEntry> prov;
    for (std::size_t j = 0; j < phi.num_clauses(); ++j) {
      vars.push_back("z[" + std::to_string(j) + "]");
      prov.push_back({"var " + vars.back(), "clause " + std::to_string(j)});
    }
    for (std::size_t j = 0; j < phi.num_clauses(); ++j) {
      const auto& c = phi.clause(j);
      const Literal z{static_cast<int>(n_ + j), true}, nz{z.var, false};
      auto neg = [](Literal l) { return Literal{l.var, !l.positive}; };
      std::vector<Clause> ten = {{c[0]},
                                 {c[1]},
                                 {c[2]},
                                 {z},
                                 {neg(c[0]), neg(c[1])},
                                 {neg(c[1]), neg(c[2])},
                                 {neg(c[2]), neg(c[0])},
                                 {c[0], nz},
                                 {c[1], nz},
                                 {c[2], nz}};
      for (auto& t : ten) {
        prov.push_back({"clause " + std::to_string(clauses.size()), "clause " + std::to_string(j)});
        clauses.push_back(std::move(t));
      }
    }
    ReconfigInstance target{ProblemKind::Sat, CnfFormula(std::move(vars), std::move(clauses)), lift(src.start),
                            lift(src.target), std::nullopt};
    finish(std::move(target), std::move(prov));
  }

  State project_state(const State& s) const override { return State(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n_)); }

 protected:
  State lift(const State& sigma) const override {
    State out = sigma;
    for (std::size_t j = 0; j < source().cnf().num_clauses(); ++j) out.push_back(z_rule(true_count(j, sigma)));
    return out;
  }

  void map_step(const State& prev, const State& next, const State& cur, std::vector<State>& out) const override {
    const auto x = detail::changed_position(prev, next);
    State state = cur;
    std::vector<std::size_t> after;
    for (std::size_t j = 0; j < source().cnf().num_clauses(); ++j) {
      auto before = true_count(j, prev), now = true_count(j, next);
      if (before == 2 && now == 3) {
        state[n_ + j] = 1;
        out.push_back(state);
      } else if (before == 3 && now == 2) {
        after.push_back(j);
      }
    }
    state[x] = next[x];
    out.push_back(state);
    for (auto j : after) {
      state[n_ + j] = 0;
      out.push_back(state);
    }
  }

 private:
  static std::uint8_t z_rule(int count) { return count == 1 || count == 2 ? 0 : 1; }

  int true_count(std::size_t j, const State& sigma) const {
    int c = 0;
    for (const auto& l : source().cnf().clause(j)) c += literal_true(l, sigma);
    return c;
  }

  std::size_t n_ = 0;
};

}  // namespace

ReductionPtr e3sat_to_2sat(const ReconfigInstance& src) { return std::make_unique<E3satTo2sat>(src); }

}  // namespace reconf
