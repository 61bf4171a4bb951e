#include "common.hpp"

namespace reconf {

namespace {

// Variable vertices use a = T, b = F; clause vertices use a, b, c for literal positions 1, 2, 3.
constexpr std::uint8_t kTrue = 0, kFalse = 1;

class E3satToBcsp3 final : public Reduction {
 public:
  explicit E3satToBcsp3(const ReconfigInstance& src) : Reduction(ReductionTag::E3satToBcsp3, src) {
    detail::require_3sat(src, "e3sat_to_bcsp3");
    const auto& phi = src.cnf();
    detail::require_distinct_variables(phi, "e3sat_to_bcsp3");
    n_ = phi.num_variables();
    std::vector<std::string> names = phi.variables();
    std::vector<std::vector<int>> domains(n_, {kTrue, kFalse});
    std::vector<Hyperedge> edges;
    std::vector<ProvenanceEntry> prov;
    for (std::size_t i = 0; i < n_; ++i) prov.push_back({"vertex " + names[i], "var " + names[i]});
    for (std::size_t j = 0; j < phi.num_clauses(); ++j) {
      names.push_back("C" + std::to_string(j + 1));
      domains.push_back({0, 1, 2});
      prov.push_back({"vertex " + names.back(), "clause " + std::to_string(j)});
      const auto cv = static_cast<int>(n_ + j);
      for (int p = 0; p < 3; ++p) {
        const auto& l = phi.clause(j)[p];
        Hyperedge e{{l.var, cv}, {}};
        const int forbidden_value = l.positive ? kFalse : kTrue;
        for (int tv : {kTrue, kFalse})
          for (int lp = 0; lp < 3; ++lp)
            if (!(tv == forbidden_value && lp == p)) e.allowed.push_back({tv, lp});
        prov.push_back({"edge " + std::to_string(edges.size()),
                        "clause " + std::to_string(j) + " literal " + std::to_string(p + 1)});
        edges.push_back(std::move(e));
      }
    }
    ConstraintGraph g(2, Alphabet({"a", "b", "c"}), std::move(names), std::move(edges), std::move(domains));
    ReconfigInstance target{ProblemKind::Csp, std::move(g), lift(src.start), lift(src.target), std::nullopt};
    finish(std::move(target), std::move(prov));
  }

  State project_state(const State& psi) const override {
    State sigma(n_);
    for (std::size_t i = 0; i < n_; ++i) sigma[i] = psi[i] == kTrue;
    return sigma;
  }

 protected:
  State lift(const State& sigma) const override {
    const auto& phi = source().cnf();
    State psi(n_);
    for (std::size_t i = 0; i < n_; ++i) psi[i] = sigma[i] ? kTrue : kFalse;
    for (std::size_t j = 0; j < phi.num_clauses(); ++j) psi.push_back(first_true(j, sigma, -1).value_or(0));
    return psi;
  }

  void map_step(const State& prev, const State& next, const State& cur, std::vector<State>& out) const override {
    const auto x = static_cast<int>(detail::changed_position(prev, next));
    const auto& phi = source().cnf();
    State state = cur;
    auto set_clause = [&](std::size_t j, std::uint8_t p) {
      if (state[n_ + j] == p) return;
      state[n_ + j] = p;
      out.push_back(state);
    };
    std::vector<std::size_t> touched;
    for (std::size_t j = 0; j < phi.num_clauses(); ++j)
      for (const auto& l : phi.clause(j))
        if (l.var == x) touched.push_back(j);
    for (auto j : touched) {
      auto p = first_true(j, prev, x);
      if (!p) throw std::logic_error("e3sat_to_bcsp3: clause has no stable true literal");
      set_clause(j, *p);
    }
    state[x] = next[x] ? kTrue : kFalse;
    out.push_back(state);
    for (auto j : touched) set_clause(j, *first_true(j, next, -1));
  }

 private:
  std::optional<std::uint8_t> first_true(std::size_t j, const State& sigma, int skip_var) const {
    const auto& c = source().cnf().clause(j);
    for (int p = 0; p < 3; ++p)
      if (c[p].var != skip_var && literal_true(c[p], sigma)) return static_cast<std::uint8_t>(p);
    return std::nullopt;
  }

  std::size_t n_ = 0;
};

}  // namespace

ReductionPtr e3sat_to_bcsp3(const ReconfigInstance& src) { return std::make_unique<E3satToBcsp3>(src); }

}  // namespace reconf
