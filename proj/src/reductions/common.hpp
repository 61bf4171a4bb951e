#pragma once

#include <string>

#include "reconf/reductions.hpp"

namespace reconf::detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

inline std::size_t changed_position(const State& a, const State& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return i;
  throw std::logic_error("states are identical");
}

inline void require_3sat(const ReconfigInstance& src, const char* who) {
  require(src.kind == ProblemKind::Sat, std::string(who) + ": source must be a CNF instance");
  validate(src);
  auto w = src.cnf().uniform_width();
  require(w && *w == 3, std::string(who) + ": every clause needs exactly 3 distinct literals");
}

inline void require_distinct_variables(const CnfFormula& phi, const char* who) {
  for (const auto& c : phi.clauses())
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        require(c[i].var != c[j].var, std::string(who) + ": a clause mentions the same variable twice");
}

}  // namespace reconf::detail
