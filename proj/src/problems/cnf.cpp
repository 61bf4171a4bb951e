#include <algorithm>

#include "reconf/problems.hpp"

namespace reconf {

CnfFormula::CnfFormula(std::vector<std::string> variables, std::vector<Clause> clauses)
    : variables_(std::move(variables)), clauses_(std::move(clauses)), occurrences_(variables_.size(), 0) {
  bool uniform = !clauses_.empty();
  std::size_t width = clauses_.empty() ? 0 : clauses_.front().size();
  for (const auto& c : clauses_) {
    if (c.empty()) throw DomainError("empty clause");
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].var < 0 || static_cast<std::size_t>(c[i].var) >= variables_.size())
        throw DomainError("literal references unknown variable");
      ++occurrences_[c[i].var];
      for (std::size_t j = 0; j < i; ++j)
        if (c[j] == c[i]) uniform = false;
    }
    if (c.size() != width) uniform = false;
    max_width_ = std::max(max_width_, static_cast<int>(c.size()));
  }
  if (uniform) uniform_width_ = static_cast<int>(width);
  for (int o : occurrences_) occurrence_bound_ = std::max(occurrence_bound_, o);
}

bool CnfFormula::satisfied(std::size_t j, const State& sigma) const {
  for (const auto& l : clauses_[j])
    if (literal_true(l, sigma)) return true;
  return false;
}

Rational cnf_value(const CnfFormula& phi, const State& sigma) {
  if (phi.num_clauses() == 0) throw DomainError("cnf_value: empty formula");
  if (sigma.size() != phi.num_variables()) throw DomainError("cnf_value: assignment is not total");
  std::int64_t sat = 0;
  for (std::size_t j = 0; j < phi.num_clauses(); ++j) sat += phi.satisfied(j, sigma);
  return Rational(sat, static_cast<std::int64_t>(phi.num_clauses()));
}

}  // namespace reconf
