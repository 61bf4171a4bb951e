#include <algorithm>

#include "reconf/problems.hpp"

namespace reconf {

namespace {

bool payload_matches(const ReconfigInstance& in) {
  switch (in.kind) {
    case ProblemKind::Csp: return std::holds_alternative<ConstraintGraph>(in.payload);
    case ProblemKind::Sat: return std::holds_alternative<CnfFormula>(in.payload);
    case ProblemKind::Ncl: return std::holds_alternative<NclGraph>(in.payload);
    default: return std::holds_alternative<SimpleGraph>(in.payload);
  }
}

bool is_set_kind(ProblemKind k) {
  return k == ProblemKind::IndependentSet || k == ProblemKind::VertexCover || k == ProblemKind::Clique;
}

}  // namespace

bool minimizes(ProblemKind kind) { return kind == ProblemKind::VertexCover; }

std::size_t state_length(const ReconfigInstance& in) {
  return std::visit(
      [](const auto& p) -> std::size_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstraintGraph>) return p.num_vertices();
        else if constexpr (std::is_same_v<T, CnfFormula>) return p.num_variables();
        else if constexpr (std::is_same_v<T, NclGraph>) return p.num_links();
        else return p.num_vertices();
      },
      in.payload);
}

bool state_well_formed(const ReconfigInstance& in, const State& s) {
  if (s.size() != state_length(in)) return false;
  if (in.kind == ProblemKind::Csp) {
    const auto& g = in.csp();
    for (std::size_t v = 0; v < s.size(); ++v)
      if (!g.in_domain(v, s[v])) return false;
    return true;
  }
  return std::all_of(s.begin(), s.end(), [](auto b) { return b <= 1; });
}

bool state_feasible(const ReconfigInstance& in, const State& s) {
  if (!state_well_formed(in, s)) return false;
  switch (in.kind) {
    case ProblemKind::IndependentSet: return is_independent_set(in.graph(), s);
    case ProblemKind::VertexCover: return is_vertex_cover(in.graph(), s);
    case ProblemKind::Clique: return is_clique(in.graph(), s);
    default: return true;
  }
}

void validate(const ReconfigInstance& in) {
  if (!payload_matches(in)) throw DomainError("payload does not match problem kind");
  if (!state_feasible(in, in.start)) throw DomainError("start state malformed or infeasible");
  if (!state_feasible(in, in.target)) throw DomainError("target state malformed or infeasible");
  if (is_set_kind(in.kind) && !in.set_bound) throw DomainError("set instance needs its bound attribute");
}

std::int64_t value_denominator(const ReconfigInstance& in) {
  switch (in.kind) {
    case ProblemKind::Csp:
      if (in.csp().num_edges() == 0) throw DomainError("empty edge set");
      return static_cast<std::int64_t>(in.csp().num_edges());
    case ProblemKind::Sat:
      if (in.cnf().num_clauses() == 0) throw DomainError("empty formula");
      return static_cast<std::int64_t>(in.cnf().num_clauses());
    case ProblemKind::Ncl:
      if (in.ncl().num_nodes() == 0) throw DomainError("empty NCL graph");
      return static_cast<std::int64_t>(in.ncl().num_nodes());
    case ProblemKind::IndependentSet:
    case ProblemKind::Clique:
      if (!in.set_bound || *in.set_bound < 2) throw DomainError("set bound must be at least 2");
      return *in.set_bound - 1;
    case ProblemKind::VertexCover:
      if (!in.set_bound || *in.set_bound < 0) throw DomainError("vertex cover bound missing");
      return *in.set_bound + 1;
  }
  return 1;
}

std::int64_t state_score(const ReconfigInstance& in, const State& s) {
  std::int64_t score = 0;
  switch (in.kind) {
    case ProblemKind::Csp:
      for (std::size_t e = 0; e < in.csp().num_edges(); ++e) score += in.csp().satisfied(e, s);
      break;
    case ProblemKind::Sat:
      for (std::size_t j = 0; j < in.cnf().num_clauses(); ++j) score += in.cnf().satisfied(j, s);
      break;
    case ProblemKind::Ncl:
      for (std::size_t v = 0; v < in.ncl().num_nodes(); ++v) score += in.ncl().node_satisfied(v, s);
      break;
    default: score = static_cast<std::int64_t>(subset_size(s));
  }
  return score;
}

Rational state_value(const ReconfigInstance& in, const State& s) {
  if (!state_feasible(in, s)) throw DomainError("state malformed or infeasible");
  return Rational(state_score(in, s), value_denominator(in));
}

bool adjacent(ProblemKind, const State& s, const State& t) {
  if (s.size() != t.size()) throw DomainError("adjacent: mismatched state shapes");
  std::size_t diff = 0;
  for (std::size_t i = 0; i < s.size(); ++i) diff += s[i] != t[i];
  return diff == 1;
}

Rational set_sequence_value(ProblemKind kind, const SimpleGraph& g, const ReconfigSequence& seq, int bound) {
  if (kind != ProblemKind::IndependentSet && kind != ProblemKind::VertexCover)
    throw DomainError("set_sequence_value: kind must be ISR or VCR");
  if (seq.empty()) throw DomainError("set_sequence_value: empty sequence");
  const bool isr = kind == ProblemKind::IndependentSet;
  if (isr && bound < 2) throw DomainError("set_sequence_value: alpha(G) must be at least 2");
  if (!isr && bound < 0) throw DomainError("set_sequence_value: negative beta(G)");
  std::size_t best = isr ? g.num_vertices() + 1 : 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& s = seq[i];
    if (s.size() != g.num_vertices()) throw SequenceError(i, "state has wrong length");
    if (isr ? !is_independent_set(g, s) : !is_vertex_cover(g, s))
      throw SequenceError(i, isr ? "not an independent set" : "not a vertex cover");
    auto size = subset_size(s);
    best = isr ? std::min(best, size) : std::max(best, size);
  }
  return Rational(static_cast<std::int64_t>(best), isr ? bound - 1 : bound + 1);
}

SequenceReport verify_sequence(const ReconfigInstance& in, const ReconfigSequence& seq, const Rational& threshold) {
  SequenceReport r;
  if (seq.empty()) {
    r.valid_steps = false;
    r.endpoints_match = false;
    r.first_violation_index = 0;
    return r;
  }
  const bool minimize = minimizes(in.kind);
  std::optional<std::int64_t> best;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!state_feasible(in, seq[i]) ||
        (i > 0 && seq[i] != seq[i - 1] && !adjacent(in.kind, seq[i - 1], seq[i]))) {
      r.valid_steps = false;
      r.first_violation_index = i;
      break;
    }
    auto score = state_score(in, seq[i]);
    if (!best || (minimize ? score > *best : score < *best)) best = score;
  }
  r.endpoints_match = seq.front() == in.start && seq.back() == in.target;
  if (r.valid_steps && best) {
    r.value = Rational(*best, value_denominator(in));
    r.meets_threshold = minimize ? *r.value <= threshold : *r.value >= threshold;
  }
  return r;
}

}  // namespace reconf
