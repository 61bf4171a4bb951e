#include "reconf/pipeline.hpp"

namespace reconf {

Rational completeness_value(ReductionTag tag) { return tag == ReductionTag::E3satTo2sat ? Rational(7, 10) : Rational(1); }

bool completeness_holds(ReductionTag tag, const Rational& v) {
  switch (tag) {
    case ReductionTag::IsrToVcr: return v <= 1;
    case ReductionTag::NclToIsr:
    case ReductionTag::IsrToClique: return v >= 1;
    default: return v == completeness_value(tag);
  }
}

Rational two_sat_gadget_bound(const Rational& v) { return Rational(7, 10) - (1 - v) / 10; }

std::optional<Rational> soundness_rhs(const Reduction& r, const Rational& v) {
  switch (r.tag()) {
    case ReductionTag::QcspToEksat: {
      const auto m = static_cast<std::int64_t>(r.target().cnf().num_clauses());
      if (m == 0) return std::nullopt;
      return 1 - (1 - v) * Rational(static_cast<std::int64_t>(r.source().csp().num_edges()), m);
    }
    case ReductionTag::EksatToE3sat: return 1 - (1 - v) / (*r.source().cnf().uniform_width() - 2);
    case ReductionTag::E3satToBcsp3: return 1 - (1 - v) / 3;
    case ReductionTag::E3satTo2sat: return Rational(7, 10) - (1 - v);
    default: return std::nullopt;
  }
}

std::optional<SoundnessCheck> soundness_check(const Reduction& r, const Rational& source_value,
                                              const Rational& target_value) {
  SoundnessCheck c;
  c.lhs = target_value;
  if (auto rhs = soundness_rhs(r, source_value)) {
    c.rhs = *rhs;
    c.slack = c.rhs - c.lhs;
    c.holds = c.lhs <= c.rhs;
    switch (r.tag()) {
      case ReductionTag::QcspToEksat: c.statement = "v_target <= 1 - (1 - v_source) |E| / m"; break;
      case ReductionTag::EksatToE3sat: c.statement = "v_target <= 1 - (1 - v_source) / (k - 2)"; break;
      case ReductionTag::E3satToBcsp3: c.statement = "v_target <= 1 - (1 - v_source) / 3"; break;
      default: c.statement = "v_target <= 7/10 - (1 - v_source)"; break;
    }
    return c;
  }
  if (r.tag() == ReductionTag::IsrToVcr) {
    const auto n = static_cast<std::int64_t>(r.source().graph().num_vertices());
    const auto a = *r.source().set_bound;
    c.rhs = (n - (a - 1) * source_value) / (*r.target().set_bound + 1);
    c.statement = "v_vcr = (|V| - (alpha - 1) v_isr) / (beta + 1)";
  } else if (r.tag() == ReductionTag::IsrToClique) {
    c.rhs = source_value;
    c.statement = "v_clique = v_isr";
  } else {
    return std::nullopt;
  }
  c.slack = 0;
  c.holds = c.lhs == c.rhs;
  return c;
}

SoundnessCheck ncl_isr_projection_check(const Reduction& r, const ReconfigSequence& seq) {
  if (r.tag() != ReductionTag::NclToIsr) throw DomainError("projection check applies to ncl_to_isr only");
  const auto& g = r.source().ncl();
  const auto a = static_cast<std::int64_t>(*r.target().set_bound);
  const auto nodes = static_cast<std::int64_t>(g.num_nodes());
  SoundnessCheck c;
  c.statement = "per state: violated nodes <= 2 (alpha - |I|); node value >= (|V| - 2 (alpha - min|I|)) / |V|";
  c.holds = !seq.empty() && nodes > 0;
  std::int64_t min_size = a;
  Rational min_value(1);
  for (const auto& members : seq) {
    const auto size = static_cast<std::int64_t>(subset_size(members));
    min_size = std::min(min_size, size);
    const auto o = r.project_state(members);
    std::int64_t violated = 0;
    for (std::size_t v = 0; v < g.num_nodes(); ++v) violated += !g.node_satisfied(v, o);
    c.holds = c.holds && violated <= 2 * (a - size);
    if (nodes > 0) min_value = std::min(min_value, Rational(nodes - violated, nodes));
  }
  c.lhs = min_value;
  c.rhs = nodes > 0 ? Rational(nodes - 2 * (a - min_size), nodes) : Rational(0);
  c.slack = c.lhs - c.rhs;
  c.holds = c.holds && c.lhs >= c.rhs;
  return c;
}

}  // namespace reconf
