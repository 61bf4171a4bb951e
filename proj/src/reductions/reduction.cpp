#include <algorithm>

#include "reconf/reductions.hpp"

namespace reconf {

namespace {

constexpr ReductionTag kTags[] = {
    ReductionTag::QcspToEksat, ReductionTag::EksatToE3sat, ReductionTag::E3satToBcsp3,
    ReductionTag::DegreeReduce, ReductionTag::E3satToNcl, ReductionTag::NclToIsr,
    ReductionTag::IsrToVcr,    ReductionTag::IsrToClique,  ReductionTag::E3satTo2sat,
};

}  // namespace

std::string_view to_string(ReductionTag tag) {
  switch (tag) {
    case ReductionTag::QcspToEksat: return "qcsp_to_eksat";
    case ReductionTag::EksatToE3sat: return "eksat_to_e3sat";
    case ReductionTag::E3satToBcsp3: return "e3sat_to_bcsp3";
    case ReductionTag::DegreeReduce: return "degree_reduce";
    case ReductionTag::E3satToNcl: return "e3sat_to_ncl";
    case ReductionTag::NclToIsr: return "ncl_to_isr";
    case ReductionTag::IsrToVcr: return "isr_to_vcr";
    case ReductionTag::IsrToClique: return "isr_to_clique";
    case ReductionTag::E3satTo2sat: return "e3sat_to_2sat";
  }
  return "?";
}

ReductionTag parse_reduction_tag(std::string_view name) {
  for (auto t : kTags)
    if (to_string(t) == name) return t;
  throw DomainError("unknown reduction tag: " + std::string(name));
}

std::vector<ReductionTag> all_reduction_tags() { return {std::begin(kTags), std::end(kTags)}; }

StructuralReport structure_of(const ReconfigInstance& in) {
  StructuralReport r;
  switch (in.kind) {
    case ProblemKind::Csp: {
      const auto& g = in.csp();
      r.elements = g.num_vertices();
      r.constraints = g.num_edges();
      r.uniform_width = g.arity();
      r.max_width = g.arity();
      r.occurrence_bound = g.max_degree();
      r.alphabet = g.alphabet().size();
      break;
    }
    case ProblemKind::Sat: {
      const auto& f = in.cnf();
      r.elements = f.num_variables();
      r.constraints = f.num_clauses();
      r.uniform_width = f.uniform_width();
      r.max_width = f.max_width();
      r.occurrence_bound = f.occurrence_bound();
      r.alphabet = 2;
      break;
    }
    case ProblemKind::Ncl: {
      const auto& g = in.ncl();
      r.elements = g.num_nodes();
      r.constraints = g.num_links();
      for (std::size_t v = 0; v < g.num_nodes(); ++v)
        r.occurrence_bound = std::max(r.occurrence_bound, static_cast<int>(g.incident_links(v).size()));
      r.alphabet = 2;
      break;
    }
    default: {
      const auto& g = in.graph();
      r.elements = g.num_vertices();
      r.constraints = g.num_edges();
      for (std::size_t v = 0; v < g.num_vertices(); ++v)
        r.occurrence_bound = std::max(r.occurrence_bound, static_cast<int>(g.neighbors(v).size()));
      r.alphabet = 2;
    }
  }
  return r;
}

void Reduction::finish(ReconfigInstance target, std::vector<ProvenanceEntry> provenance) {
  artifact_.structure = structure_of(target);
  artifact_.target = std::move(target);
  artifact_.provenance = std::move(provenance);
}

ReconfigSequence Reduction::map_sequence(const ReconfigSequence& seq) const {
  if (seq.empty()) throw SequenceError(0, "empty source sequence");
  if (seq.front() != source_.start) throw SequenceError(0, "sequence does not start at the source start state");
  if (seq.back() != source_.target)
    throw SequenceError(seq.size() - 1, "sequence does not end at the source target state");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!state_feasible(source_, seq[i])) throw SequenceError(i, "malformed or infeasible state");
    if (i > 0 && seq[i] != seq[i - 1] && !adjacent(source_.kind, seq[i - 1], seq[i]))
      throw SequenceError(i, "consecutive states are not adjacent");
    if (state_value(source_, seq[i]) < 1) throw SequenceError(i, "state value below 1");
  }
  ReconfigSequence out{lift(seq.front())};
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] != seq[i - 1]) map_step(seq[i - 1], seq[i], out.back(), out);
  if (out.back() != target().target) throw std::logic_error("mapped sequence misses the target state");
  return out;
}

ReconfigSequence Reduction::project_sequence(const ReconfigSequence& seq) const {
  ReconfigSequence out;
  out.reserve(seq.size());
  for (const auto& s : seq) out.push_back(project_state(s));
  return out;
}

ReductionPtr apply_reduction(ReductionTag tag, const ReconfigInstance& src, const ReductionOptions& options) {
  switch (tag) {
    case ReductionTag::QcspToEksat: return qcsp_to_eksat(src);
    case ReductionTag::EksatToE3sat: return eksat_to_e3sat(src);
    case ReductionTag::E3satToBcsp3: return e3sat_to_bcsp3(src);
    case ReductionTag::DegreeReduce: return degree_reduce(src, options.degree);
    case ReductionTag::E3satToNcl: return e3sat_to_ncl(src);
    case ReductionTag::NclToIsr: return ncl_to_isr(src);
    case ReductionTag::IsrToVcr: return isr_to_vcr(src);
    case ReductionTag::IsrToClique: return isr_to_clique(src);
    case ReductionTag::E3satTo2sat: return e3sat_to_2sat(src);
  }
  throw DomainError("unknown reduction tag");
}

}  // namespace reconf
