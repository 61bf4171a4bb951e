#include <algorithm>

#include "reconf/pipeline.hpp"

namespace reconf {

namespace {

ProblemKind input_kind(ReductionTag tag) {
  switch (tag) {
    case ReductionTag::QcspToEksat:
    case ReductionTag::DegreeReduce: return ProblemKind::Csp;
    case ReductionTag::NclToIsr: return ProblemKind::Ncl;
    case ReductionTag::IsrToVcr:
    case ReductionTag::IsrToClique: return ProblemKind::IndependentSet;
    default: return ProblemKind::Sat;
  }
}

ProblemKind output_kind(ReductionTag tag) {
  switch (tag) {
    case ReductionTag::E3satToBcsp3:
    case ReductionTag::DegreeReduce: return ProblemKind::Csp;
    case ReductionTag::E3satToNcl: return ProblemKind::Ncl;
    case ReductionTag::NclToIsr: return ProblemKind::IndependentSet;
    case ReductionTag::IsrToVcr: return ProblemKind::VertexCover;
    case ReductionTag::IsrToClique: return ProblemKind::Clique;
    default: return ProblemKind::Sat;
  }
}

std::optional<OracleResult> try_oracle(const ReconfigInstance& in, const OracleConfig& cfg) {
  try {
    return optimal_value(in, cfg);
  } catch (const CapacityError&) {
    return std::nullopt;
  }
}

// Beyond the problem kind: 2-SAT output fits nothing, only E3-SAT reaches width 3, and the NCL
// built from 3-SAT has extended node kinds that ncl_to_isr does not accept.
bool shape_fits(ReductionTag prev, ReductionTag next) {
  if (prev == ReductionTag::E3satToNcl) return next != ReductionTag::NclToIsr;
  if (input_kind(next) != ProblemKind::Sat) return true;
  if (prev == ReductionTag::E3satTo2sat) return false;
  if (prev == ReductionTag::EksatToE3sat) return next != ReductionTag::EksatToE3sat;
  return true;
}

bool perfect(const ReconfigInstance& in, const Rational& v) { return minimizes(in.kind) ? v <= 1 : v >= 1; }

}  // namespace

void validate_chain(const std::vector<ReductionTag>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (output_kind(chain[i - 1]) != input_kind(chain[i]) || !shape_fits(chain[i - 1], chain[i]))
      throw DomainError("chain stage " + std::string(to_string(chain[i])) + " cannot follow " +
                        std::string(to_string(chain[i - 1])));
}

bool StageReport::passed() const {
  auto ok = [](const std::optional<SoundnessCheck>& c) { return !c || c->holds; };
  return structure_matches && completeness.value_or(true) && mapper_ok.value_or(true) && ok(soundness) &&
         ok(gadget_bound) && ok(projection);
}

bool TrialReport::passed() const {
  return !error && std::all_of(stages.begin(), stages.end(), [](const auto& s) { return s.passed(); });
}

bool GapReport::passed() const {
  return std::all_of(trials.begin(), trials.end(), [](const auto& t) { return t.passed(); });
}

TrialReport run_chain(const std::vector<ReductionTag>& chain, const ReconfigInstance& source,
                      const ReductionOptions& options, const OracleConfig& oracle, std::uint64_t seed) {
  validate_chain(chain);
  TrialReport tr;
  tr.seed = seed;
  auto current_result = try_oracle(source, oracle);
  if (current_result) tr.source_value = current_result->value;
  std::optional<Rational> composed = tr.source_value;
  const ReconfigInstance* current = &source;
  std::vector<ReductionPtr> keep;
  for (auto tag : chain) {
    StageReport st;
    st.tag = tag;
    ReductionPtr red;
    try {
      red = apply_reduction(tag, *current, options);
    } catch (const std::exception& e) {
      tr.error = std::string(to_string(tag)) + ": " + e.what();
      break;
    }
    st.structure = red->artifact().structure;
    st.structure_matches = structure_of(red->target()) == st.structure;
    const auto& prov = red->artifact().provenance;
    st.provenance_sample.assign(prov.begin(), prov.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(5, prov.size())));

    auto target_result = try_oracle(red->target(), oracle);
    if (current_result) st.source_value = current_result->value;
    if (target_result) st.target_value = target_result->value;
    st.oracle_skipped = !current_result || !target_result;

    if (current_result && target_result) {
      const auto vs = current_result->value, vt = target_result->value;
      if (perfect(*current, vs)) st.completeness = completeness_holds(tag, vt);
      st.soundness = soundness_check(*red, vs, vt);
      if (tag == ReductionTag::E3satTo2sat) {
        SoundnessCheck g;
        g.statement = "v_target <= 7/10 - (1 - v_source) / 10";
        g.lhs = vt;
        g.rhs = two_sat_gadget_bound(vs);
        g.slack = g.rhs - g.lhs;
        g.holds = g.lhs <= g.rhs;
        st.gadget_bound = g;
      }
    }
    if (current_result && current_result->witness && perfect(*current, current_result->value)) {
      try {
        auto mapped = red->map_sequence(*current_result->witness);
        st.mapper_ok = verify_sequence(red->target(), mapped, completeness_value(tag)).passed();
      } catch (const std::exception& e) {
        st.mapper_ok = false;
        st.notes.push_back(std::string("mapper: ") + e.what());
      }
    }
    if (target_result && target_result->witness) {
      if (tag == ReductionTag::NclToIsr) {
        st.projection = ncl_isr_projection_check(*red, *target_result->witness);
      } else if (current_result) {
        auto proj = red->project_sequence(*target_result->witness);
        auto rep = verify_sequence(*current, proj, current_result->value);
        SoundnessCheck c;
        c.statement = "projected target witness is a valid source sequence with value <= v_source";
        c.rhs = current_result->value;
        c.lhs = rep.value.value_or(Rational(0));
        c.slack = minimizes(current->kind) ? c.lhs - c.rhs : c.rhs - c.lhs;
        c.holds = rep.valid_steps && rep.endpoints_match && rep.value &&
                  (minimizes(current->kind) ? c.lhs >= c.rhs : c.lhs <= c.rhs);
        st.projection = c;
      }
    }
    if (composed) composed = soundness_rhs(*red, *composed);
    tr.stages.push_back(std::move(st));
    current = &red->target();
    keep.push_back(std::move(red));
    current_result = std::move(target_result);
  }
  if (!chain.empty() && tr.stages.size() == chain.size()) tr.composed_bound = composed;
  return tr;
}

GapReport run_pipeline(const PipelineConfig& cfg) {
  validate_chain(cfg.chain);
  GapReport report;
  for (auto t : cfg.chain) report.chain.emplace_back(to_string(t));
  report.trials.resize(static_cast<std::size_t>(std::max(cfg.trials, 0)));
  const auto n = static_cast<std::int64_t>(report.trials.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto seed = cfg.seed + static_cast<std::uint64_t>(i);
    auto& tr = report.trials[i];
    try {
      auto source = generate_instance(cfg.generator_kind, cfg.generator_params, seed);
      ReductionOptions options;
      options.degree = DegreeReductionParams::from_epsilon(cfg.epsilon, seed);
      tr = run_chain(cfg.chain, source, options, cfg.oracle, seed);
    } catch (const std::exception& e) {
      tr.seed = seed;
      tr.error = e.what();
    }
  }
  return report;
}

}  // namespace reconf
