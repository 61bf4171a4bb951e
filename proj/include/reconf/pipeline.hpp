#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reconf/io.hpp"
#include "reconf/oracle.hpp"
#include "reconf/reductions.hpp"

namespace reconf {

// Kinds: qcsp, ksat, e3sat, bcsp3, ncl_andor, isr.
ReconfigInstance generate_instance(std::string_view kind, const Json& params, std::uint64_t seed);

struct SoundnessCheck {
  std::string statement;
  Rational lhs;
  Rational rhs;
  Rational slack;  // rhs - lhs for "<=", lhs - rhs for ">=", 0 when "=" holds
  bool holds = false;
};

// Value the target must reach when the source value is 1.
Rational completeness_value(ReductionTag tag);
bool completeness_holds(ReductionTag tag, const Rational& target_value);
// Upper bound on the target maxmin value implied by a source value; empty where no numeric bound exists.
std::optional<Rational> soundness_rhs(const Reduction& r, const Rational& source_value);
std::optional<SoundnessCheck> soundness_check(const Reduction& r, const Rational& source_value,
                                              const Rational& target_value);
// 7/10 - (1 - v)/10: the per-gadget bound for the 2-SAT stage.
Rational two_sat_gadget_bound(const Rational& source_value);
// Per-state check of the NCL-from-ISR projection: violated nodes <= 2 (alpha - |I|).
SoundnessCheck ncl_isr_projection_check(const Reduction& r, const ReconfigSequence& isr_sequence);

struct StageReport {
  ReductionTag tag = ReductionTag::QcspToEksat;
  std::optional<Rational> source_value;
  std::optional<Rational> target_value;
  StructuralReport structure;
  bool structure_matches = false;
  bool oracle_skipped = false;
  std::optional<bool> completeness;
  std::optional<SoundnessCheck> soundness;
  std::optional<SoundnessCheck> gadget_bound;
  std::optional<SoundnessCheck> projection;
  std::optional<bool> mapper_ok;
  std::vector<ProvenanceEntry> provenance_sample;
  std::vector<std::string> notes;
  bool passed() const;
};

struct TrialReport {
  std::uint64_t seed = 0;
  std::optional<Rational> source_value;
  std::vector<StageReport> stages;
  std::optional<Rational> composed_bound;
  std::optional<std::string> error;
  bool passed() const;
};

struct GapReport {
  std::vector<std::string> chain;
  std::vector<TrialReport> trials;
  bool passed() const;
};

struct PipelineConfig {
  std::vector<ReductionTag> chain;
  std::uint64_t seed = 0;
  Rational epsilon{1, 3};
  OracleConfig oracle;
  int trials = 1;
  std::string generator_kind = "e3sat";
  Json generator_params = Json::object();
};

// Throws DomainError when consecutive stages do not fit together.
void validate_chain(const std::vector<ReductionTag>& chain);
TrialReport run_chain(const std::vector<ReductionTag>& chain, const ReconfigInstance& source,
                      const ReductionOptions& options, const OracleConfig& oracle, std::uint64_t seed = 0);
GapReport run_pipeline(const PipelineConfig& cfg);

Json report_to_json(const GapReport& report);
std::string render_text(const GapReport& report);

// Reference artifacts reproduced by the example suite.
struct EncRow {
  std::string bits;
  int symbol;
};
const std::vector<EncRow>& enc_reference_rows();
struct GadgetColumn {
  std::string literals;  // l1 l2 l3 as T/F
  bool z;
  int satisfied;
};
const std::vector<GadgetColumn>& two_sat_gadget_reference();

// Star-like binary CSP on w, v, x, y, z_1..z_n whose endpoints cannot be joined at value 1.
ReconfigInstance cheating_example(int n);
// The same instance with only v split into a cloud that lacks the edge (v_w, v_x).
ReductionPtr cheating_example_reduced(const ReconfigInstance& example);
ReconfigSequence cheating_schedule(const Reduction& reduced, int n);
// (w | x | y) & (w | ~x | z) & (x | ~y | z), start (F,T,T,T), target (F,F,T,T).
ReconfigInstance literal_network_example();

struct SuiteEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};
std::vector<SuiteEntry> verify_example_suite();

}  // namespace reconf
