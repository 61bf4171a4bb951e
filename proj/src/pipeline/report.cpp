#include <sstream>

#include "reconf/pipeline.hpp"

namespace reconf {

namespace {

Json opt_rational(const std::optional<Rational>& r) { return r ? Json(to_string(*r)) : Json(nullptr); }

Json check_json(const std::optional<SoundnessCheck>& c) {
  if (!c) return nullptr;
  return {{"statement", c->statement},
          {"lhs", to_string(c->lhs)},
          {"rhs", to_string(c->rhs)},
          {"slack", to_string(c->slack)},
          {"holds", c->holds}};
}

Json structure_json(const StructuralReport& s) {
  return {{"elements", s.elements},
          {"constraints", s.constraints},
          {"uniform_width", s.uniform_width ? Json(*s.uniform_width) : Json(nullptr)},
          {"max_width", s.max_width},
          {"occurrence_bound", s.occurrence_bound},
          {"alphabet", s.alphabet}};
}

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

void render_check(std::ostringstream& out, const char* label, const std::optional<SoundnessCheck>& c) {
  if (!c) return;
  out << "    " << label << ": " << c->statement << " with lhs " << to_string(c->lhs) << ", rhs " << to_string(c->rhs)
      << " -> " << verdict(c->holds) << "\n";
}

}  // namespace

Json report_to_json(const GapReport& report) {
  Json trials = Json::array();
  for (const auto& t : report.trials) {
    Json stages = Json::array();
    for (const auto& s : t.stages) {
      Json prov = Json::array();
      for (const auto& p : s.provenance_sample) prov.push_back({{"target", p.target}, {"source", p.source}});
      stages.push_back({{"tag", std::string(to_string(s.tag))},
                        {"source_value", opt_rational(s.source_value)},
                        {"target_value", opt_rational(s.target_value)},
                        {"structure", structure_json(s.structure)},
                        {"structure_matches", s.structure_matches},
                        {"oracle_skipped", s.oracle_skipped},
                        {"completeness", s.completeness ? Json(*s.completeness) : Json(nullptr)},
                        {"soundness", check_json(s.soundness)},
                        {"gadget_bound", check_json(s.gadget_bound)},
                        {"projection", check_json(s.projection)},
                        {"mapper_ok", s.mapper_ok ? Json(*s.mapper_ok) : Json(nullptr)},
                        {"provenance_sample", prov},
                        {"notes", s.notes},
                        {"passed", s.passed()}});
    }
    trials.push_back({{"seed", t.seed},
                      {"source_value", opt_rational(t.source_value)},
                      {"stages", stages},
                      {"composed_bound", opt_rational(t.composed_bound)},
                      {"error", t.error ? Json(*t.error) : Json(nullptr)},
                      {"passed", t.passed()}});
  }
  return {{"format", "reconf-report"}, {"chain", report.chain}, {"trials", trials}, {"passed", report.passed()}};
}

std::string render_text(const GapReport& report) {
  std::ostringstream out;
  out << "chain:";
  if (report.chain.empty()) out << " (empty)";
  for (const auto& c : report.chain) out << " " << c;
  out << "\n";
  for (const auto& t : report.trials) {
    out << "trial seed " << t.seed << ": source value " << (t.source_value ? to_string(*t.source_value) : "skipped")
        << " -> " << verdict(t.passed()) << "\n";
    if (t.error) out << "  error: " << *t.error << "\n";
    for (const auto& s : t.stages) {
      out << "  " << to_string(s.tag) << ": " << s.structure.elements << " elements, " << s.structure.constraints
          << " constraints";
      if (s.oracle_skipped) out << ", oracle skipped";
      else out << ", value " << (s.target_value ? to_string(*s.target_value) : "-");
      out << " -> " << verdict(s.passed()) << "\n";
      if (!s.structure_matches) out << "    structure mismatch\n";
      if (s.completeness) out << "    completeness: " << verdict(*s.completeness) << "\n";
      if (s.mapper_ok) out << "    mapper: " << verdict(*s.mapper_ok) << "\n";
      render_check(out, "soundness", s.soundness);
      render_check(out, "gadget bound", s.gadget_bound);
      render_check(out, "projection", s.projection);
      for (const auto& n : s.notes) out << "    note: " << n << "\n";
    }
    if (t.composed_bound) out << "  composed bound: " << to_string(*t.composed_bound) << "\n";
  }
  out << "overall: " << verdict(report.passed()) << "\n";
  return out.str();
}

}  // namespace reconf
