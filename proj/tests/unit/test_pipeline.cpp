#include <doctest.h>

#include "reconf/pipeline.hpp"

using namespace reconf;

namespace {

Json small(std::string_view kind) {
  if (kind == "qcsp") return {{"q", 2}, {"W", 2}, {"vertices", 3}, {"edges", 3}};
  if (kind == "ksat") return {{"k", 4}, {"n", 5}, {"m", 4}};
  if (kind == "e3sat") return {{"n", 4}, {"m", 3}};
  if (kind == "bcsp3") return {{"n", 3}, {"m", 2}};
  if (kind == "ncl_andor") return {{"n_and", 2}, {"n_or", 2}};
  return {{"n", 6}, {"edge_percent", 40}};
}

const std::vector<std::string> kKinds{"qcsp", "ksat", "e3sat", "bcsp3", "ncl_andor", "isr"};

OracleConfig serial_oracle() {
  OracleConfig o;
  o.parallel = false;
  return o;
}

}  // namespace

TEST_CASE("json round trip preserves instances for every generator kind") {
  for (const auto& kind : kKinds)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      CAPTURE(kind);
      auto in = generate_instance(kind, small(kind), seed);
      auto doc = instance_to_json(in);
      auto back = instance_from_json(doc);
      CHECK(instance_to_json(back) == doc);
      CHECK(back.start == in.start);
      CHECK(back.target == in.target);
      CHECK(structure_of(back) == structure_of(in));
      CHECK(state_value(back, back.start) == state_value(in, in.start));
    }
}

TEST_CASE("dimacs round trip for cnf kinds") {
  for (const char* kind : {"ksat", "e3sat"})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto in = generate_instance(kind, small(kind), seed);
      auto back = from_dimacs(to_dimacs(in));
      CHECK(back.start == in.start);
      CHECK(back.target == in.target);
      CHECK(structure_of(back) == structure_of(in));
      CHECK(to_dimacs(back) == to_dimacs(in));
    }
}

TEST_CASE("generators are deterministic in the seed") {
  for (const auto& kind : kKinds) {
    auto a = instance_to_json(generate_instance(kind, small(kind), 17));
    auto b = instance_to_json(generate_instance(kind, small(kind), 17));
    CHECK(a == b);
  }
}

TEST_CASE("reconfigurable generation yields an instance the oracle can solve") {
  auto p = small("e3sat");
  p["reconfigurable"] = true;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto in = generate_instance("e3sat", p, seed);
    CHECK_NOTHROW(optimal_value(in, serial_oracle()));
  }
}

TEST_CASE("validate_chain accepts fitting chains and rejects the rest") {
  using T = ReductionTag;
  CHECK_NOTHROW(validate_chain({T::QcspToEksat, T::EksatToE3sat, T::E3satToBcsp3, T::DegreeReduce}));
  CHECK_NOTHROW(validate_chain({T::NclToIsr, T::IsrToVcr}));
  CHECK_THROWS_AS(validate_chain({T::E3satToNcl, T::NclToIsr}), DomainError);
  CHECK_NOTHROW(validate_chain({}));
  CHECK_THROWS_AS(validate_chain({T::E3satToNcl, T::IsrToVcr}), DomainError);
  CHECK_THROWS_AS(validate_chain({T::NclToIsr, T::IsrToVcr, T::IsrToClique}), DomainError);
  CHECK_THROWS_AS(validate_chain({T::E3satTo2sat, T::E3satToBcsp3}), DomainError);
}

TEST_CASE("an empty chain reports only the source value") {
  auto in = generate_instance("e3sat", small("e3sat"), 3);
  auto trial = run_chain({}, in, {}, serial_oracle());
  REQUIRE(trial.source_value);
  CHECK(*trial.source_value == optimal_value(in, serial_oracle()).value);
  CHECK(trial.stages.empty());
  CHECK(trial.passed());
}

TEST_CASE("2-sat stage on a satisfiable reconfigurable source reaches 7/10") {
  auto p = small("e3sat");
  p["reconfigurable"] = true;
  p["planted"] = true;
  int perfect = 0;
  for (std::uint64_t seed = 0; seed < 10 && perfect < 3; ++seed) {
    auto in = generate_instance("e3sat", p, seed);
    auto trial = run_chain({ReductionTag::E3satTo2sat}, in, {}, serial_oracle());
    REQUIRE(trial.source_value);
    if (*trial.source_value < Rational(1)) continue;
    ++perfect;
    REQUIRE(trial.stages.size() == 1);
    const auto& st = trial.stages[0];
    REQUIRE(st.target_value);
    CHECK(*st.target_value == Rational(7, 10));
    CHECK(st.completeness == std::optional<bool>(true));
    CHECK(st.mapper_ok == std::optional<bool>(true));
  }
  CHECK(perfect > 0);
}

TEST_CASE("csp chain composes soundness bounds") {
  auto p = small("qcsp");
  p["reconfigurable"] = true;
  auto in = generate_instance("qcsp", p, 5);
  OracleConfig o = serial_oracle();
  o.state_cap = 1 << 16;
  using T = ReductionTag;
  auto trial = run_chain({T::QcspToEksat, T::EksatToE3sat, T::E3satToBcsp3}, in, {}, o);
  CHECK_FALSE(trial.error);
  REQUIRE(trial.stages.size() == 3);
  for (const auto& st : trial.stages) CHECK(st.structure_matches);
  CHECK(trial.composed_bound.has_value());
}

TEST_CASE("pipeline reports are deterministic and serialize every trial") {
  PipelineConfig cfg;
  cfg.chain = {ReductionTag::E3satTo2sat};
  cfg.trials = 3;
  cfg.seed = 11;
  cfg.generator_params = small("e3sat");
  cfg.generator_params["reconfigurable"] = true;
  cfg.oracle = serial_oracle();
  auto a = report_to_json(run_pipeline(cfg));
  auto b = report_to_json(run_pipeline(cfg));
  CHECK(a == b);
  CHECK(a["format"] == "reconf-report");
  CHECK(a["trials"].size() == 3);
  CHECK_FALSE(render_text(run_pipeline(cfg)).empty());
}

TEST_CASE("reference example suite") {
  for (const auto& e : verify_example_suite()) {
    CAPTURE(e.name);
    CAPTURE(e.detail);
    CHECK(e.passed);
  }
}
