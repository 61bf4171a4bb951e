#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "reconf/pipeline.hpp"

using namespace reconf;

namespace {

bool is_dimacs(const std::string& path) {
  return path.ends_with(".cnf") || path.ends_with(".dimacs");
}

ReconfigInstance load_instance(const std::string& path) {
  if (is_dimacs(path)) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_dimacs(buf.str());
  }
  return instance_from_json(read_json_file(path));
}

void save_instance(const std::string& path, const ReconfigInstance& inst) {
  if (is_dimacs(path)) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write " + path);
    out << to_dimacs(inst);
    return;
  }
  write_json_file(path, instance_to_json(inst));
}

std::vector<ReductionTag> parse_chain(const std::vector<std::string>& names) {
  std::vector<ReductionTag> chain;
  for (const auto& n : names) chain.push_back(parse_reduction_tag(n));
  validate_chain(chain);
  return chain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gap-preserving reconfiguration reductions"};
  app.require_subcommand(1);

  std::vector<std::string> chain_names;
  std::string in_path, out_path, report_path, seq_path, epsilon = "1/3", threshold = "1";
  std::uint64_t seed = 0, state_cap = 1'000'000;
  bool reachable = false, paper_examples = false;

  auto* reduce = app.add_subcommand("reduce", "apply a chain of reductions");
  reduce->add_option("--chain", chain_names, "comma-separated reduction tags")->delimiter(',');
  reduce->add_option("--in", in_path)->required();
  reduce->add_option("--out", out_path)->required();
  reduce->add_option("--epsilon", epsilon);
  reduce->add_option("--seed", seed);
  reduce->add_option("--report", report_path, "run oracles on every stage and write a JSON report");
  reduce->add_option("--state-cap", state_cap);

  auto* oracle = app.add_subcommand("oracle", "exact optimal reconfiguration value");
  oracle->add_option("--in", in_path)->required();
  oracle->add_option("--state-cap", state_cap);
  oracle->add_flag("--reachable", reachable, "search only states reachable from start");
  oracle->add_option("--witness", out_path, "write the witness sequence here");

  auto* verify = app.add_subcommand("verify", "check a sequence against an instance");
  verify->add_option("--in", in_path)->required();
  verify->add_option("--sequence", seq_path)->required();
  verify->add_option("--threshold", threshold);

  auto* suite = app.add_subcommand("suite", "reproduce the worked examples");
  suite->add_flag("--paper-examples", paper_examples)->required();

  std::string kind, params = "{}";
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--kind", kind)->required();
  gen->add_option("--params", params, "JSON object");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path);

  int trials = 1;
  std::string format = "text";
  auto* run = app.add_subcommand("run", "generate sources and run a chain over seeded trials");
  run->add_option("--chain", chain_names)->delimiter(',');
  run->add_option("--kind", kind)->default_val("e3sat");
  run->add_option("--params", params);
  run->add_option("--seed", seed);
  run->add_option("--trials", trials);
  run->add_option("--epsilon", epsilon);
  run->add_option("--state-cap", state_cap);
  run->add_option("--report", report_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reduce) {
      auto chain = parse_chain(chain_names);
      auto source = load_instance(in_path);
      ReductionOptions options;
      options.degree = DegreeReductionParams::from_epsilon(parse_rational(epsilon), seed);
      std::vector<ReductionPtr> stages;
      const ReconfigInstance* cur = &source;
      for (auto tag : chain) {
        stages.push_back(apply_reduction(tag, *cur, options));
        cur = &stages.back()->target();
        const auto& s = stages.back()->artifact().structure;
        std::cout << to_string(tag) << ": " << s.elements << " elements, " << s.constraints << " constraints\n";
      }
      save_instance(out_path, *cur);
      if (report_path.empty()) return 0;
      OracleConfig cfg;
      cfg.state_cap = state_cap;
      GapReport report;
      for (auto t : chain) report.chain.emplace_back(to_string(t));
      report.trials.push_back(run_chain(chain, source, options, cfg, seed));
      write_json_file(report_path, report_to_json(report));
      std::cout << render_text(report);
      return report.passed() ? 0 : 1;
    }
    if (*oracle) {
      auto inst = load_instance(in_path);
      OracleConfig cfg;
      cfg.state_cap = state_cap;
      cfg.explore_reachable_only = reachable;
      auto r = optimal_value(inst, cfg);
      std::cout << "value " << to_string(r.value) << "\nexplored " << r.explored_states << "\n";
      if (r.witness) {
        std::cout << "witness " << r.witness->size() << " states\n";
        if (!out_path.empty()) write_json_file(out_path, sequence_to_json(inst, *r.witness));
      }
      return 0;
    }
    if (*verify) {
      auto inst = load_instance(in_path);
      auto seq = sequence_from_json(inst, read_json_file(seq_path));
      auto rep = verify_sequence(inst, seq, parse_rational(threshold));
      std::cout << "valid steps " << (rep.valid_steps ? "yes" : "no");
      if (rep.first_violation_index) std::cout << " (first violation at " << *rep.first_violation_index << ")";
      std::cout << "\nendpoints " << (rep.endpoints_match ? "match" : "differ") << "\nvalue "
                << (rep.value ? to_string(*rep.value) : "-") << "\n"
                << (rep.passed() ? "PASS" : "FAIL") << "\n";
      return rep.passed() ? 0 : 1;
    }
    if (*suite) {
      bool ok = true;
      for (const auto& e : verify_example_suite()) {
        std::cout << (e.passed ? "PASS " : "FAIL ") << e.name << ": " << e.detail << "\n";
        ok = ok && e.passed;
      }
      return ok ? 0 : 1;
    }
    if (*gen) {
      auto inst = generate_instance(kind, Json::parse(params), seed);
      if (out_path.empty()) std::cout << instance_to_json(inst).dump(1) << "\n";
      else save_instance(out_path, inst);
      return 0;
    }
    if (*run) {
      PipelineConfig cfg;
      cfg.chain = parse_chain(chain_names);
      cfg.seed = seed;
      cfg.trials = trials;
      cfg.epsilon = parse_rational(epsilon);
      cfg.oracle.state_cap = state_cap;
      cfg.generator_kind = kind;
      cfg.generator_params = Json::parse(params);
      auto report = run_pipeline(cfg);
      if (!report_path.empty()) write_json_file(report_path, report_to_json(report));
      std::cout << render_text(report);
      return report.passed() ? 0 : 1;
    }
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
