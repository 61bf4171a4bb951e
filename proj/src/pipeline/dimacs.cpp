#include <sstream>

#include "reconf/io.hpp"

namespace reconf {

namespace {

std::string assignment_line(const char* tag, const State& s) {
  std::string out = std::string("c ") + tag;
  for (std::size_t i = 0; i < s.size(); ++i) out += " " + std::to_string(s[i] ? static_cast<long>(i + 1) : -static_cast<long>(i + 1));
  return out + " 0\n";
}

State parse_assignment(std::istringstream& line, std::size_t n) {
  State s(n, 0);
  std::vector<bool> seen(n, false);
  long lit;
  while (line >> lit && lit != 0) {
    auto v = static_cast<std::size_t>(std::labs(lit));
    if (v < 1 || v > n || seen[v - 1]) throw DomainError("bad assignment literal in DIMACS comment");
    seen[v - 1] = true;
    s[v - 1] = lit > 0;
  }
  for (bool b : seen)
    if (!b) throw DomainError("DIMACS assignment line is not total");
  return s;
}

}  // namespace

std::string to_dimacs(const ReconfigInstance& in) {
  if (in.kind != ProblemKind::Sat) throw DomainError("DIMACS export needs a CNF instance");
  const auto& f = in.cnf();
  std::ostringstream out;
  out << "p cnf " << f.num_variables() << ' ' << f.num_clauses() << '\n';
  for (std::size_t i = 0; i < f.num_variables(); ++i) out << "c var " << i + 1 << ' ' << f.variable_name(i) << '\n';
  for (const auto& c : f.clauses()) {
    for (const auto& l : c) out << (l.positive ? l.var + 1 : -(l.var + 1)) << ' ';
    out << "0\n";
  }
  out << assignment_line("start", in.start) << assignment_line("target", in.target);
  return out.str();
}

ReconfigInstance from_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0, m = 0;
  bool header = false;
  std::vector<Clause> clauses;
  Clause current;
  std::optional<State> start, target;
  std::vector<std::string> vars;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "c") {
      std::string tag;
      if (ls >> tag && (tag == "start" || tag == "target")) {
        if (!header) throw DomainError("assignment line before DIMACS header");
        (tag == "start" ? start : target) = parse_assignment(ls, n);
      } else if (tag == "var") {
        std::size_t i;
        std::string name;
        if (!(ls >> i >> name) || i < 1 || i > n) throw DomainError("bad DIMACS variable name line");
        vars[i - 1] = name;
      }
      continue;
    }
    if (word == "p") {
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "cnf") throw DomainError("bad DIMACS header");
      header = true;
      for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));
      continue;
    }
    if (!header) throw DomainError("clause before DIMACS header");
    std::istringstream cs(line);
    long lit;
    while (cs >> lit) {
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      auto v = static_cast<std::size_t>(std::labs(lit));
      if (v > n) throw DomainError("DIMACS literal exceeds variable count");
      current.push_back({static_cast<int>(v - 1), lit > 0});
    }
  }
  if (!current.empty()) throw DomainError("unterminated DIMACS clause");
  if (clauses.size() != m) throw DomainError("DIMACS clause count mismatch");
  if (!start || !target) throw DomainError("DIMACS input lacks start/target lines");
  ReconfigInstance inst{ProblemKind::Sat, CnfFormula(std::move(vars), std::move(clauses)), *start, *target, std::nullopt};
  validate(inst);
  return inst;
}

}  // namespace reconf
