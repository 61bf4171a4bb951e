#include <algorithm>
#include <sstream>

#include "reconf/encoding.hpp"
#include "reconf/pipeline.hpp"

namespace reconf {

const std::vector<EncRow>& enc_reference_rows() {
  static const std::vector<EncRow> rows = {{"FFF", 1}, {"TFF", 1}, {"FTF", 2}, {"TTF", 2},
                                           {"FFT", 3}, {"TFT", 3}, {"FTT", 3}, {"TTT", 3}};
  return rows;
}

const std::vector<GadgetColumn>& two_sat_gadget_reference() {
  static const std::vector<GadgetColumn> cols = {{"FFF", false, 6}, {"FFF", true, 4}, {"TFF", false, 7},
                                                 {"TFF", true, 6},  {"TTF", false, 7}, {"TTF", true, 7},
                                                 {"TTT", false, 6}, {"TTT", true, 7}};
  return cols;
}

namespace {

using Pairs = std::vector<std::vector<int>>;

int index_of(const ConstraintGraph& g, const std::string& name) {
  const auto& names = g.vertex_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw DomainError("no vertex named " + name);
  return static_cast<int>(it - names.begin());
}

std::vector<int> with_prefix(const ConstraintGraph& g, const std::string& prefix) {
  std::vector<int> out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (g.vertex_name(v).rfind(prefix, 0) == 0) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace

ReconfigInstance cheating_example(int n) {
  if (n < 1) throw DomainError("cheating_example: n must be positive");
  const int a = 0, b = 1, c = 2;
  std::vector<std::string> names = {"w", "v", "x", "y"};
  for (int i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
  Pairs all;
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) all.push_back({s, t});
  std::vector<Hyperedge> edges = {
      {{0, 1}, {{a, a}}},
      {{1, 2}, {{a, a}, {b, a}, {b, b}, {b, c}, {a, c}}},
      {{2, 3}, {{a, a}, {b, a}, {b, b}, {c, b}, {c, c}}},
  };
  for (int i = 0; i < n; ++i) edges.push_back({{1, 4 + i}, all});
  ConstraintGraph g(2, Alphabet({"a", "b", "c"}), std::move(names), std::move(edges));
  State start(g.num_vertices(), a), target = start;
  target[2] = target[3] = c;
  ReconfigInstance inst{ProblemKind::Csp, std::move(g), std::move(start), std::move(target), std::nullopt};
  validate(inst);
  return inst;
}

ReductionPtr cheating_example_reduced(const ReconfigInstance& example) {
  const int v = index_of(example.csp(), "v");
  // v's incident edges in order: (w,v), (v,x), (v,z_i); drop the pair (v_w, v_x)
  auto provider = [](int, int size) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j)
        if (!(i == 0 && j == 1)) e.emplace_back(i, j);
    return e;
  };
  return degree_reduce_partial(example, {v}, provider);
}

ReconfigSequence cheating_schedule(const Reduction& reduced, int n) {
  const auto& g = reduced.target().csp();
  const int a = 0, b = 1, c = 2, ab = 3;
  const auto vz = with_prefix(g, "v_z");
  const auto vx = with_prefix(g, "v_x#");
  if (static_cast<int>(vz.size()) != n || vx.size() != 1) throw DomainError("cheating_schedule: unexpected cloud");
  const int x = index_of(g, "x"), y = index_of(g, "y");
  ReconfigSequence seq{reduced.target().start};
  auto set = [&](int vertex, int value) {
    State s = seq.back();
    s[vertex] = static_cast<std::uint8_t>(value);
    seq.push_back(std::move(s));
  };
  for (int z : vz) set(z, ab);
  set(vx[0], b);
  set(x, b);
  set(y, b);
  set(x, c);
  set(y, c);
  set(vx[0], a);
  for (int z : vz) set(z, a);
  return seq;
}

ReconfigInstance literal_network_example() {
  // w x y z -> 0 1 2 3
  std::vector<Clause> clauses = {{{0, true}, {1, true}, {2, true}},
                                 {{0, true}, {1, false}, {3, true}},
                                 {{1, true}, {2, false}, {3, true}}};
  ReconfigInstance inst{ProblemKind::Sat, CnfFormula({"w", "x", "y", "z"}, std::move(clauses)),
                        State{0, 1, 1, 1}, State{0, 0, 1, 1}, std::nullopt};
  validate(inst);
  return inst;
}

std::vector<SuiteEntry> verify_example_suite() {
  std::vector<SuiteEntry> out;
  auto run = [&out](std::string name, auto body) {
    SuiteEntry e;
    e.name = std::move(name);
    try {
      std::ostringstream detail;
      e.passed = body(detail);
      e.detail = detail.str();
    } catch (const std::exception& ex) {
      e.passed = false;
      e.detail = std::string("error: ") + ex.what();
    }
    out.push_back(std::move(e));
  };

  run("enc rows (W=3)", [](std::ostringstream& d) {
    int ok = 0;
    for (const auto& r : enc_reference_rows()) {
      const int got = enc(parse_bits(r.bits));
      if (got == r.symbol) ++ok;
      else d << r.bits << ": expected " << r.symbol << " got " << got << "; ";
    }
    d << ok << "/" << enc_reference_rows().size() << " rows match";
    return ok == static_cast<int>(enc_reference_rows().size());
  });

  run("two-sat gadget columns", [](std::ostringstream& d) {
    ReconfigInstance one{ProblemKind::Sat, CnfFormula({"l1", "l2", "l3"}, {{{0, true}, {1, true}, {2, true}}}),
                         State{1, 1, 1}, State{1, 1, 1}, std::nullopt};
    auto red = e3sat_to_2sat(one);
    const auto& phi = red->target().cnf();
    int ok = 0;
    for (const auto& col : two_sat_gadget_reference()) {
      State s = parse_bits(col.literals);
      s.push_back(col.z ? 1 : 0);
      int sat = 0;
      for (std::size_t j = 0; j < phi.num_clauses(); ++j) sat += phi.satisfied(j, s);
      if (sat == col.satisfied) ++ok;
      else d << col.literals << (col.z ? "-T" : "-F") << ": expected " << col.satisfied << " got " << sat << "; ";
    }
    d << ok << "/" << two_sat_gadget_reference().size() << " columns match";
    return ok == static_cast<int>(two_sat_gadget_reference().size());
  });

  const auto example = cheating_example(2);
  run("cheating example source value", [&](std::ostringstream& d) {
    auto r = maxmin_value(example);
    d << "value " << to_string(r.value) << " (expected 4/5)";
    return r.value == Rational(4, 5);
  });

  auto reduced = cheating_example_reduced(example);
  run("cheating example reduced value", [&](std::ostringstream& d) {
    OracleConfig cfg;
    cfg.explore_reachable_only = true;
    auto r = maxmin_value(reduced->target(), cfg);
    d << "value " << to_string(r.value) << " over " << r.explored_states << " states (expected 1)";
    return r.value == Rational(1);
  });

  run("cheating schedule", [&](std::ostringstream& d) {
    auto seq = cheating_schedule(*reduced, 2);
    auto rep = verify_sequence(reduced->target(), seq, Rational(1));
    d << seq.size() << " states, value " << (rep.value ? to_string(*rep.value) : "-");
    return rep.passed();
  });

  run("literal network", [](std::ostringstream& d) {
    auto src = literal_network_example();
    auto red = e3sat_to_ncl(src);
    const auto& ncl = red->target();
    const auto v0 = ncl_value(ncl.ncl(), ncl.start);
    auto seq = red->map_sequence({src.start, src.target});
    auto rep = verify_sequence(ncl, seq, Rational(1));
    d << "start value " << to_string(v0) << ", mapped " << seq.size() << " states, "
      << (rep.passed() ? "verified" : "rejected");
    return v0 == Rational(1) && rep.passed();
  });
  return out;
}

}  // namespace reconf
