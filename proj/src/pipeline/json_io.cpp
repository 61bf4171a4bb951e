#include <fstream>

#include "reconf/io.hpp"

namespace reconf {

namespace {

bool is_set_kind(ProblemKind k) {
  return k == ProblemKind::IndependentSet || k == ProblemKind::VertexCover || k == ProblemKind::Clique;
}

Json payload_to_json(const ReconfigInstance& in) {
  Json p;
  switch (in.kind) {
    case ProblemKind::Csp: {
      const auto& g = in.csp();
      p["arity"] = g.arity();
      p["alphabet"] = g.alphabet().symbols();
      p["vertices"] = g.vertex_names();
      p["domains"] = g.domains();
      p["edges"] = Json::array();
      for (const auto& e : g.edges()) p["edges"].push_back({{"vertices", e.vertices}, {"allowed", e.allowed}});
      break;
    }
    case ProblemKind::Sat: {
      const auto& f = in.cnf();
      p["variables"] = f.variables();
      p["clauses"] = Json::array();
      for (const auto& c : f.clauses()) {
        Json lits = Json::array();
        for (const auto& l : c) lits.push_back(l.positive ? l.var + 1 : -(l.var + 1));
        p["clauses"].push_back(lits);
      }
      break;
    }
    case ProblemKind::Ncl: {
      const auto& g = in.ncl();
      p["nodes"] = Json::array();
      for (const auto& n : g.nodes()) p["nodes"].push_back({{"name", n.name}, {"kind", to_string(n.kind)}});
      p["links"] = Json::array();
      for (const auto& l : g.links())
        p["links"].push_back({{"a", l.a}, {"b", l.b}, {"color", l.color == LinkColor::Red ? "red" : "blue"}});
      break;
    }
    default: {
      const auto& g = in.graph();
      p["vertices"] = g.num_vertices();
      p["edges"] = Json::array();
      for (auto [u, v] : g.edges()) p["edges"].push_back({u, v});
    }
  }
  return p;
}

Payload payload_from_json(ProblemKind kind, const Json& p) {
  switch (kind) {
    case ProblemKind::Csp: {
      std::vector<Hyperedge> edges;
      for (const auto& e : p.at("edges"))
        edges.push_back({e.at("vertices").get<std::vector<int>>(), e.at("allowed").get<std::vector<std::vector<int>>>()});
      std::vector<std::vector<int>> domains;
      if (p.contains("domains")) domains = p.at("domains").get<std::vector<std::vector<int>>>();
      return ConstraintGraph(p.at("arity").get<int>(), Alphabet(p.at("alphabet").get<std::vector<std::string>>()),
                             p.at("vertices").get<std::vector<std::string>>(), std::move(edges), std::move(domains));
    }
    case ProblemKind::Sat: {
      auto vars = p.at("variables").get<std::vector<std::string>>();
      std::vector<Clause> clauses;
      for (const auto& c : p.at("clauses")) {
        Clause clause;
        for (const auto& lit : c) {
          int x = lit.get<int>();
          if (x == 0) throw DomainError("literal 0 is not allowed");
          clause.push_back({std::abs(x) - 1, x > 0});
        }
        clauses.push_back(std::move(clause));
      }
      return CnfFormula(std::move(vars), std::move(clauses));
    }
    case ProblemKind::Ncl: {
      std::vector<NclNode> nodes;
      for (const auto& n : p.at("nodes"))
        nodes.push_back({n.at("name").get<std::string>(), parse_node_kind(n.at("kind").get<std::string>())});
      std::vector<NclLink> links;
      for (const auto& l : p.at("links")) {
        auto color = l.at("color").get<std::string>();
        if (color != "red" && color != "blue") throw DomainError("link color must be red or blue");
        links.push_back({l.at("a").get<int>(), l.at("b").get<int>(), color == "red" ? LinkColor::Red : LinkColor::Blue});
      }
      return NclGraph(std::move(nodes), std::move(links));
    }
    default: {
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : p.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      return SimpleGraph(p.at("vertices").get<std::size_t>(), std::move(edges));
    }
  }
}

}  // namespace

Json state_to_json(const ReconfigInstance& in, const State& s) {
  if (is_set_kind(in.kind)) return state_to_members(s);
  Json out = Json::array();
  for (auto v : s) out.push_back(static_cast<int>(v));
  return out;
}

State state_from_json(const ReconfigInstance& in, const Json& doc) {
  auto values = doc.get<std::vector<int>>();
  if (is_set_kind(in.kind)) return members_to_state(state_length(in), values);
  State s;
  for (int v : values) {
    if (v < 0 || v > 255) throw DomainError("state entry out of range");
    s.push_back(static_cast<std::uint8_t>(v));
  }
  return s;
}

Json instance_to_json(const ReconfigInstance& in) {
  Json doc;
  doc["format"] = "reconf-instance";
  doc["version"] = 1;
  doc["kind"] = to_string(in.kind);
  doc["payload"] = payload_to_json(in);
  doc["start"] = state_to_json(in, in.start);
  doc["target"] = state_to_json(in, in.target);
  if (in.set_bound) doc["bound"] = *in.set_bound;
  return doc;
}

ReconfigInstance instance_from_json(const Json& doc) {
  try {
    if (doc.value("format", "") != "reconf-instance") throw DomainError("not a reconf-instance document");
    auto kind = parse_problem_kind(doc.at("kind").get<std::string>());
    ReconfigInstance in{kind, payload_from_json(kind, doc.at("payload")), {}, {}, std::nullopt};
    if (doc.contains("bound")) in.set_bound = doc.at("bound").get<int>();
    in.start = state_from_json(in, doc.at("start"));
    in.target = state_from_json(in, doc.at("target"));
    validate(in);
    return in;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed instance document: ") + e.what());
  }
}

Json sequence_to_json(const ReconfigInstance& in, const ReconfigSequence& seq) {
  Json doc;
  doc["format"] = "reconf-sequence";
  doc["states"] = Json::array();
  for (const auto& s : seq) doc["states"].push_back(state_to_json(in, s));
  return doc;
}

ReconfigSequence sequence_from_json(const ReconfigInstance& in, const Json& doc) {
  try {
    const auto& states = doc.is_array() ? doc : doc.at("states");
    ReconfigSequence seq;
    for (const auto& s : states) seq.push_back(state_from_json(in, s));
    return seq;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed sequence document: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw DomainError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path.string());
  out << doc.dump(1) << '\n';
}

}  // namespace reconf
