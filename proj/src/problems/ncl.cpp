#include "reconf/problems.hpp"

namespace reconf {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::And: return "AND";
    case NodeKind::Or: return "OR";
    case NodeKind::Choice: return "CHOICE";
    case NodeKind::RedBlue: return "RED_BLUE";
    case NodeKind::Fanout: return "FANOUT";
    case NodeKind::FreeTerminator: return "FREE_TERMINATOR";
  }
  return "?";
}

NodeKind parse_node_kind(std::string_view name) {
  for (auto k : {NodeKind::And, NodeKind::Or, NodeKind::Choice, NodeKind::RedBlue, NodeKind::Fanout,
                 NodeKind::FreeTerminator})
    if (to_string(k) == name) return k;
  throw DomainError("unknown node kind: " + std::string(name));
}

NclGraph::NclGraph(std::vector<NclNode> nodes, std::vector<NclLink> links)
    : nodes_(std::move(nodes)), links_(std::move(links)), incident_(nodes_.size()) {
  const int n = static_cast<int>(nodes_.size());
  for (std::size_t l = 0; l < links_.size(); ++l) {
    const auto& k = links_[l];
    if (k.a < 0 || k.a >= n || k.b < 0 || k.b >= n) throw DomainError("link references unknown node");
    if (k.a == k.b) throw DomainError("self-loop link");
    incident_[k.a].push_back(l);
    incident_[k.b].push_back(l);
  }
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    int red = 0, blue = 0;
    for (auto l : incident_[v]) (links_[l].color == LinkColor::Red ? red : blue)++;
    bool ok = false;
    switch (nodes_[v].kind) {
      case NodeKind::And:
      case NodeKind::Fanout: ok = red == 2 && blue == 1; break;
      case NodeKind::Or: ok = red == 0 && blue == 3; break;
      case NodeKind::Choice: ok = red == 3 && blue == 0; break;
      case NodeKind::RedBlue: ok = red == 1 && blue == 1; break;
      case NodeKind::FreeTerminator: ok = red + blue == 1; break;
    }
    if (!ok)
      throw DomainError("node " + nodes_[v].name + " (" + std::string(to_string(nodes_[v].kind)) +
                        ") has wrong incident links");
  }
}

bool NclGraph::and_or_only() const {
  for (const auto& node : nodes_)
    if (node.kind != NodeKind::And && node.kind != NodeKind::Or) return false;
  return true;
}

std::size_t NclGraph::count(NodeKind kind) const {
  std::size_t c = 0;
  for (const auto& node : nodes_) c += node.kind == kind;
  return c;
}

bool NclGraph::inward(std::size_t l, std::size_t v, const State& orientation) const {
  return head(links_[l], orientation[l]) == static_cast<int>(v);
}

bool NclGraph::node_satisfied(std::size_t v, const State& orientation) const {
  int weight_in = 0, count_in = 0;
  for (auto l : incident_[v]) {
    if (!inward(l, v, orientation)) continue;
    weight_in += weight(links_[l].color);
    ++count_in;
  }
  switch (nodes_[v].kind) {
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Fanout: return weight_in >= 2;
    case NodeKind::Choice: return count_in >= 2;
    case NodeKind::RedBlue: return count_in >= 1;
    case NodeKind::FreeTerminator: return true;
  }
  return false;
}

Rational ncl_value(const NclGraph& g, const State& orientation) {
  if (orientation.size() != g.num_links()) throw DomainError("ncl_value: orientation is not total");
  if (g.num_nodes() == 0) throw DomainError("ncl_value: empty graph");
  std::int64_t sat = 0;
  for (std::size_t v = 0; v < g.num_nodes(); ++v) sat += g.node_satisfied(v, orientation);
  return Rational(sat, static_cast<std::int64_t>(g.num_nodes()));
}

}  // namespace reconf
