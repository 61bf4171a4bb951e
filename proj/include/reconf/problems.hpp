#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "reconf/core.hpp"

namespace reconf {

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<std::size_t> find(std::string_view name) const;

 private:
  std::vector<std::string> symbols_;
};

struct Hyperedge {
  std::vector<int> vertices;
  std::vector<std::vector<int>> allowed;  // tuples of alphabet indices
};

class ConstraintGraph {
 public:
  // Empty domains means every vertex may take every symbol.
  ConstraintGraph(int arity, Alphabet alphabet, std::vector<std::string> vertex_names,
                  std::vector<Hyperedge> edges, std::vector<std::vector<int>> domains = {});

  int arity() const { return arity_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::string& vertex_name(std::size_t v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const Hyperedge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const std::vector<int>& domain(std::size_t v) const { return domains_.at(v); }
  const std::vector<std::vector<int>>& domains() const { return domains_; }
  bool in_domain(std::size_t v, int symbol) const;

  bool accepts(std::size_t e, std::span<const int> tuple) const;
  bool satisfied(std::size_t e, const State& assignment) const;

  int degree(std::size_t v) const { return static_cast<int>(incident_.at(v).size()); }
  int max_degree() const;
  const std::vector<std::size_t>& incident_edges(std::size_t v) const { return incident_.at(v); }

 private:
  std::size_t table_index(std::span<const int> tuple) const;

  int arity_;
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<int>> domains_;
  std::vector<std::vector<std::uint8_t>> tables_;
  std::vector<std::vector<std::size_t>> incident_;
};

struct Literal {
  int var;
  bool positive;
  bool operator==(const Literal&) const = default;
};
using Clause = std::vector<Literal>;

class CnfFormula {
 public:
  CnfFormula(std::vector<std::string> variables, std::vector<Clause> clauses);

  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::string& variable_name(std::size_t i) const { return variables_.at(i); }
  const std::vector<std::string>& variables() const { return variables_; }
  const Clause& clause(std::size_t j) const { return clauses_.at(j); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  // Set when every clause has exactly k distinct literals.
  std::optional<int> uniform_width() const { return uniform_width_; }
  int max_width() const { return max_width_; }
  int occurrence_bound() const { return occurrence_bound_; }
  int occurrences(std::size_t var) const { return occurrences_.at(var); }

  bool satisfied(std::size_t j, const State& sigma) const;

 private:
  std::vector<std::string> variables_;
  std::vector<Clause> clauses_;
  std::optional<int> uniform_width_;
  int max_width_ = 0;
  int occurrence_bound_ = 0;
  std::vector<int> occurrences_;
};

inline bool literal_true(const Literal& l, const State& sigma) {
  return (sigma[l.var] != 0) == l.positive;
}

enum class NodeKind { And, Or, Choice, RedBlue, Fanout, FreeTerminator };
enum class LinkColor { Red, Blue };

std::string_view to_string(NodeKind kind);
NodeKind parse_node_kind(std::string_view name);
inline int weight(LinkColor c) { return c == LinkColor::Red ? 1 : 2; }

struct NclNode {
  std::string name;
  NodeKind kind;
};

struct NclLink {
  int a;
  int b;
  LinkColor color;
};

class NclGraph {
 public:
  NclGraph(std::vector<NclNode> nodes, std::vector<NclLink> links);

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_links() const { return links_.size(); }
  const NclNode& node(std::size_t v) const { return nodes_.at(v); }
  const std::vector<NclNode>& nodes() const { return nodes_; }
  const NclLink& link(std::size_t l) const { return links_.at(l); }
  const std::vector<NclLink>& links() const { return links_; }
  const std::vector<std::size_t>& incident_links(std::size_t v) const { return incident_.at(v); }
  bool and_or_only() const;
  std::size_t count(NodeKind kind) const;

  // Orientation bit 1 means link l points at link(l).b.
  static int head(const NclLink& link, std::uint8_t bit) { return bit ? link.b : link.a; }
  bool inward(std::size_t l, std::size_t v, const State& orientation) const;
  bool node_satisfied(std::size_t v, const State& orientation) const;

 private:
  std::vector<NclNode> nodes_;
  std::vector<NclLink> links_;
  std::vector<std::vector<std::size_t>> incident_;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::size_t n, std::vector<std::pair<int, int>> edges);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  // Normalized u < v, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  SimpleGraph complement() const;

 private:
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> matrix_;
};

bool is_independent_set(const SimpleGraph& g, const State& members);
bool is_vertex_cover(const SimpleGraph& g, const State& members);
bool is_clique(const SimpleGraph& g, const State& members);
std::size_t subset_size(const State& members);
State members_to_state(std::size_t n, std::span<const int> members);
std::vector<int> state_to_members(const State& members);

using Payload = std::variant<ConstraintGraph, CnfFormula, NclGraph, SimpleGraph>;

struct ReconfigInstance {
  ProblemKind kind;
  Payload payload;
  State start;
  State target;
  // alpha(G) for ISR, beta(G) for VCR, omega(G) for Clique.
  std::optional<int> set_bound;

  const ConstraintGraph& csp() const { return std::get<ConstraintGraph>(payload); }
  const CnfFormula& cnf() const { return std::get<CnfFormula>(payload); }
  const NclGraph& ncl() const { return std::get<NclGraph>(payload); }
  const SimpleGraph& graph() const { return std::get<SimpleGraph>(payload); }
};

// Throws DomainError when payload, states or bound do not fit the kind.
void validate(const ReconfigInstance& instance);
std::size_t state_length(const ReconfigInstance& instance);
// Shape and per-position range; set kinds also check feasibility.
bool state_well_formed(const ReconfigInstance& instance, const State& s);
bool state_feasible(const ReconfigInstance& instance, const State& s);

Rational csp_value(const ConstraintGraph& g, const State& psi);
Rational cnf_value(const CnfFormula& phi, const State& sigma);
Rational ncl_value(const NclGraph& g, const State& orientation);

// Integer numerator over a fixed per-instance denominator.
std::int64_t state_score(const ReconfigInstance& instance, const State& s);
std::int64_t value_denominator(const ReconfigInstance& instance);
Rational state_value(const ReconfigInstance& instance, const State& s);
bool minimizes(ProblemKind kind);

bool adjacent(ProblemKind kind, const State& s, const State& t);

Rational set_sequence_value(ProblemKind kind, const SimpleGraph& g, const ReconfigSequence& seq, int bound);

struct SequenceReport {
  bool valid_steps = true;
  bool endpoints_match = true;
  std::optional<std::size_t> first_violation_index;
  std::optional<Rational> value;  // min (max for VCR); empty for an empty or malformed sequence
  bool meets_threshold = false;
  bool passed() const { return valid_steps && endpoints_match && meets_threshold; }
};

SequenceReport verify_sequence(const ReconfigInstance& instance, const ReconfigSequence& seq,
                               const Rational& threshold);

}  // namespace reconf
