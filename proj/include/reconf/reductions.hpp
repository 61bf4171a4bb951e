#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reconf/problems.hpp"
#include "reconf/spectral.hpp"

namespace reconf {

enum class ReductionTag {
  QcspToEksat,
  EksatToE3sat,
  E3satToBcsp3,
  DegreeReduce,
  E3satToNcl,
  NclToIsr,
  IsrToVcr,
  IsrToClique,
  E3satTo2sat,
};

std::string_view to_string(ReductionTag tag);
ReductionTag parse_reduction_tag(std::string_view name);
std::vector<ReductionTag> all_reduction_tags();

struct StructuralReport {
  std::size_t elements = 0;     // vertices, variables or NCL nodes
  std::size_t constraints = 0;  // hyperedges, clauses, links or graph edges
  std::optional<int> uniform_width;
  int max_width = 0;
  int occurrence_bound = 0;  // max occurrences (CNF) or max degree (graphs)
  std::size_t alphabet = 0;
  bool operator==(const StructuralReport&) const = default;
};

StructuralReport structure_of(const ReconfigInstance& instance);

struct ProvenanceEntry {
  std::string target;
  std::string source;
};

struct ReductionArtifact {
  ReconfigInstance target;
  std::vector<ProvenanceEntry> provenance;
  StructuralReport structure;
};

class Reduction {
 public:
  virtual ~Reduction() = default;

  ReductionTag tag() const { return tag_; }
  const ReconfigInstance& source() const { return source_; }
  const ReductionArtifact& artifact() const { return artifact_; }
  const ReconfigInstance& target() const { return artifact_.target; }

  // Completeness mapper. Requires a valid start-to-target source sequence of value 1.
  ReconfigSequence map_sequence(const ReconfigSequence& source_seq) const;
  // Soundness projection; stepwise adjacent-or-equal for any valid target sequence.
  virtual ReconfigSequence project_sequence(const ReconfigSequence& target_seq) const;
  virtual State project_state(const State& target_state) const = 0;

 protected:
  Reduction(ReductionTag tag, ReconfigInstance source) : tag_(tag), source_(std::move(source)) {}
  void finish(ReconfigInstance target, std::vector<ProvenanceEntry> provenance);
  // Target states to append for one source step prev -> next (prev != next).
  virtual void map_step(const State& prev, const State& next, const State& lifted_prev,
                        std::vector<State>& out) const = 0;
  virtual State lift(const State& source_state) const = 0;

 private:
  ReductionTag tag_;
  ReconfigInstance source_;
  ReductionArtifact artifact_{ReconfigInstance{ProblemKind::Sat, CnfFormula({}, {}), {}, {}, {}}, {}, {}};
};

using ReductionPtr = std::unique_ptr<Reduction>;

ReductionPtr qcsp_to_eksat(const ReconfigInstance& src);
ReductionPtr eksat_to_e3sat(const ReconfigInstance& src);
ReductionPtr e3sat_to_bcsp3(const ReconfigInstance& src);
ReductionPtr degree_reduce(const ReconfigInstance& src, const DegreeReductionParams& params);
ReductionPtr e3sat_to_ncl(const ReconfigInstance& src);
ReductionPtr ncl_to_isr(const ReconfigInstance& src);
ReductionPtr isr_to_vcr(const ReconfigInstance& src);
ReductionPtr isr_to_clique(const ReconfigInstance& src);
ReductionPtr e3sat_to_2sat(const ReconfigInstance& src);

// Cloud graph on cloud(v) given as local indices into v's incident edge list.
using CloudProvider = std::function<std::vector<std::pair<int, int>>(int vertex, int size)>;
// Alphabet squaring applied to the listed vertices only; the full reduction splits all vertices.
ReductionPtr degree_reduce_partial(const ReconfigInstance& src, const std::vector<int>& split_vertices,
                                   const CloudProvider& clouds);

struct ReductionOptions {
  DegreeReductionParams degree;
};

ReductionPtr apply_reduction(ReductionTag tag, const ReconfigInstance& src, const ReductionOptions& options = {});

// Squared alphabet a, b, c, ab, bc, ca as subset masks over {a, b, c}.
inline constexpr int kSquaredMasks[6] = {1, 2, 4, 3, 6, 5};
std::vector<std::string> squared_symbols(const Alphabet& base);
// Intra-cloud acceptable pairs over the squared alphabet (one symbol contains the other).
std::vector<std::vector<int>> intra_cloud_pairs();
// PLR over symbols of the squared alphabet; ties by a < b < c, restricted to the allowed source domain.
int plurality(std::span<const int> squared_values, const std::vector<int>& domain);

}  // namespace reconf
