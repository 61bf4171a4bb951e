#include "common.hpp"

namespace reconf {

namespace {

void require_isr(const ReconfigInstance& src, const char* who) {
  detail::require(src.kind == ProblemKind::IndependentSet, std::string(who) + ": source must be an ISR instance");
  validate(src);
}

std::vector<ProvenanceEntry> identity_provenance(std::size_t n) {
  std::vector<ProvenanceEntry> prov;
  for (std::size_t v = 0; v < n; ++v) prov.push_back({"vertex " + std::to_string(v), "vertex " + std::to_string(v)});
  return prov;
}

class IsrToVcr final : public Reduction {
 public:
  explicit IsrToVcr(const ReconfigInstance& src) : Reduction(ReductionTag::IsrToVcr, src) {
    require_isr(src, "isr_to_vcr");
    const auto n = src.graph().num_vertices();
    ReconfigInstance target{ProblemKind::VertexCover, src.graph(), lift(src.start), lift(src.target),
                            static_cast<int>(n) - *src.set_bound};
    finish(std::move(target), identity_provenance(n));
  }
  State project_state(const State& c) const override { return lift(c); }

 protected:
  State lift(const State& s) const override {
    State out(s.size());
    for (std::size_t v = 0; v < s.size(); ++v) out[v] = !s[v];
    return out;
  }
  void map_step(const State&, const State& next, const State&, std::vector<State>& out) const override {
    out.push_back(lift(next));
  }
};

class IsrToClique final : public Reduction {
 public:
  explicit IsrToClique(const ReconfigInstance& src) : Reduction(ReductionTag::IsrToClique, src) {
    require_isr(src, "isr_to_clique");
    ReconfigInstance target{ProblemKind::Clique, src.graph().complement(), src.start, src.target, src.set_bound};
    finish(std::move(target), identity_provenance(src.graph().num_vertices()));
  }
  State project_state(const State& k) const override { return k; }

 protected:
  State lift(const State& s) const override { return s; }
  void map_step(const State&, const State& next, const State&, std::vector<State>& out) const override {
    out.push_back(next);
  }
};

}  // namespace

ReductionPtr isr_to_vcr(const ReconfigInstance& src) { return std::make_unique<IsrToVcr>(src); }
ReductionPtr isr_to_clique(const ReconfigInstance& src) { return std::make_unique<IsrToClique>(src); }

}  // namespace reconf
