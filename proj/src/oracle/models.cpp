#include <algorithm>
#include <bit>

#include "reconf/kernels.hpp"

namespace reconf::kernels {

namespace {

class CspModel final : public ScoreModel {
 public:
  explicit CspModel(const ConstraintGraph& g) : ScoreModel(Lattice(radix_of(g))), g_(g) {}

  std::int32_t score(std::uint64_t code) const override {
    thread_local State buf;
    buf.resize(g_.num_vertices());
    fill(code, buf);
    std::int32_t s = 0;
    for (std::size_t e = 0; e < g_.num_edges(); ++e) s += g_.satisfied(e, buf);
    return s;
  }

  std::uint64_t encode(const State& s) const override {
    std::uint64_t code = 0;
    for (std::size_t v = 0; v < s.size(); ++v) {
      const auto& d = g_.domain(v);
      auto pos = std::lower_bound(d.begin(), d.end(), s[v]) - d.begin();
      code += static_cast<std::uint64_t>(pos) * lattice_.stride(v);
    }
    return code;
  }

  State decode(std::uint64_t code) const override {
    State s(g_.num_vertices());
    fill(code, s);
    return s;
  }

 private:
  static std::vector<std::uint32_t> radix_of(const ConstraintGraph& g) {
    std::vector<std::uint32_t> r;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) r.push_back(static_cast<std::uint32_t>(g.domain(v).size()));
    return r;
  }
  void fill(std::uint64_t code, State& s) const {
    for (std::size_t v = 0; v < s.size(); ++v) s[v] = static_cast<std::uint8_t>(g_.domain(v)[lattice_.digit(code, v)]);
  }

  const ConstraintGraph& g_;
};

// States whose positions are all binary: the code is the bit vector itself.
class BinaryModel : public ScoreModel {
 public:
  explicit BinaryModel(std::size_t n) : ScoreModel(Lattice(std::vector<std::uint32_t>(n, 2))) {}

  std::uint64_t encode(const State& s) const override {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i]) code |= std::uint64_t{1} << i;
    return code;
  }
  State decode(std::uint64_t code) const override {
    State s(lattice_.positions());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = (code >> i) & 1;
    return s;
  }
};

class SatModel final : public BinaryModel {
 public:
  explicit SatModel(const CnfFormula& phi) : BinaryModel(phi.num_variables()) {
    for (const auto& c : phi.clauses()) {
      std::uint64_t pos = 0, neg = 0;
      for (const auto& l : c) (l.positive ? pos : neg) |= std::uint64_t{1} << l.var;
      pos_.push_back(pos);
      neg_.push_back(neg);
    }
  }
  std::int32_t score(std::uint64_t code) const override {
    std::int32_t s = 0;
    for (std::size_t j = 0; j < pos_.size(); ++j) s += ((code & pos_[j]) | (~code & neg_[j])) != 0;
    return s;
  }

 private:
  std::vector<std::uint64_t> pos_, neg_;
};

class NclModel final : public BinaryModel {
 public:
  explicit NclModel(const NclGraph& g) : BinaryModel(g.num_links()), g_(g) {}
  std::int32_t score(std::uint64_t code) const override {
    thread_local State buf;
    buf.resize(g_.num_links());
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = (code >> i) & 1;
    std::int32_t s = 0;
    for (std::size_t v = 0; v < g_.num_nodes(); ++v) s += g_.node_satisfied(v, buf);
    return s;
  }

 private:
  const NclGraph& g_;
};

class SetModel final : public BinaryModel {
 public:
  SetModel(const SimpleGraph& g, ProblemKind kind) : BinaryModel(g.num_vertices()), kind_(kind) {
    const auto n = g.num_vertices();
    adj_.assign(n, 0);
    for (auto [u, v] : g.edges()) {
      adj_[u] |= std::uint64_t{1} << v;
      adj_[v] |= std::uint64_t{1} << u;
      edges_.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    }
  }
  std::int32_t score(std::uint64_t code) const override {
    const auto size = static_cast<std::int32_t>(std::popcount(code));
    switch (kind_) {
      case ProblemKind::IndependentSet:
        for (std::size_t v = 0; v < adj_.size(); ++v)
          if (((code >> v) & 1) && (code & adj_[v])) return -1;
        return size;
      case ProblemKind::Clique:
        for (std::size_t v = 0; v < adj_.size(); ++v)
          if (((code >> v) & 1) && (code & ~adj_[v] & ~(std::uint64_t{1} << v))) return -1;
        return size;
      default:
        for (auto e : edges_)
          if (!(code & e)) return -1;
        return size;
    }
  }

 private:
  ProblemKind kind_;
  std::vector<std::uint64_t> adj_, edges_;
};

}  // namespace

std::unique_ptr<ScoreModel> make_score_model(const ReconfigInstance& in) {
  const auto binary_cap = [](std::size_t n) {
    if (n > 62) throw CapacityError("state space exceeds 2^62");
  };
  switch (in.kind) {
    case ProblemKind::Csp: return std::make_unique<CspModel>(in.csp());
    case ProblemKind::Sat: binary_cap(in.cnf().num_variables()); return std::make_unique<SatModel>(in.cnf());
    case ProblemKind::Ncl: binary_cap(in.ncl().num_links()); return std::make_unique<NclModel>(in.ncl());
    default: binary_cap(in.graph().num_vertices()); return std::make_unique<SetModel>(in.graph(), in.kind);
  }
}

}  // namespace reconf::kernels
