#include "common.hpp"
#include "reconf/encoding.hpp"

namespace reconf {

namespace {

class QcspToEksat final : public Reduction {
 public:
  explicit QcspToEksat(const ReconfigInstance& src) : Reduction(ReductionTag::QcspToEksat, src) {
    detail::require(src.kind == ProblemKind::Csp, "qcsp_to_eksat: source must be a constraint graph");
    validate(src);
    const auto& g = src.csp();
    w_ = static_cast<int>(g.alphabet().size());
    const int q = g.arity();

    std::vector<std::string> vars;
    std::vector<ProvenanceEntry> prov;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      for (int a = 0; a < w_; ++a) {
        vars.push_back("x[" + g.vertex_name(v) + "," + g.alphabet().symbol(a) + "]");
        prov.push_back({"var " + vars.back(), "vertex " + g.vertex_name(v)});
      }

    std::vector<Clause> clauses;
    std::vector<int> tuple(q);
    std::size_t tuples = 1;
    for (int i = 0; i < q; ++i) tuples *= static_cast<std::size_t>(w_);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const auto& verts = g.edge(e).vertices;
      for (std::size_t code = 0; code < tuples; ++code) {
        auto rest = code;
        for (int i = q - 1; i >= 0; --i) {
          tuple[i] = static_cast<int>(rest % w_);
          rest /= w_;
        }
        if (g.accepts(e, tuple)) continue;
        std::vector<std::vector<BitString>> pre;
        for (int i = 0; i < q; ++i) pre.push_back(preimages(tuple[i] + 1, w_));
        std::vector<std::size_t> pick(q, 0);
        while (true) {
          Clause c;
          for (int i = 0; i < q; ++i)
            for (int a = 0; a < w_; ++a) c.push_back({verts[i] * w_ + a, pre[i][pick[i]][a] == 0});
          std::string t;
          for (int i = 0; i < q; ++i) t += (i ? "," : "") + g.alphabet().symbol(tuple[i]);
          prov.push_back({"clause " + std::to_string(clauses.size()), "edge " + std::to_string(e) + " tuple (" + t + ")"});
          clauses.push_back(std::move(c));
          int i = q - 1;
          while (i >= 0 && ++pick[i] == pre[i].size()) pick[i--] = 0;
          if (i < 0) break;
        }
      }
    }
    ReconfigInstance target{ProblemKind::Sat, CnfFormula(std::move(vars), std::move(clauses)), lift(src.start),
                            lift(src.target), std::nullopt};
    finish(std::move(target), std::move(prov));
  }

  State project_state(const State& sigma) const override {
    const auto& g = source().csp();
    State psi(g.num_vertices());
    for (std::size_t v = 0; v < psi.size(); ++v) {
      int sym = enc(block(sigma, v)) - 1;
      psi[v] = static_cast<std::uint8_t>(g.in_domain(v, sym) ? sym : g.domain(v).front());
    }
    return psi;
  }

 protected:
  State lift(const State& psi) const override {
    State sigma;
    for (auto sym : psi) {
      auto s = smallest_preimage(sym + 1, w_);
      sigma.insert(sigma.end(), s.begin(), s.end());
    }
    return sigma;
  }

  void map_step(const State& prev, const State& next, const State& cur, std::vector<State>& out) const override {
    auto v = detail::changed_position(prev, next);
    auto path = enc_path(block(cur, v), smallest_preimage(next[v] + 1, w_));
    for (std::size_t i = 1; i < path.size(); ++i) {
      State s = out.back();
      std::copy(path[i].begin(), path[i].end(), s.begin() + static_cast<std::ptrdiff_t>(v * w_));
      out.push_back(std::move(s));
    }
  }

 private:
  BitString block(const State& sigma, std::size_t v) const {
    auto first = sigma.begin() + static_cast<std::ptrdiff_t>(v * w_);
    return BitString(first, first + w_);
  }

  int w_ = 0;
};

}  // namespace

ReductionPtr qcsp_to_eksat(const ReconfigInstance& src) { return std::make_unique<QcspToEksat>(src); }

}  // namespace reconf
