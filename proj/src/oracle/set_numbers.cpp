#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "reconf/oracle.hpp"

namespace reconf {

namespace {

using Bits = boost::dynamic_bitset<>;

class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(const SimpleGraph& g) : n_(g.num_vertices()), adj_(n_, Bits(n_)) {
    for (auto [u, v] : g.edges()) {
      adj_[u].set(v);
      adj_[v].set(u);
    }
  }

  int solve() {
    Bits all(n_);
    all.set();
    best_ = 0;
    search(all, 0);
    return best_;
  }

 private:
  // Greedy partition of P into cliques; an independent set meets each at most once.
  int clique_cover(const Bits& p) const {
    std::vector<Bits> common;
    for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
      bool placed = false;
      for (auto& c : common)
        if (c.test(v)) {
          c &= adj_[v];
          placed = true;
          break;
        }
      if (!placed) common.push_back(adj_[v] & p);
    }
    return static_cast<int>(common.size());
  }

  void search(Bits p, int current) {
    // Vertices of degree <= 1 inside P are always safe to take.
    for (bool changed = true; changed;) {
      changed = false;
      for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v))
        if ((adj_[v] & p).count() <= 1) {
          p -= adj_[v];
          p.reset(v);
          ++current;
          changed = true;
        }
    }
    if (p.none()) {
      best_ = std::max(best_, current);
      return;
    }
    if (current + clique_cover(p) <= best_) return;
    std::size_t pick = Bits::npos, deg = 0;
    for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
      auto d = (adj_[v] & p).count();
      if (pick == Bits::npos || d > deg) pick = v, deg = d;
    }
    Bits with = p - adj_[pick];
    with.reset(pick);
    search(with, current + 1);
    p.reset(pick);
    search(p, current);
  }

  std::size_t n_;
  std::vector<Bits> adj_;
  int best_ = 0;
};

}  // namespace

int alpha(const SimpleGraph& g) { return MaxIndependentSet(g).solve(); }

int beta(const SimpleGraph& g) { return static_cast<int>(g.num_vertices()) - alpha(g); }

int omega(const SimpleGraph& g) { return alpha(g.complement()); }

}  // namespace reconf
