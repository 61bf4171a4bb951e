#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "reconf/spectral.hpp"

using namespace reconf;

namespace {

bool regular_and_simple(const RegularGraph& g) {
  std::vector<int> deg(g.n, 0);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u == v || u >= v || !seen.insert({u, v}).second) return false;
    ++deg[u];
    ++deg[v];
  }
  for (int d : deg)
    if (d != g.d) return false;
  return true;
}

// Every ordered pair of disjoint subsets.
bool mixing_exhaustive(const RegularGraph& g, double lambda) {
  int total = 1;
  for (int i = 0; i < g.n; ++i) total *= 3;
  std::vector<int> s, t;
  for (int code = 0; code < total; ++code) {
    s.clear();
    t.clear();
    for (int v = 0, r = code; v < g.n; ++v, r /= 3) {
      if (r % 3 == 1) s.push_back(v);
      if (r % 3 == 2) t.push_back(v);
    }
    if (!mixing_check(g, lambda, s, t).holds) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("complete graphs have second eigenvalue magnitude 1") {
  for (int n = 4; n <= 12; ++n) {
    auto cert = spectral_bound(complete_graph(n));
    CHECK(std::abs(cert.lambda - 1.0) <= 1e-9);
    CHECK(std::abs(cert.lambda_1 - (n - 1)) <= 1e-9);
  }
}

TEST_CASE("cycle spectra") {
  for (int n = 5; n <= 12; ++n) {
    double expected = 0;
    for (int k = 1; k < n; ++k) expected = std::max(expected, std::abs(2 * std::cos(2 * std::numbers::pi * k / n)));
    CHECK(std::abs(spectral_bound(cycle_graph(n)).lambda - expected) <= 1e-9);
  }
}

TEST_CASE("random regular graphs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = random_regular(40, 5 + 1, seed);
    CHECK(regular_and_simple(g));
    CHECK(is_connected(g));
    CHECK(g.edges.size() == 40 * 6 / 2);
    auto again = random_regular(40, 6, seed);
    CHECK(again.edges == g.edges);
  }
  CHECK_THROWS_AS(random_regular(9, 3, 1), DomainError);
  CHECK_THROWS_AS(random_regular(4, 4, 1), DomainError);
}

TEST_CASE("spectral bound rejects irregular graphs") {
  RegularGraph bad{4, 2, {{0, 1}, {1, 2}, {2, 3}}};
  CHECK_THROWS_AS(spectral_bound(bad), DomainError);
}

TEST_CASE("mixing lemma holds exhaustively on small certified graphs") {
  for (int n = 4; n <= 8; ++n) CHECK(mixing_exhaustive(complete_graph(n), spectral_bound(complete_graph(n)).lambda));
  auto g = random_regular(8, 3, 4);
  CHECK(mixing_exhaustive(g, spectral_bound(g).lambda));
}

TEST_CASE("mixing check counts ordered edges between the sets") {
  auto k4 = complete_graph(4);
  std::vector<int> s{0, 1}, t{2, 3};
  auto r = mixing_check(k4, 1.0, s, t);
  CHECK(r.edges_between == 4);
  CHECK(r.holds);
  // a bound of zero fails unless the count matches the average exactly
  CHECK_FALSE(mixing_check(k4, 0.0, s, t).holds);
}

TEST_CASE("a bound below the true second eigenvalue is caught by some pair") {
  auto c = cycle_graph(8);
  std::vector<int> s{0, 2, 4, 6}, t{1, 3, 5, 7};
  // bipartite halves: e(S,T) = 8 while d|S||T|/n = 4, so lambda must reach 1
  CHECK_FALSE(mixing_check(c, 0.5, s, t).holds);
  CHECK(mixing_check(c, spectral_bound(c).lambda, s, t).holds);
}
