#include <doctest.h>

#include <random>

#include "reconf/pipeline.hpp"
#include "support/brute.hpp"

using namespace reconf;

namespace {

std::size_t count_named(const NclGraph& g, const std::string& prefix, NodeKind kind) {
  std::size_t n = 0;
  for (const auto& node : g.nodes()) n += node.kind == kind && node.name.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace

TEST_CASE("literal network for the three-clause formula") {
  auto src = literal_network_example();
  auto red = e3sat_to_ncl(src);
  const auto& g = red->target().ncl();
  CHECK(g.count(NodeKind::Choice) == 4);
  CHECK(g.count(NodeKind::Or) == 3);
  CHECK(ncl_value(g, red->target().start) == Rational(1));
  CHECK(ncl_value(g, red->target().target) == Rational(1));
  auto seq = red->map_sequence({src.start, src.target});
  CHECK(verify_sequence(red->target(), seq, Rational(1)).passed());
  CHECK(red->project_state(red->target().start) == src.start);
}

TEST_CASE("fanout count follows the number of occurrences") {
  auto src = literal_network_example();
  auto red = e3sat_to_ncl(src);
  const auto& g = red->target().ncl();
  // x+ occurs in C1 and C3, y+ only in C1, w- nowhere
  CHECK(count_named(g, "x+", NodeKind::Fanout) == 1);
  CHECK(count_named(g, "y+", NodeKind::Fanout) == 0);
  CHECK(count_named(g, "z+", NodeKind::Fanout) == 1);
  CHECK(count_named(g, "w-", NodeKind::FreeTerminator) == 1);
}

TEST_CASE("flipping a variable absent from every clause only touches its terminator links") {
  CnfFormula phi({"a", "b", "c", "u"}, {{{0, true}, {1, true}, {2, true}}});
  ReconfigInstance src{ProblemKind::Sat, phi, State{1, 0, 0, 0}, State{1, 0, 0, 1}, std::nullopt};
  auto red = e3sat_to_ncl(src);
  const auto& g = red->target().ncl();
  auto seq = red->map_sequence({src.start, src.target});
  CHECK(verify_sequence(red->target(), seq, Rational(1)).passed());
  for (std::size_t i = 1; i < seq.size(); ++i)
    for (std::size_t l = 0; l < g.num_links(); ++l)
      if (seq[i][l] != seq[i - 1][l]) {
        const auto& link = g.link(l);
        CHECK(g.node(link.a).name == "u");
        CHECK(g.node(link.b).kind == NodeKind::FreeTerminator);
      }
}

TEST_CASE("NCL to ISR counting identities on two AND and two OR nodes") {
  auto ncl = generate_instance("ncl_andor", {{"n_and", 2}, {"n_or", 2}}, 11);
  CHECK(ncl.ncl().num_links() == 6);
  auto red = ncl_to_isr(ncl);
  const auto& host = red->target().graph();
  CHECK(host.num_vertices() == 18);
  CHECK(brute::alpha(host) == 8);
  CHECK(*red->target().set_bound == 8);
  CHECK(subset_size(red->target().start) == 8);
  CHECK(subset_size(red->target().target) == 8);
}

TEST_CASE("every satisfying orientation lifts to a maximum independent set") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10; ++i) {
    const int n_and = static_cast<int>(rng() % 4) * 2, n_or = 2 + static_cast<int>(rng() % 2) * 2;
    auto ncl = generate_instance("ncl_andor", {{"n_and", n_and}, {"n_or", n_or}}, rng());
    auto red = ncl_to_isr(ncl);
    const auto& g = ncl.ncl();
    State o(g.num_links());
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << g.num_links()); ++code) {
      for (std::size_t l = 0; l < o.size(); ++l) o[l] = (code >> l) & 1;
      if (ncl_value(g, o) != Rational(1)) continue;
      ReconfigInstance at{ProblemKind::Ncl, g, o, o, std::nullopt};
      auto r = ncl_to_isr(at);
      CHECK(subset_size(r->target().start) == static_cast<std::size_t>(*r->target().set_bound));
      CHECK(is_independent_set(r->target().graph(), r->target().start));
      CHECK(r->project_state(r->target().start) == o);
    }
  }
}

TEST_CASE("NCL to ISR edge cases") {
  ReconfigInstance empty{ProblemKind::Ncl, NclGraph({}, {}), State{}, State{}, std::nullopt};
  auto red = ncl_to_isr(empty);
  CHECK(red->target().graph().num_vertices() == 0);

  auto ext = e3sat_to_ncl(literal_network_example())->target();
  CHECK_THROWS_AS(ncl_to_isr(ext), DomainError);
  // an odd AND + OR count cannot be wired at all: blue endpoints number n_AND + 3 n_OR
  CHECK_THROWS_AS(NclGraph({{"o1", NodeKind::Or}}, {}), DomainError);
}

TEST_CASE("NCL to ISR projection bound per state") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    auto ncl = generate_instance("ncl_andor", {{"n_and", 2}, {"n_or", 2}}, rng());
    auto red = ncl_to_isr(ncl);
    auto walk = brute::random_walk(red->target(), rng, 40);
    auto check = ncl_isr_projection_check(*red, walk);
    CHECK(check.holds);
  }
}
