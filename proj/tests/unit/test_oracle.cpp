#include <doctest.h>

#include <random>

#include "reconf/pipeline.hpp"
#include "support/brute.hpp"

using namespace reconf;

namespace {

void check_against_brute(const ReconfigInstance& in) {
  auto r = optimal_value(in);
  CHECK(r.value == brute::bottleneck(in));
  REQUIRE(r.witness);
  auto rep = verify_sequence(in, *r.witness, r.value);
  CHECK(rep.passed());
  CHECK(*rep.value == r.value);
  const auto vs = state_value(in, in.start), vt = state_value(in, in.target);
  if (minimizes(in.kind)) CHECK(r.value >= std::max(vs, vt));
  else CHECK(r.value <= std::min(vs, vt));
}

}  // namespace

TEST_CASE("star example maxmin value") {
  auto ex = cheating_example(2);
  auto r = maxmin_value(ex);
  CHECK(r.value == Rational(4, 5));
  CHECK(brute::bottleneck(ex) == Rational(4, 5));
  CHECK(r.explored_states == 729);
}

TEST_CASE("trivial oracle cases") {
  ReconfigInstance unit{ProblemKind::Sat, CnfFormula({"x"}, {{{0, true}}}), State{1}, State{1}, std::nullopt};
  auto r = maxmin_value(unit);
  CHECK(r.value == Rational(1));
  CHECK(r.witness->size() == 1);

  ReconfigInstance half{ProblemKind::Sat, CnfFormula({"x"}, {{{0, true}}, {{0, false}}}), State{1}, State{1},
                        std::nullopt};
  CHECK(maxmin_value(half).value == Rational(1, 2));

  SimpleGraph empty(3, {});
  ReconfigInstance vcr{ProblemKind::VertexCover, empty, State{0, 0, 0}, State{0, 0, 0}, 0};
  CHECK(minmax_value(vcr).value == Rational(0));
  CHECK_THROWS_AS(maxmin_value(vcr), DomainError);
  CHECK_THROWS_AS(minmax_value(unit), DomainError);
}

TEST_CASE("oracle agrees with widest-path search on random CSP instances") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 25; ++i)
    check_against_brute(generate_instance(
        "qcsp", {{"q", 2}, {"W", 3}, {"vertices", 5}, {"edges", 6}, {"planted", rng() % 2 == 0}}, rng()));
}

TEST_CASE("oracle agrees with widest-path search on random SAT instances") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 25; ++i)
    check_against_brute(
        generate_instance("e3sat", {{"n", 6}, {"m", 7}, {"planted", rng() % 2 == 0}}, rng()));
}

TEST_CASE("oracle agrees with widest-path search on NCL and set instances") {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 10; ++i) {
    auto ncl = generate_instance("ncl_andor", {{"n_and", 2}, {"n_or", 2}}, rng());
    check_against_brute(ncl);
    auto isr = generate_instance("isr", {{"n", 8}, {"edge_percent", 30}}, rng());
    check_against_brute(isr);
    check_against_brute(isr_to_vcr(isr)->target());
    check_against_brute(isr_to_clique(isr)->target());
  }
}

TEST_CASE("set numbers") {
  SimpleGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(alpha(k3) == 1);
  CHECK(beta(k3) == 2);
  CHECK(omega(k3) == 3);
  SimpleGraph empty(5, {});
  CHECK(alpha(empty) == 5);
  CHECK(beta(empty) == 0);
  CHECK(omega(empty) == 1);
  std::mt19937_64 rng(404);
  for (int i = 0; i < 60; ++i) {
    const int n = 2 + static_cast<int>(rng() % 13);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 40) edges.emplace_back(u, v);
    SimpleGraph g(n, edges);
    CHECK(alpha(g) == brute::alpha(g));
    CHECK(beta(g) == n - brute::alpha(g));
    CHECK(omega(g) == brute::alpha(g.complement()));
  }
}

TEST_CASE("the NCL-to-ISR host graph for two AND and two OR nodes has alpha 8") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto ncl = generate_instance("ncl_andor", {{"n_and", 2}, {"n_or", 2}}, seed);
    auto red = ncl_to_isr(ncl);
    CHECK(alpha(red->target().graph()) == 8);
  }
}

TEST_CASE("deleting a clause never increases the best worst-case violation count") {
  std::mt19937_64 rng(505);
  for (int i = 0; i < 30; ++i) {
    auto in = generate_instance("e3sat", {{"n", 5}, {"m", 5}, {"planted", false}}, rng());
    const auto m = static_cast<std::int64_t>(in.cnf().num_clauses());
    const auto full = (1 - maxmin_value(in).value) * m;
    for (std::size_t j = 0; j < in.cnf().num_clauses(); ++j) {
      auto clauses = in.cnf().clauses();
      clauses.erase(clauses.begin() + static_cast<std::ptrdiff_t>(j));
      ReconfigInstance less{ProblemKind::Sat, CnfFormula(in.cnf().variables(), clauses), in.start, in.target,
                            std::nullopt};
      CHECK((1 - maxmin_value(less).value) * (m - 1) <= full);
    }
  }
}

TEST_CASE("vertex cover and independent set values are dual under complement") {
  std::mt19937_64 rng(606);
  for (int i = 0; i < 20; ++i) {
    auto isr = generate_instance("isr", {{"n", 9}, {"edge_percent", 35}}, rng());
    auto vcr = isr_to_vcr(isr);
    const auto n = static_cast<std::int64_t>(isr.graph().num_vertices());
    const int a = *isr.set_bound, b = *vcr->target().set_bound;
    CHECK(b == n - a);
    const auto vi = maxmin_value(isr).value, vc = minmax_value(vcr->target()).value;
    CHECK(vc == (n - (a - 1) * vi) / (b + 1));
  }
}

TEST_CASE("oracle is deterministic and serial and parallel agree") {
  std::mt19937_64 rng(707);
  for (int i = 0; i < 10; ++i) {
    auto in = generate_instance("e3sat", {{"n", 7}, {"m", 8}, {"planted", false}}, rng());
    OracleConfig serial;
    serial.parallel = false;
    auto a = maxmin_value(in), b = maxmin_value(in), c = maxmin_value(in, serial);
    CHECK(a.value == b.value);
    CHECK(*a.witness == *b.witness);
    CHECK(a.value == c.value);
    CHECK(*a.witness == *c.witness);
  }
}

TEST_CASE("capacity errors and reachable-only search") {
  auto in = generate_instance("e3sat", {{"n", 8}, {"m", 6}, {"planted", true}}, 3);
  OracleConfig small;
  small.state_cap = 100;
  CHECK_THROWS_AS(maxmin_value(in, small), CapacityError);
  OracleConfig zero;
  zero.state_cap = 0;
  CHECK_THROWS_AS(maxmin_value(in, zero), DomainError);

  std::mt19937_64 rng(808);
  for (int i = 0; i < 15; ++i) {
    auto isr = generate_instance("isr", {{"n", 11}, {"edge_percent", 40}}, rng());
    OracleConfig lazy;
    lazy.state_cap = (1u << 11) - 1;
    lazy.explore_reachable_only = true;
    auto r = maxmin_value(isr, lazy);
    CHECK(r.value == maxmin_value(isr).value);
    CHECK(verify_sequence(isr, *r.witness, r.value).passed());
  }
}
