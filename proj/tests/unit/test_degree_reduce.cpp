#include <doctest.h>

#include <algorithm>
#include <random>

#include "reconf/pipeline.hpp"

using namespace reconf;

namespace {

constexpr int a = 0, b = 1, c = 2, ab = 3, bc = 4, ca = 5;

bool has_pair(const std::vector<std::vector<int>>& pairs, int x, int y) {
  return std::find(pairs.begin(), pairs.end(), std::vector<int>{x, y}) != pairs.end();
}

// Reference plurality: count memberships per base symbol, ties to the earliest symbol.
int plurality_ref(const std::vector<int>& cloud) {
  int count[3] = {0, 0, 0};
  for (int v : cloud)
    for (int s = 0; s < 3; ++s)
      if (kSquaredMasks[v] & (1 << s)) ++count[s];
  return static_cast<int>(std::max_element(count, count + 3) - count);
}

}  // namespace

TEST_CASE("intra-cloud constraint has the 18 containment pairs") {
  auto pairs = intra_cloud_pairs();
  CHECK(pairs.size() == 18);
  CHECK(has_pair(pairs, ab, a));
  CHECK(has_pair(pairs, a, ab));
  CHECK(has_pair(pairs, ab, b));
  CHECK(has_pair(pairs, bc, b));
  CHECK(has_pair(pairs, ab, ab));
  CHECK_FALSE(has_pair(pairs, ab, c));
  CHECK_FALSE(has_pair(pairs, ab, bc));
  CHECK_FALSE(has_pair(pairs, a, b));
}

TEST_CASE("squared symbols") {
  CHECK(squared_symbols(Alphabet({"a", "b", "c"})) == std::vector<std::string>{"a", "b", "c", "ab", "bc", "ca"});
}

TEST_CASE("plurality examples") {
  const std::vector<int> dom{0, 1, 2};
  CHECK(plurality(std::vector{a, a, a}, dom) == a);
  CHECK(plurality(std::vector{ab, ab, c}, dom) == a);
  CHECK(plurality(std::vector{bc, c, a}, dom) == c);
  CHECK(plurality(std::vector{ca, bc}, dom) == c);
}

TEST_CASE("plurality matches the reference on every cloud of size <= 4") {
  const std::vector<int> dom{0, 1, 2};
  for (int size = 1; size <= 4; ++size) {
    int total = 1;
    for (int i = 0; i < size; ++i) total *= 6;
    for (int code = 0; code < total; ++code) {
      std::vector<int> cloud(size);
      for (int i = 0, r = code; i < size; ++i, r /= 6) cloud[i] = r % 6;
      CHECK(plurality(cloud, dom) == plurality_ref(cloud));
    }
  }
}

TEST_CASE("inter-cloud constraint lifts by the product rule") {
  ConstraintGraph g(2, Alphabet({"a", "b", "c"}), {"u", "v"}, {{{0, 1}, {{a, a}}}});
  ReconfigInstance in{ProblemKind::Csp, g, State{a, a}, State{a, a}, std::nullopt};
  auto red = degree_reduce(in, {});
  const auto& t = red->target().csp();
  CHECK(t.num_vertices() == 2);
  CHECK(t.accepts(0, std::array{a, a}));
  CHECK_FALSE(t.accepts(0, std::array{ab, a}));
  CHECK_FALSE(t.accepts(0, std::array{a, ca}));
}

TEST_CASE("degree reduction sizes and degree bound") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    auto in = generate_instance("bcsp3", {{"vertices", 5}, {"edges", 6}}, rng());
    auto red = degree_reduce(in, {});
    const auto& t = red->target().csp();
    CHECK(t.num_vertices() == 2 * in.csp().num_edges());
    CHECK(t.alphabet().size() == 6);
    CHECK(red->target().start.size() == t.num_vertices());
    for (std::size_t v = 0; v < t.num_vertices(); ++v) CHECK(t.degree(v) <= in.csp().max_degree());
    CHECK(csp_value(t, red->target().start) == csp_value(in.csp(), in.start));
  }
}

TEST_CASE("unsupported sources are rejected") {
  auto w2 = generate_instance("qcsp", {{"q", 2}, {"W", 2}, {"vertices", 3}, {"edges", 2}}, 1);
  CHECK_THROWS_AS(degree_reduce(w2, {}), DomainError);
  auto q3 = generate_instance("qcsp", {{"q", 3}, {"W", 3}, {"vertices", 4}, {"edges", 2}}, 1);
  CHECK_THROWS_AS(degree_reduce(q3, {}), DomainError);
}

TEST_CASE("a single flip at a degree-d vertex maps to 2d target steps") {
  auto ex = cheating_example(2);
  // z1 has degree 1
  State mid = ex.start;
  mid[4] = 1;
  ReconfigInstance in{ProblemKind::Csp, ex.payload, ex.start, mid, std::nullopt};
  auto red = degree_reduce(in, {});
  auto seq = red->map_sequence({ex.start, mid});
  CHECK(seq.size() == 1 + 2 * 1);
  CHECK(verify_sequence(red->target(), seq, Rational(1)).passed());

  // v has degree 4 once (w,v) lets it move
  auto g = ex.csp();
  auto edges = g.edges();
  edges[0].allowed = {{a, a}, {a, b}};
  ReconfigInstance loose{ProblemKind::Csp, ConstraintGraph(2, g.alphabet(), g.vertex_names(), edges), ex.start,
                         ex.start, std::nullopt};
  State vb = ex.start;
  vb[1] = b;
  loose.target = vb;
  auto r2 = degree_reduce(loose, {});
  auto s2 = r2->map_sequence({ex.start, vb});
  CHECK(s2.size() == 1 + 2 * 4);
  CHECK(verify_sequence(r2->target(), s2, Rational(1)).passed());
}

TEST_CASE("star example before and after splitting v") {
  auto ex = cheating_example(2);
  CHECK(maxmin_value(ex).value == Rational(4, 5));
  auto reduced = cheating_example_reduced(ex);
  const auto& t = reduced->target().csp();
  CHECK(t.num_vertices() == 9);
  // 5 inter edges and K4 minus one pair inside the cloud
  CHECK(t.num_edges() == 5 + 5);
  OracleConfig cfg;
  cfg.explore_reachable_only = true;
  CHECK(maxmin_value(reduced->target(), cfg).value == Rational(1));
  auto seq = cheating_schedule(*reduced, 2);
  auto rep = verify_sequence(reduced->target(), seq, Rational(1));
  CHECK(rep.passed());
  // projection of the cheating schedule dips below 1 in the source
  auto proj = reduced->project_sequence(seq);
  auto src_rep = verify_sequence(ex, proj, Rational(0));
  CHECK(src_rep.valid_steps);
  CHECK(*src_rep.value < 1);
}

TEST_CASE("parameter canonicalization") {
  auto p = DegreeReductionParams::from_epsilon(Rational(1, 3));
  CHECK(p.epsilon == Rational(1, 3));
  CHECK(p.delta == Rational(1, 24));
  CHECK(p.d0 == 82944);
  auto q = DegreeReductionParams::from_epsilon(Rational(3, 10));
  CHECK(q.epsilon == Rational(1, 4));
  CHECK(q.d0 == 147456);
  CHECK(q.d0 % 2 == 0);
  CHECK_THROWS_AS(DegreeReductionParams::from_epsilon(Rational(1)), DomainError);
  CHECK_THROWS_AS(DegreeReductionParams::from_epsilon(Rational(0)), DomainError);
}

TEST_CASE("expander clouds replace complete ones above the threshold") {
  DegreeReductionParams p;
  p.d0 = 4;
  p.cloud_threshold = 6;
  p.expander_source = ExpanderSource::VerifiedRandomRegular;
  p.seed = 3;
  auto small = make_cloud(5, p);
  CHECK(small.complete);
  CHECK(small.edges.size() == 10);
  auto big = make_cloud(12, p);
  CHECK_FALSE(big.complete);
  CHECK(big.edges.size() == 24);
  REQUIRE(big.certificate);
  CHECK(big.certificate->lambda <= 4.0);
}
