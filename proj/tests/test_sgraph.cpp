#include <random>
#include <sstream>

#include "doctest.h"
#include "sgda/reductions.hpp"
#include "sgda/sgraph.hpp"
#include "test_util.hpp"

using namespace sgda;

TEST_CASE("parse builds the listed edges with labels preserved") {
  SignedGraph g = parse_edge_list("a b +\nb c -");
  CHECK(g.n() == 3);
  CHECK(g.positive_edge_count() == 1);
  CHECK(g.negative_edge_count() == 1);
  CHECK(g.edge_sign(g.index_of("a"), g.index_of("b")) == Sign::Positive);
  CHECK(g.edge_sign(g.index_of("b"), g.index_of("c")) == Sign::Negative);
  CHECK(!g.adjacent(g.index_of("a"), g.index_of("c")));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_edge_list("a a +"), SelfLoop);
  CHECK_THROWS_AS(parse_edge_list("a b +\nb a -"), DuplicateEdge);
  CHECK_THROWS_AS(parse_edge_list("a b +\na b +"), DuplicateEdge);
  CHECK_THROWS_AS(parse_edge_list("a b"), MalformedLine);
  CHECK_THROWS_AS(parse_edge_list("a b *"), MalformedLine);
}

TEST_CASE("fixture graph has the published counts") {
  SignedGraph g = test::read_graph();
  CHECK(g.n() == 16);
  CHECK(g.edge_count() == 58);
  CHECK(g.positive_edge_count() == 29);
  CHECK(g.negative_edge_count() == 29);
}

TEST_CASE("parse after serialize is the identity") {
  auto check_roundtrip = [](const SignedGraph& g) {
    SignedGraph h = parse_edge_list(serialize_edge_list(g));
    REQUIRE(h.n() == g.n());
    CHECK(h.edges().size() == g.edges().size());
    for (const Edge& e : g.edges()) {
      auto s = h.edge_sign(h.index_of(g.label(e.u)), h.index_of(g.label(e.v)));
      REQUIRE(s.has_value());
      CHECK(*s == e.sign);
    }
  };
  check_roundtrip(test::read_graph());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i)
    check_roundtrip(gen_random(1 + static_cast<int>(rng() % 10), 0.5, 0.5,
                               rng()));
  check_roundtrip(gen_random(6, 0.0, 0.0, 3));  // isolated vertices survive
}

TEST_CASE("degree profile splits the neighborhood") {
  SignedGraph g = test::read_graph();
  auto p = degree_profile(g, g.index_of("8"), test::ids(g, {"7", "8"}));
  CHECK(p.deg_in_pos == 1);
  CHECK(p.deg_in_neg == 0);
  CHECK(p.deg_out_neg == 1);

  SUBCASE("empty set leaves everything outside") {
    for (int v = 0; v < g.n(); ++v) {
      auto q = degree_profile(g, v, {});
      CHECK(q.deg_in_pos == 0);
      CHECK(q.deg_in_neg == 0);
      CHECK(q.deg_out_neg == g.negative_degree(v));
    }
  }
  SUBCASE("negative triangle, all inside") {
    SignedGraph t = test::negative_clique(3);
    auto q = degree_profile(t, 0, {0, 1, 2});
    CHECK(q.deg_in_pos == 0);
    CHECK(q.deg_in_neg == 2);
    CHECK(q.deg_out_neg == 0);
  }
  CHECK_THROWS_AS(degree_profile(g, 99, {}), UnknownVertex);
}

TEST_CASE("degree profile splits are consistent") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    SignedGraph g = gen_random(8, 0.5, 0.5, rng());
    std::vector<int> s;
    for (int v = 0; v < g.n(); ++v)
      if (rng() % 2) s.push_back(v);
    for (int v = 0; v < g.n(); ++v) {
      auto p = degree_profile(g, v, s);
      CHECK(p.deg_in_pos + p.deg_in_neg <= g.degree(v));
      CHECK(p.deg_in_neg + p.deg_out_neg == g.negative_degree(v));
    }
  }
}

TEST_CASE("induced subgraph keeps inside edges and degrees") {
  SignedGraph g = test::read_graph();
  SignedGraph h = induced(g, test::ids(g, {"7", "8"}));
  CHECK(h.n() == 2);
  CHECK(h.edge_count() == 1);
  CHECK(h.positive_edge_count() == 1);

  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  CHECK(induced(g, all).edge_count() == g.edge_count());
  CHECK(induced(g, {}).n() == 0);

  // Degrees inside the induced graph match the split profile.
  std::mt19937_64 rng(7);
  for (int it = 0; it < 20; ++it) {
    SignedGraph r = gen_random(9, 0.6, 0.4, rng());
    std::vector<int> x;
    for (int v = 0; v < r.n(); ++v)
      if (rng() % 2) x.push_back(v);
    SignedGraph rx = induced(r, x);
    for (int v : x) {
      auto p = degree_profile(r, v, x);
      int lv = rx.index_of(r.label(v));
      CHECK(rx.positive_degree(lv) == p.deg_in_pos);
      CHECK(rx.negative_degree(lv) == p.deg_in_neg);
    }
  }
}

TEST_CASE("balance detection") {
  SignedGraph allpos = parse_edge_list("a b +\nb c +");
  auto b = is_balanced(allpos);
  REQUIRE(b.has_value());
  CHECK(b->side1.empty());

  SignedGraph one_neg = parse_edge_list("u v -");
  auto b2 = is_balanced(one_neg);
  REQUIRE(b2.has_value());
  CHECK(b2->side0.size() == 1);
  CHECK(b2->side1.size() == 1);

  SignedGraph bad = parse_edge_list("a b +\nb c +\na c -");
  CHECK(!is_balanced(bad).has_value());
}

TEST_CASE("clustering partition is the positive components") {
  SignedGraph g = gen_k_balanced_complete({3, 2});
  auto c = clustering_partition(g);
  REQUIRE(c.has_value());
  CHECK(c->k() == 2);

  SignedGraph one_neg_triangle = parse_edge_list("a b +\nb c +\na c -");
  CHECK(!clustering_partition(one_neg_triangle).has_value());

  auto t = clustering_partition(test::negative_clique(3));
  REQUIRE(t.has_value());
  CHECK(t->k() == 3);
}

TEST_CASE("a 2-group clustering is a valid bipartition") {
  std::mt19937_64 rng(23);
  int seen = 0;
  for (int it = 0; it < 400 && seen < 30; ++it) {
    SignedGraph g = gen_random(7, 0.5, 0.5, rng());
    auto c = clustering_partition(g);
    if (!c || c->k() > 2) continue;
    ++seen;
    CHECK(is_balanced(g).has_value());
  }
  CHECK(seen > 0);
}

TEST_CASE("dot export styles signs and fills the set") {
  SignedGraph g = test::fig2b_graph();
  std::string dot = to_dot(g, test::ids(g, {"v6"}));
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("style=solid") != std::string::npos);
  CHECK(dot.find("\"v6\" [style=filled") != std::string::npos);
}
