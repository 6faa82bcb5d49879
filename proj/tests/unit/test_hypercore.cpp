#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "t3lab/errors.hpp"
#include "t3lab/hypercore.hpp"
#include "t3lab/oracle.hpp"

using namespace t3lab;

TEST_CASE("edges get dense ids and degrees count parallel copies") {
  Tripartite3Graph h({2, 1, 3});
  CHECK(h.add_edge(0, 0, 2) == 0);
  h.add_edge(1, 0, 1, 3);
  CHECK(h.edge_count() == 4);
  CHECK(h.edge(3).id == 3);
  CHECK(h.degree(1, 0) == 4);
  CHECK(h.degree(0, 1) == 3);
  CHECK(h.degree(2, 0) == 0);
  CHECK(h.max_degree() == 4);
}

TEST_CASE("out-of-range vertices and bad multiplicities are input errors") {
  Tripartite3Graph h({2, 2, 2});
  CHECK_THROWS_AS(h.add_edge(2, 0, 0), InputError);
  CHECK_THROWS_AS(h.add_edge(0, -1, 0), InputError);
  CHECK_THROWS_AS(h.add_edge(0, 0, 0, 0), InputError);
  CHECK_THROWS_AS(Tripartite3Graph({-1, 2, 2}), InputError);
  BipartiteMultigraph g(1, 1);
  CHECK_THROWS_AS(g.add_edge(0, 1), InputError);
}

TEST_CASE("parallel edges intersect, disjoint ones do not") {
  auto g = fixtures::bmg(2, 2, {{0, 0}, {0, 0}, {1, 1}, {0, 1}});
  CHECK(g.intersect(0, 1));
  CHECK_FALSE(g.intersect(0, 2));
  CHECK(g.intersect(2, 3));
}

TEST_CASE("regularity") {
  CHECK(is_regular(fixtures::fano(), 2));
  CHECK_FALSE(is_regular(fixtures::fano(), 1));
  CHECK(is_regular(fixtures::cycle(3), 2));
  CHECK_FALSE(is_regular(fixtures::path(3), 2));
}

TEST_CASE("components are ordered by smallest vertex and keep isolated vertices") {
  Tripartite3Graph h({3, 2, 2});
  h.add_edge(2, 1, 1);
  h.add_edge(0, 0, 0);
  const auto comps = components(h);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].edge_ids == std::vector<int>{1});
  CHECK(comps[1].vertices == std::vector<VertexRef>{{0, 1}});
  CHECK(comps[2].edge_ids == std::vector<int>{0});
  const auto sub = extract(h, comps[2]);
  CHECK(sub.graph.class_sizes() == std::array<int, 3>{1, 1, 1});
  CHECK(sub.edge_of == std::vector<int>{0});
}

TEST_CASE("link of a class keeps one edge per hosting hyperedge") {
  const auto f = fixtures::fano();
  const auto lk = link_of_class(f, 0);
  CHECK(lk.sides == std::array<int, 2>{1, 2});
  CHECK(lk.graph.edge_count() == 4);
  CHECK(lk.hosted == std::vector<int>{0, 1, 2, 3});
  CHECK(is_regular(lk.graph, 2));

  const std::vector<int> just_x{0};
  const auto partial = link(f, 1, just_x);
  CHECK(partial.sides == std::array<int, 2>{0, 2});
  CHECK(partial.graph.edge_count() == 2);
}

TEST_CASE("disjoint union shifts the second operand") {
  const auto two = disjoint_union(fixtures::fano(), fixtures::fano());
  CHECK(two.class_sizes() == std::array<int, 3>{4, 4, 4});
  CHECK(two.edge(4).v == std::array<int, 3>{2, 2, 2});
  CHECK(components(two).size() == 2);
}

TEST_CASE("matching and cover numbers of the Fano fixtures") {
  const auto f = fixtures::fano();
  CHECK(nu_exact(f).size == 1);
  CHECK(tau_exact(f).size == 2);
  const auto two = disjoint_union(f, f);
  CHECK(nu_exact(two).size == 2);
  CHECK(tau_exact(two).size == 4);
  const auto scaled = build({family::ScaledFano{3}});
  CHECK(nu_exact(scaled).size == 1);
  CHECK(tau_exact(scaled).size == 2);
}

TEST_CASE("witnesses are valid") {
  const auto h = build({family::Thm53Odd{5}});
  const auto m = nu_exact(h);
  CHECK(m.size == 3);
  CHECK(is_matching(h, m.edge_ids));
  const auto c = tau_exact(h);
  CHECK(is_cover(h, c.vertices));
  CHECK(static_cast<int>(c.vertices.size()) == c.size);
}

TEST_CASE("empty instances") {
  Tripartite3Graph h({0, 0, 0});
  CHECK(nu_exact(h).size == 0);
  CHECK(tau_exact(h).size == 0);
  BipartiteMultigraph g(3, 0);
  CHECK(nu_bip(g).size == 0);
  CHECK(tau_bip(g).size == 0);
}

TEST_CASE("cover search respects its vertex cap") {
  const auto h = build({family::Extremal{2, 8}});
  ExactLimits tight;
  tight.max_cover_vertices = 10;
  CHECK_THROWS_AS(tau_exact(h, tight), ResourceError);
  ExactLimits few;
  few.max_dedup_edges = 3;
  CHECK_THROWS_AS(nu_exact(h, few), ResourceError);
}

TEST_CASE("dedup keeps the smallest id per parallel class") {
  Tripartite3Graph h({1, 2, 1});
  h.add_edge(0, 1, 0);
  h.add_edge(0, 0, 0, 2);
  h.add_edge(0, 1, 0);
  CHECK(dedup_edge_ids(h) == std::vector<int>{0, 1});
}

TEST_CASE("bipartite matching equals cover on random multigraphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int nl = 1 + static_cast<int>(uniform_below(rng, 6));
    const int nr = 1 + static_cast<int>(uniform_below(rng, 6));
    const auto g = fixtures::random_bipartite(rng, nl, nr, static_cast<int>(uniform_below(rng, 12)));
    const auto m = nu_bip(g);
    const auto c = tau_bip(g);
    CHECK(m.size == c.size);
    CHECK(is_matching(g, m.edge_ids));
    CHECK(is_cover(g, c.vertices));
    if (g.edge_count() <= 12) CHECK(m.size == oracle::nu_bruteforce(g));
  }
}

TEST_CASE("exact matching and cover agree with exhaustive search") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::array<int, 3> sizes{1 + static_cast<int>(uniform_below(rng, 4)),
                                   1 + static_cast<int>(uniform_below(rng, 4)),
                                   1 + static_cast<int>(uniform_below(rng, 4))};
    const auto h = fixtures::random_tripartite(rng, sizes, static_cast<int>(uniform_below(rng, 12)));
    const auto nu = nu_exact(h).size;
    const auto tau = tau_exact(h).size;
    CHECK(nu == oracle::nu_bruteforce(h));
    CHECK(tau == oracle::tau_bruteforce(h));
    CHECK(nu <= tau);
    CHECK(tau <= 3 * nu);
  }
}
