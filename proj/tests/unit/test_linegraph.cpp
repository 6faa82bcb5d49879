#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "t3lab/bounds.hpp"
#include "t3lab/errors.hpp"
#include "t3lab/linegraph.hpp"
#include "t3lab/structure.hpp"

using namespace t3lab;

TEST_CASE("full line graph") {
  const auto j = full_line(fixtures::path(3));
  CHECK(j.vertex_count() == 3);
  CHECK(j.adjacencies().size() == 2);
  CHECK(j.has(Adjacency::of(1, 0)));
  CHECK_FALSE(j.has(Adjacency{0, 2}));
  const auto parallel = full_line(fixtures::bmg(1, 1, {{0, 0}, {0, 0}}));
  CHECK(parallel.has(Adjacency{0, 1}));
}

TEST_CASE("subgraph validation") {
  auto host = std::make_shared<const BipartiteMultigraph>(fixtures::path(3));
  CHECK_THROWS_AS(LineSubgraph(host, {0, 5}, {}), InputError);
  // 0 and 2 are disjoint edges, so they cannot be adjacent in L(G).
  CHECK_THROWS_AS(LineSubgraph(host, {0, 2}, {Adjacency{0, 2}}), InputError);
  CHECK_THROWS_AS(LineSubgraph(host, {0}, {Adjacency{0, 1}}), InputError);
}

TEST_CASE("explosion removes both ends and their neighbours") {
  const auto g = fixtures::cycle(5);
  const auto j = full_line(g);
  const auto x = explode(j, Adjacency{0, 1});
  CHECK(x.vertex_count() == 6);
  CHECK_FALSE(x.contains(0));
  CHECK(x.contains(3));
  const auto d = delete_adjacency(j, Adjacency{0, 1});
  CHECK(d.vertex_count() == 10);
  CHECK_FALSE(d.has(Adjacency{0, 1}));
  CHECK_THROWS_AS(delete_adjacency(j, Adjacency{0, 5}), InputError);
}

TEST_CASE("G_J keeps host vertices and maps ids back") {
  const auto j = explode(full_line(fixtures::cycle(5)), Adjacency{0, 1});
  const auto gj = g_of(j);
  CHECK(gj.graph.left_size() == 5);
  CHECK(gj.graph.edge_count() == 6);
  CHECK(gj.edge_of.front() == j.vertices().front());
  CHECK(nu_of(j) == 3);
}

TEST_CASE("reduction never raises eta and leaves no decouplable adjacency") {
  EtaEvaluator ev;
  const auto fn = ev.as_fn();
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = fixtures::random_bipartite(rng, 3, 3, 2 + static_cast<int>(rng() % 6));
    const auto j = full_line(g);
    const auto red = reduce(j, fn);
    CHECK(eta_le(red.eta_after, red.eta_before));
    CHECK(red.eta_after == eta_of(red.result, fn));
    for (const auto& a : red.result.adjacencies()) CHECK_FALSE(is_decouplable(red.result, a, fn));
    const auto shuffled = reduce_shuffled(j, fn, trial);
    CHECK(eta_le(shuffled.eta_after, red.eta_before));
    for (const auto& a : shuffled.result.adjacencies()) {
      CHECK_FALSE(is_decouplable(shuffled.result, a, fn));
    }
  }
}

TEST_CASE("a reduced subgraph with infinite eta has no adjacencies") {
  EtaEvaluator ev;
  const auto red = reduce(full_line(fixtures::path(4)), ev.as_fn());
  CHECK(red.eta_after.is_infinite());
  CHECK(red.result.adjacencies().empty());
}

TEST_CASE("explosion sequence on the ten-cycle meets the bound") {
  EtaEvaluator ev;
  const auto g = fixtures::cycle(5);
  const auto cert = explosion_sequence(g, 2, ev.as_fn());
  CHECK(cert.nu == 5);
  CHECK(cert.edges == 10);
  CHECK(cert.t == cert.x1 + cert.x2 + 2 * cert.x3);
  CHECK(cert.bound() == Rational(3));
  CHECK(cert.bound_applies());
  CHECK(Rational(cert.t) >= cert.bound());
  CHECK(Rational(cert.t) >= lp_min(cert.nu, cert.edges, 2).t);
  const auto end = replay(g, cert);
  CHECK(end.adjacencies().empty());
  const auto j = to_json(cert);
  CHECK(j["steps"].size() == cert.steps.size());
  CHECK(j["bound"] == "3");
}

TEST_CASE("explosion sequence preconditions") {
  EtaEvaluator ev;
  CHECK_THROWS_AS(explosion_sequence(fixtures::cycle(2), 2, ev.as_fn()), InputError);
  CHECK_THROWS_AS(explosion_sequence(fixtures::cycle(5), 1, ev.as_fn()), InputError);
  CHECK_THROWS_AS(explosion_sequence(fixtures::bmg(1, 3, {{0, 0}, {0, 1}, {0, 2}}), 2, ev.as_fn()),
                  InputError);
}

TEST_CASE("certificates lower-bound eta on random C4-free instances") {
  std::mt19937_64 rng(21);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 40; ++trial) {
    const auto g = fixtures::random_bipartite(rng, 4, 4, 2 + static_cast<int>(rng() % 7));
    if (g.max_degree() > 3 || has_c4_component(g, 3)) continue;
    EtaEvaluator ev;
    const auto cert = explosion_sequence(g, 3, ev.as_fn());
    const auto e = eta(full_line(g).to_simple_graph());
    CHECK(eta_le(EtaValue::finite(cert.t), e));
    if (!cert.infinite) CHECK(Rational(cert.t) >= lp_min(cert.nu, cert.edges, 3).t);
    CHECK(replay(g, cert).adjacencies().empty());
    ++done;
  }
  CHECK(done >= 40);
}

TEST_CASE("pair typing on the ten-cycle") {
  EtaEvaluator ev;
  const auto fn = ev.as_fn();
  const auto red = reduce(full_line(fixtures::cycle(5)), fn);
  int typed = 0;
  for (const auto& a : red.result.adjacencies()) {
    if (!is_explodable(red.result, a, fn)) continue;
    const auto c = classify_pair(red.result, a, 2, fn);
    if (c.type == ExplosionType::Untyped) continue;
    if (c.type == ExplosionType::Type3) {
      CHECK(c.followup.has_value());
      CHECK(c.total_nu_drop <= 3);
    }
    ++typed;
  }
  CHECK(typed > 0);
  CHECK(type_index(ExplosionType::Type2) == 2);
}
