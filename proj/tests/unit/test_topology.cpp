#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "t3lab/errors.hpp"
#include "t3lab/linegraph.hpp"
#include "t3lab/topology.hpp"

using namespace t3lab;

namespace {

EtaValue eta_with(const SimpleGraph& g, Coefficients c, int cap = 8) {
  EtaOptions o;
  o.coeff = c;
  o.cap = cap;
  return eta(g, o);
}

const Coefficients kAll[] = {Coefficients::Rational, Coefficients::Binary, Coefficients::Integer};

}  // namespace

TEST_CASE("graph moves") {
  auto g = fixtures::simple_path(5);
  CHECK(g.edge_count() == 4);
  CHECK_FALSE(g.without_edge(1, 2).adjacent(1, 2));
  // Exploding 1-2 removes 0..3 and leaves vertex 4.
  const auto x = g.exploded(1, 2);
  CHECK(x.order() == 1);
  CHECK(x.has_isolated_vertex());
  CHECK(g.component_masks().size() == 1);
  CHECK(fixtures::simple(4, {{0, 1}}).component_masks().size() == 3);
}

TEST_CASE("eta of cycles and paths") {
  // Values from exact rational and GF(2) homology of the enumerated complexes.
  const int cycle_eta[] = {0, 0, 0, 1, 1, 2, 2, 2, 3, 3, 3, 4};
  for (int n = 3; n <= 11; ++n) {
    for (auto c : kAll) CHECK(eta_with(fixtures::simple_cycle(n), c) == EtaValue::finite(cycle_eta[n]));
  }
  const EtaValue inf = EtaValue::infinite();
  const EtaValue path_eta[] = {EtaValue::finite(0), inf, EtaValue::finite(1), EtaValue::finite(1),
                               inf, EtaValue::finite(2), EtaValue::finite(2), inf,
                               EtaValue::finite(3), EtaValue::finite(3)};
  for (int n = 0; n <= 9; ++n) {
    for (auto c : kAll) CHECK(eta_with(fixtures::simple_path(n), c) == path_eta[n]);
  }
}

TEST_CASE("eta of small named graphs") {
  SimpleGraph k33(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  CHECK(eta(k33) == EtaValue::finite(1));

  SimpleGraph k4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
  CHECK(eta(k4) == EtaValue::finite(1));

  SimpleGraph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  for (auto c : kAll) CHECK(eta_with(petersen, c) == EtaValue::finite(3));
}

TEST_CASE("line graphs of a short path and a long cycle") {
  CHECK(eta(full_line(fixtures::path(3)).to_simple_graph()) == EtaValue::finite(1));
  CHECK(eta(full_line(fixtures::cycle(5)).to_simple_graph()) == EtaValue::finite(3));
  CHECK(eta(full_line(fixtures::cycle(2)).to_simple_graph()) == EtaValue::finite(1));
  const auto both = disjoint_union(fixtures::path(3), fixtures::cycle(5));
  for (auto c : kAll) CHECK(eta_with(full_line(both).to_simple_graph(), c) == EtaValue::finite(4));
}

TEST_CASE("eta is additive over disjoint unions") {
  const auto c5 = fixtures::simple_cycle(5);
  CHECK(eta(disjoint_union(c5, c5)) == EtaValue::finite(4));
  CHECK(eta(disjoint_union(c5, fixtures::simple_path(4))) == EtaValue::infinite());
  CHECK(eta_with(disjoint_union(c5, c5), Coefficients::Integer) == EtaValue::finite(4));
}

TEST_CASE("the cap turns large answers into lower bounds") {
  const auto c11 = fixtures::simple_cycle(11);
  CHECK(eta_with(c11, Coefficients::Rational, 3) == EtaValue::at_least(3));
  CHECK(eta_with(c11, Coefficients::Rational, 4) == EtaValue::at_least(4));
  CHECK(eta_with(c11, Coefficients::Rational, 5) == EtaValue::finite(4));
  CHECK(eta_with(fixtures::simple_cycle(4), Coefficients::Rational, 1) == EtaValue::at_least(1));
}

TEST_CASE("vertex limit") {
  EtaOptions o;
  o.max_vertices = 6;
  CHECK_THROWS_AS(eta(fixtures::simple_cycle(7), o), ResourceError);
  // Per component over a field.
  CHECK(eta(disjoint_union(fixtures::simple_cycle(5), fixtures::simple_cycle(5)), o) ==
        EtaValue::finite(4));
}

TEST_CASE("extended order") {
  const auto f2 = EtaValue::finite(2);
  CHECK(eta_le(f2, EtaValue::finite(3)));
  CHECK(eta_le(f2, EtaValue::infinite()));
  CHECK_FALSE(eta_le(EtaValue::infinite(), f2));
  CHECK(eta_le(f2, EtaValue::at_least(2)));
  CHECK_FALSE(eta_le(EtaValue::at_least(3), f2));
  CHECK_THROWS_AS(eta_le(EtaValue::at_least(2), EtaValue::finite(4)), ResourceError);
  CHECK(eta_sum(f2, EtaValue::finite(1)) == EtaValue::finite(3));
  CHECK(eta_sum(f2, EtaValue::infinite()).is_infinite());
  CHECK(eta_sum(f2, EtaValue::at_least(3)) == EtaValue::at_least(5));
  CHECK(to_string(EtaValue::at_least(4)) == ">=4");
  CHECK(to_json(EtaValue::infinite()) == "infinite");
}

TEST_CASE("coefficient names") {
  CHECK(parse_coefficients("f2") == Coefficients::Binary);
  CHECK(parse_coefficients("z") == Coefficients::Integer);
  CHECK_THROWS_AS(parse_coefficients("r"), InputError);
}

TEST_CASE("homology profile of the ten-cycle") {
  const auto p = reduced_homology(fixtures::simple_cycle(10), Coefficients::Integer, 6);
  CHECK(p.face_counts == std::vector<std::int64_t>{10, 35, 50, 25, 2});
  CHECK(p.betti == std::vector<std::int64_t>{0, 0, 1, 0, 0});
  CHECK(p.complete());
  CHECK(p.nonvanishing(2));
  CHECK_FALSE(p.nonvanishing(1));
}

TEST_CASE("decouplable and explodable adjacencies") {
  EtaEvaluator ev;
  const auto fn = ev.as_fn();
  const auto p4 = fixtures::simple_path(4);  // eta infinite
  // Every deletion is decouplable when eta is infinite.
  CHECK(is_decouplable(p4, 1, 2, fn));
  const auto c4 = fixtures::simple_cycle(4);  // eta 1; deleting an edge leaves a path
  CHECK_FALSE(is_decouplable(c4, 0, 1, fn));
  CHECK(is_explodable(c4, 0, 1, fn));
  SimpleGraph k4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
  CHECK(is_decouplable(k4, 0, 1, fn));
  const auto c5 = fixtures::simple_cycle(5);  // eta 2; explosion leaves a vertex
  CHECK_FALSE(is_explodable(c5, 0, 1, fn));
  CHECK(ev.cache_size() > 0);
}

TEST_CASE("Meshulam game bound on cycles and paths") {
  for (int n = 3; n <= 10; ++n) {
    const auto g = fixtures::simple_cycle(n);
    CHECK(meshulam_game_lb(g) == eta(g));
  }
  CHECK(meshulam_game_lb(fixtures::simple_path(7)).is_infinite());
  CHECK(meshulam_game_lb(SimpleGraph(0)) == EtaValue::finite(0));
}

TEST_CASE("Meshulam game bound never exceeds eta") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto g = fixtures::random_graph(rng, n, 0.4);
    const auto lb = meshulam_game_lb(g);
    CHECK(eta_le(lb, eta(g)));
  }
}

TEST_CASE("Meshulam state cap") {
  MeshulamOptions o;
  o.max_states = 10;
  CHECK_THROWS_AS(meshulam_game_lb(fixtures::simple_cycle(10), o), ResourceError);
}

TEST_CASE("rational, binary and integer coefficients agree without torsion") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const auto g = fixtures::random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.35);
    const auto q = eta_with(g, Coefficients::Rational);
    CHECK(q == eta_with(g, Coefficients::Binary));
    CHECK(q == eta_with(g, Coefficients::Integer));
  }
}
