#include <doctest.h>

#include <cstdlib>
#include <random>

#include "fixtures.hpp"
#include "t3lab/errors.hpp"
#include "t3lab/linegraph.hpp"
#include "t3lab/oracle.hpp"

using namespace t3lab;
using namespace t3lab::oracle;

TEST_CASE("brute-force matching and cover") {
  const auto f = fixtures::fano();
  CHECK(nu_bruteforce(f) == 1);
  CHECK(tau_bruteforce(f) == 2);
  const auto two = disjoint_union(f, f);
  CHECK(nu_bruteforce(two) == 2);
  CHECK(tau_bruteforce(two) == 4);
  CHECK(nu_bruteforce(Tripartite3Graph({0, 0, 0})) == 0);
  CHECK(nu_bruteforce(build({family::Thm53Odd{3}})) == 2);
  Tripartite3Graph single({1, 1, 1});
  single.add_edge(0, 0, 0);
  CHECK(tau_bruteforce(single) == 1);
}

TEST_CASE("budgets are enforced") {
  OracleBudget small;
  small.max_edges = 3;
  small.max_vertices = 5;
  small.max_complex_vertices = 4;
  CHECK_THROWS_AS(nu_bruteforce(fixtures::fano(), small), ResourceError);
  CHECK_THROWS_AS(tau_bruteforce(fixtures::fano(), small), ResourceError);
  CHECK_THROWS_AS(eta_bruteforce(fixtures::simple_cycle(5), small), ResourceError);
}

TEST_CASE("budget parsing") {
  const auto b = parse_budget("vertices=20,edges=14,complex=12,dim=10");
  CHECK(b.max_vertices == 20);
  CHECK(b.max_edges == 14);
  CHECK(b.max_complex_vertices == 12);
  CHECK(b.max_dim == 10);
  CHECK(parse_budget("edges=5").max_vertices == OracleBudget{}.max_vertices);
  CHECK_THROWS_AS(parse_budget("edges=0"), InputError);
  CHECK_THROWS_AS(parse_budget("colour=3"), InputError);
  CHECK_THROWS_AS(parse_budget("edges=x"), InputError);
  CHECK_THROWS_AS(parse_budget("edges"), InputError);
}

TEST_CASE("budget from the environment") {
  ::setenv("T3LAB_BUDGET", "edges=7", 1);
  CHECK(budget_from_env().max_edges == 7);
  ::unsetenv("T3LAB_BUDGET");
  CHECK(budget_from_env().max_edges == OracleBudget{}.max_edges);
}

TEST_CASE("integral homology reference") {
  CHECK(eta_bruteforce(full_line(fixtures::path(3)).to_simple_graph()).eta == EtaValue::finite(1));
  CHECK(eta_bruteforce(full_line(fixtures::cycle(5)).to_simple_graph()).eta == EtaValue::finite(3));
  CHECK(eta_bruteforce(SimpleGraph(1)).eta.is_infinite());
  CHECK(eta_bruteforce(SimpleGraph(0)).eta == EtaValue::finite(0));
  const auto p4 = eta_bruteforce(fixtures::simple_path(4));
  CHECK(p4.eta.is_infinite());
  CHECK_FALSE(p4.flagged);
  CHECK_FALSE(p4.torsion);
}

TEST_CASE("collapses") {
  CHECK(collapses_to_point(SimpleGraph(1)));
  CHECK(collapses_to_point(fixtures::simple_path(4)));
  CHECK(collapses_to_point(fixtures::simple_path(7)));
  CHECK_FALSE(collapses_to_point(fixtures::simple_cycle(4)));
  CHECK_FALSE(collapses_to_point(fixtures::simple_path(5)));
}

TEST_CASE("main eta agrees with the integral reference on random graphs") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = fixtures::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.3);
    const auto ref = eta_bruteforce(g);
    if (ref.torsion || ref.flagged) continue;
    CHECK(ref.eta == eta(g));
  }
}
