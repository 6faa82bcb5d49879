#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "t3lab/bounds.hpp"
#include "t3lab/constructions.hpp"
#include "t3lab/errors.hpp"

using namespace t3lab;

TEST_CASE("LP optimum on sample inputs") {
  // Reference optima from solving every tight 3x3 subsystem exactly.
  CHECK(lp_min(5, 10, 2).t == Rational(3));
  CHECK(lp_min(1, 8, 2).t == Rational(2));
  CHECK(lp_min(3, 7, 3).t == Rational(3, 2));
  CHECK(lp_min(4, 20, 5).t == Rational(48, 23));
  CHECK(lp_min(0, 0, 2).t == Rational(0));
  CHECK(lp_min(2, 0, 4).t == Rational(1));
}

TEST_CASE("closed form inside the window") {
  const auto s = lp_min(5, 10, 2);
  CHECK(s.closed_form_applies);
  CHECK(s.closed_form_t == s.t);
  CHECK(s.x1 == 0);
  CHECK(s.gap == 0);
  const auto out = lp_min(1, 8, 2);
  CHECK_FALSE(out.closed_form_applies);
  CHECK(out.t > out.closed_form_t);
}

TEST_CASE("LP rejects bad parameters") {
  CHECK_THROWS_AS(lp_min(1, 1, 1), InputError);
  CHECK_THROWS_AS(lp_min(-1, 1, 2), InputError);
}

TEST_CASE("LP duality has zero gap across a grid") {
  for (int r = 2; r <= 6; ++r) {
    for (int nu = 0; nu <= 10; ++nu) {
      for (int v = 0; v <= 4 * r * nu + 3; ++v) {
        const auto s = lp_min(nu, v, r);
        CHECK(s.gap == 0);
        CHECK(primal_feasible(s, nu, v, r));
        CHECK(dual_feasible(s.y1, s.y2, r));
        // The certificate is dual feasible, so it bounds the optimum.
        CHECK(s.t >= s.closed_form_t);
      }
    }
  }
}

TEST_CASE("derived epsilon") {
  CHECK(derived_epsilon(2, 3) == Rational(1, 3));
  CHECK(derived_epsilon(1, 2) == 0);
  CHECK(derived_epsilon(1, 4) == 0);
  CHECK(derived_epsilon(0, 0) == 0);
}

TEST_CASE("cover at most twice the matching") {
  const auto rep = check_thm_1_3(fixtures::fano());
  CHECK(rep.pass);
  CHECK(rep.lhs.value == 2);
  CHECK(rep.rhs.value == 2);
}

TEST_CASE("regular matching bound") {
  CHECK(check_thm_1_2(build({family::Thm53Odd{3}}), 3).pass);
  CHECK_THROWS_AS(check_thm_1_2(fixtures::fano(), 3), InputError);
}

TEST_CASE("line graph bounds on a path, a cycle and their union") {
  EtaEvaluator ev;
  const auto fn = ev.as_fn();
  for (const auto& g : {fixtures::path(3), fixtures::cycle(5),
                        disjoint_union(fixtures::path(3), fixtures::cycle(5))}) {
    const auto rep = check_thm_3_1(g, full_line(g), 2, fn);
    CHECK(rep.pass);
    CHECK(rep.lhs == rep.rhs);
    CHECK(check_cor_3_8(g, 2, fn).pass);
    CHECK(check_thm_2_5(g, fn).pass);
  }
  CHECK_THROWS_AS(check_thm_3_1(fixtures::cycle(2), full_line(fixtures::cycle(2)), 2, fn),
                  InputError);
  const auto with_c4 = disjoint_union(fixtures::cycle(2), fixtures::cycle(5));
  const auto cor = check_cor_3_8(with_c4, 2, fn);
  CHECK(cor.pass);
  CHECK(cor.witnesses["c4_components"] == 1);
}

TEST_CASE("Hall-type witness") {
  EtaEvaluator ev;
  const auto w = hall_witness(fixtures::fano(), 0, ev.as_fn());
  CHECK(w.class_size == 2);
  CHECK(w.nu == 1);
  CHECK(w.nu >= w.class_size - std::max(w.defect, 0));
  CHECK(check_thm_2_2(fixtures::fano(), 1, ev.as_fn()).pass);
  CHECK_THROWS_AS(check_thm_2_2(fixtures::fano(), 3, ev.as_fn()), InputError);
}

TEST_CASE("Hall-type inequality on random instances") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    EtaEvaluator ev;
    const auto h = fixtures::random_tripartite(rng, {3, 3, 3}, 1 + static_cast<int>(rng() % 7));
    CHECK(check_thm_2_2(h, static_cast<int>(rng() % 3), ev.as_fn()).pass);
  }
}

TEST_CASE("stability bound on the extremal family and mixtures") {
  for (int n = 2; n <= 8; n += 2) {
    const auto h = build({family::Extremal{2, n}});
    const auto rep = check_thm_4_1(h, 2);
    CHECK(rep.pass);
    CHECK(rep.lhs.value == Rational(n / 2));
  }
  family::Mixture m;
  m.parts = {{family::Fano{}}, {family::Fano{}}, {family::ParallelTriple{2}}};
  const auto h = build({m});
  CHECK(check_thm_4_1(h, 2).pass);
  CHECK(check_lemma_4_2(h, 2).pass);
  CHECK_THROWS_AS(check_thm_4_1(fixtures::complete_222(), 2), InputError);
}

TEST_CASE("A/B/C transform trims heavy class-0 vertices") {
  Tripartite3Graph h({2, 2, 2});
  for (const auto& s : kFanoShapes) h.add_edge(s[0], s[1], s[2]);
  h.add_edge(0, 0, 1);  // vertex 0 of class 0 reaches degree 3
  CHECK(abc_degree_conditions(h, 2) == false);  // class 2 vertex 1 has degree 3
  Tripartite3Graph g({2, 3, 3});
  for (const auto& s : kFanoShapes) g.add_edge(s[0], s[1], s[2]);
  g.add_edge(0, 2, 2);
  REQUIRE(abc_degree_conditions(g, 2));
  const auto tr = thm_4_2_transform(g, 2);
  CHECK(tr.trimmed.edge_count() == 4);
  CHECK(check_thm_4_2(g, 2).pass);
}

TEST_CASE("perfect-matching components are replaced by parallel copies") {
  const auto k = fixtures::pm_component_four();
  const auto tr = thm_4_2_transform(k, 2);
  CHECK(tr.replaced_components == 1);
  CHECK(tr.transformed.edge_count() == 8);
  CHECK(is_regular(tr.transformed, 2));
}

TEST_CASE("C4 count in the class-0 link") {
  const auto rep = check_lemma_4_2(build({family::Extremal{4, 4}}), 4);
  CHECK(rep.pass);
  CHECK(rep.lhs.value == 2);
  CHECK(check_lemma_4_2(build({family::Thm53Even{2}}), 2).vacuous);
}

TEST_CASE("dichotomy and classification reports") {
  const auto a = check_lemma_4_3(build({family::Extremal{2, 4}}), 2);
  CHECK(a.pass);
  CHECK(a.rhs.value == 6);
  const auto one = check_lemma_4_5(fixtures::complete_222(), 4);
  CHECK(one.pass);
  CHECK_FALSE(one.vacuous);
  const auto two = check_lemma_4_5(fixtures::pm_component_four(), 2);
  CHECK(two.pass);
  CHECK_FALSE(two.vacuous);
}

TEST_CASE("report JSON shape") {
  const auto j = to_json(check_thm_1_3(fixtures::fano()));
  CHECK(j["name"] == "thm-1.3");
  CHECK(j["lhs"] == "2");
  CHECK(j["pass"] == true);
  CHECK_FALSE(j.contains("vacuous"));
}
