#include <doctest.h>

#include "fixtures.hpp"
#include "t3lab/bounds.hpp"
#include "t3lab/constructions.hpp"
#include "t3lab/errors.hpp"
#include "t3lab/io.hpp"
#include "t3lab/structure.hpp"

using namespace t3lab;

namespace {

void all_claims_hold(const GadgetSpec& spec) {
  const auto h = build(spec);
  for (const auto& rep : validate(spec, h)) {
    INFO(spec.name() << " " << rep.name);
    CHECK(rep.pass);
  }
}

}  // namespace

TEST_CASE("F has the four shapes") {
  const auto f = build({family::Fano{}});
  REQUIRE(f.edge_count() == 4);
  CHECK(f.edge(1).v == std::array<int, 3>{0, 1, 1});
  CHECK(is_regular(f, 2));
  CHECK(nu_exact(f).size == 1);
}

TEST_CASE("scaled and parallel families") {
  const auto s = build({family::ScaledFano{3}});
  CHECK(s.edge_count() == 12);
  CHECK(is_regular(s, 6));
  const auto p = build({family::ParallelTriple{4}});
  CHECK(p.edge_count() == 4);
  CHECK(nu_exact(p).size == 1);
}

TEST_CASE("even gadget") {
  const auto h = build({family::Thm53Even{2}});
  CHECK(h.class_sizes() == std::array<int, 3>{3, 3, 3});
  CHECK(h.edge_count() == 6);
  CHECK(is_regular(h, 2));
  CHECK(nu_exact(h).size == 2);
  const auto h4 = build({family::Thm53Even{4}});
  CHECK(h4.edge_count() == 20);
  CHECK(is_regular(h4, 4));
  CHECK(nu_exact(h4).size == 3);
}

TEST_CASE("even gadget degrees before the hub edges") {
  for (int r : {2, 4, 6}) {
    const auto h = build({family::Thm53Even{r}});
    // Each copy's edges are followed by its three hub edges; drop those.
    std::vector<int> keep;
    const int copies = r / 2;
    int id = 0;
    for (int k = 0; k < copies; ++k) {
      for (int e = 0; e < 4 * (r / 2) - 1; ++e) keep.push_back(id++);
      id += 3;
    }
    const auto without = h.with_edges(keep);
    int short_by_one = 0;
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < r; ++i) short_by_one += without.degree(c, i) == r - 1;
    CHECK(short_by_one == 3 * copies);
    CHECK(is_regular(h, r));
    CHECK(h.degree(0, r) == r);
  }
}

TEST_CASE("odd gadget") {
  const auto h = build({family::Thm53Odd{3}});
  CHECK(h.class_sizes() == std::array<int, 3>{3, 3, 3});
  CHECK(is_regular(h, 3));
  CHECK(nu_exact(h).size == 2);
  CHECK(find_fano_components(h, 3).reports.empty());
  const auto h5 = build({family::Thm53Odd{5}});
  CHECK(is_regular(h5, 5));
  CHECK(nu_exact(h5).size == 3);
}

TEST_CASE("random regular instances") {
  const GadgetSpec spec{family::RandomRegular{2, 5, 7}};
  const auto h = build(spec);
  CHECK(h.class_sizes() == std::array<int, 3>{5, 5, 5});
  CHECK(is_regular(h, 2));
  CHECK(io::dump_t3g(h) == io::dump_t3g(build(spec)));
  CHECK(io::dump_t3g(h) != io::dump_t3g(build({family::RandomRegular{2, 5, 8}})));
}

TEST_CASE("every family validates") {
  all_claims_hold({family::Fano{}});
  all_claims_hold({family::ScaledFano{2}});
  all_claims_hold({family::Extremal{2, 4}});
  all_claims_hold({family::Extremal{4, 6}});
  all_claims_hold({family::Thm53Even{2}});
  all_claims_hold({family::Thm53Even{4}});
  all_claims_hold({family::Thm53Even{6}});
  all_claims_hold({family::Thm53Odd{3}});
  all_claims_hold({family::Thm53Odd{5}});
  all_claims_hold({family::ParallelTriple{3}});
  for (std::uint64_t seed = 0; seed < 10; ++seed) all_claims_hold({family::RandomRegular{3, 5, seed}});
  family::Mixture m;
  m.parts = {{family::Fano{}}, {family::ParallelTriple{2}}};
  all_claims_hold({m});
}

TEST_CASE("extremal family: fano count and exact matching number") {
  const GadgetSpec spec{family::Extremal{2, 4}};
  const auto h = build(spec);
  CHECK(find_fano_components(h, 2).reports.size() == 2);
  CHECK(nu_exact(h).size == 2);
}

TEST_CASE("the even gadget satisfies the Fano-free lower bound exactly as computed") {
  const GadgetSpec spec{family::Thm53Even{2}};
  const auto reps = validate(spec, build(spec));
  const auto it = std::find_if(reps.begin(), reps.end(),
                               [](const BoundReport& r) { return r.name == "fano-free-nu"; });
  REQUIRE(it != reps.end());
  CHECK(it->rhs.value == Rational(87, 55));
  CHECK(it->lhs.value == 2);
}

TEST_CASE("parameter domains") {
  CHECK_THROWS_AS(build({family::ScaledFano{0}}), InputError);
  CHECK_THROWS_AS(build({family::Extremal{3, 4}}), InputError);
  CHECK_THROWS_AS(build({family::Extremal{2, 3}}), InputError);
  CHECK_THROWS_AS(build({family::Thm53Even{3}}), InputError);
  CHECK_THROWS_AS(build({family::Thm53Odd{4}}), InputError);
  CHECK_THROWS_AS(build({family::Thm53Odd{1}}), InputError);
  CHECK_THROWS_AS(build({family::RandomRegular{0, 3, 1}}), InputError);
  CHECK_THROWS_AS(build({family::RandomRegular{2, 0, 1}}), InputError);
}

TEST_CASE("spec JSON round trip") {
  family::Mixture m;
  m.parts = {{family::Extremal{2, 4}}, {family::RandomRegular{3, 4, 99}}};
  const GadgetSpec spec{m};
  const auto j = to_json(spec);
  CHECK(j["family"] == "mixture");
  const auto back = spec_from_json(j);
  CHECK(to_json(back) == j);
  CHECK_THROWS_AS(spec_from_json(nlohmann::ordered_json{{"family", "nope"}}), InputError);
  CHECK_THROWS_AS(spec_from_json(nlohmann::ordered_json{{"family", "extremal"}}), InputError);
}

TEST_CASE("uniform sampling and permutations") {
  std::mt19937_64 rng(1);
  std::array<int, 5> counts{};
  for (int i = 0; i < 5000; ++i) ++counts[uniform_below(rng, 5)];
  for (int c : counts) CHECK(c > 800);
  CHECK_THROWS_AS(uniform_below(rng, 0), InputError);
  auto p = random_permutation(rng, 9);
  std::sort(p.begin(), p.end());
  for (int i = 0; i < 9; ++i) CHECK(p[i] == i);
  CHECK(random_permutation(rng, 0).empty());
}

TEST_CASE("simplicity") {
  CHECK(is_simple(build({family::Fano{}})));
  CHECK_FALSE(is_simple(build({family::ScaledFano{2}})));
}
