#include "t3lab/constructions.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "t3lab/bounds.hpp"
#include "t3lab/errors.hpp"
#include "t3lab/structure.hpp"

namespace t3lab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Spec

void GadgetSpec::check() const {
  std::visit(Overloaded{
                 [](const family::Fano&) {},
                 [](const family::ScaledFano& f) { require(f.s >= 1, "scaled-fano needs s >= 1"); },
                 [](const family::Extremal& f) {
                   require(f.r >= 2 && f.r % 2 == 0, "extremal needs even r >= 2");
                   require(f.n >= 2 && f.n % 2 == 0, "extremal needs even n >= 2");
                 },
                 [](const family::Thm53Even& f) {
                   require(f.r >= 2 && f.r % 2 == 0, "thm53-even needs even r >= 2");
                 },
                 [](const family::Thm53Odd& f) {
                   require(f.r >= 3 && f.r % 2 == 1, "thm53-odd needs odd r >= 3");
                 },
                 [](const family::ParallelTriple& f) {
                   require(f.r >= 1, "parallel-triple needs r >= 1");
                 },
                 [](const family::RandomRegular& f) {
                   require(f.r >= 1 && f.n >= 1, "random-regular needs r >= 1 and n >= 1");
                 },
                 [](const family::Mixture& f) {
                   for (const auto& p : f.parts) p.check();
                 },
             },
             family);
}

std::string GadgetSpec::name() const {
  return std::visit(Overloaded{
                        [](const family::Fano&) { return std::string("fano"); },
                        [](const family::ScaledFano&) { return std::string("scaled-fano"); },
                        [](const family::Extremal&) { return std::string("extremal"); },
                        [](const family::Thm53Even&) { return std::string("thm53-even"); },
                        [](const family::Thm53Odd&) { return std::string("thm53-odd"); },
                        [](const family::ParallelTriple&) { return std::string("parallel-triple"); },
                        [](const family::RandomRegular&) { return std::string("random-regular"); },
                        [](const family::Mixture&) { return std::string("mixture"); },
                    },
                    family);
}

nlohmann::ordered_json to_json(const GadgetSpec& spec) {
  nlohmann::ordered_json j;
  j["family"] = spec.name();
  std::visit(Overloaded{
                 [](const family::Fano&) {},
                 [&](const family::ScaledFano& f) { j["s"] = f.s; },
                 [&](const family::Extremal& f) {
                   j["r"] = f.r;
                   j["n"] = f.n;
                 },
                 [&](const family::Thm53Even& f) { j["r"] = f.r; },
                 [&](const family::Thm53Odd& f) { j["r"] = f.r; },
                 [&](const family::ParallelTriple& f) { j["r"] = f.r; },
                 [&](const family::RandomRegular& f) {
                   j["r"] = f.r;
                   j["n"] = f.n;
                   j["seed"] = f.seed;
                 },
                 [&](const family::Mixture& f) {
                   auto parts = nlohmann::ordered_json::array();
                   for (const auto& p : f.parts) parts.push_back(to_json(p));
                   j["parts"] = std::move(parts);
                 },
             },
             spec.family);
  return j;
}

GadgetSpec spec_from_json(const nlohmann::ordered_json& j) {
  try {
    const std::string name = j.at("family").get<std::string>();
    GadgetSpec spec;
    if (name == "fano") {
      spec.family = family::Fano{};
    } else if (name == "scaled-fano") {
      spec.family = family::ScaledFano{j.at("s").get<int>()};
    } else if (name == "extremal") {
      spec.family = family::Extremal{j.at("r").get<int>(), j.at("n").get<int>()};
    } else if (name == "thm53-even") {
      spec.family = family::Thm53Even{j.at("r").get<int>()};
    } else if (name == "thm53-odd") {
      spec.family = family::Thm53Odd{j.at("r").get<int>()};
    } else if (name == "parallel-triple") {
      spec.family = family::ParallelTriple{j.at("r").get<int>()};
    } else if (name == "random-regular") {
      spec.family = family::RandomRegular{j.at("r").get<int>(), j.at("n").get<int>(),
                                          j.at("seed").get<std::uint64_t>()};
    } else if (name == "mixture") {
      family::Mixture m;
      for (const auto& p : j.at("parts")) m.parts.push_back(spec_from_json(p));
      spec.family = std::move(m);
    } else {
      throw InputError("unknown family '" + name + "'");
    }
    spec.check();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad gadget spec: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Randomness

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InputError("uniform_below: empty range");
  // Reject the low residue class so every value is equally likely.
  const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() - bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

bool is_simple(const Tripartite3Graph& h) {
  std::map<std::array<int, 3>, int> seen;
  for (const auto& e : h.edges()) {
    if (++seen[e.v] > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

// Adds shape-indexed edges of one copy whose vertices are base and base + 1
// in every class.
void add_shape(Tripartite3Graph& h, int base, const std::array<int, 3>& shape, int mult) {
  h.add_edge(base + shape[0], base + shape[1], base + shape[2], mult);
}

Tripartite3Graph build_thm53(int copies, int mult, bool even) {
  const int hub = 2 * copies;
  Tripartite3Graph h({hub + 1, hub + 1, hub + 1});
  for (int k = 0; k < copies; ++k) {
    const int base = 2 * k;
    for (const auto& shape : kFanoShapes) {
      int m = mult;
      if (even && shape == std::array<int, 3>{1, 1, 0}) m -= 1;
      if (!even && shape == std::array<int, 3>{0, 0, 0}) m += 1;
      if (m > 0) add_shape(h, base, shape, m);
    }
    // Hub edges through the three vertices left one short of full degree.
    const int third = even ? base : base + 1;
    h.add_edge(base + 1, hub, hub);
    h.add_edge(hub, base + 1, hub);
    h.add_edge(hub, hub, third);
  }
  if (!even) h.add_edge(hub, hub, hub);
  return h;
}

}  // namespace

Tripartite3Graph build(const GadgetSpec& spec) {
  spec.check();
  return std::visit(
      Overloaded{
          [](const family::Fano&) {
            Tripartite3Graph h({2, 2, 2});
            for (const auto& s : kFanoShapes) add_shape(h, 0, s, 1);
            return h;
          },
          [](const family::ScaledFano& f) {
            Tripartite3Graph h({2, 2, 2});
            for (const auto& s : kFanoShapes) add_shape(h, 0, s, f.s);
            return h;
          },
          [](const family::Extremal& f) {
            Tripartite3Graph h({f.n, f.n, f.n});
            for (int k = 0; k < f.n / 2; ++k) {
              for (const auto& s : kFanoShapes) add_shape(h, 2 * k, s, f.r / 2);
            }
            return h;
          },
          [](const family::Thm53Even& f) { return build_thm53(f.r / 2, f.r / 2, true); },
          [](const family::Thm53Odd& f) { return build_thm53((f.r - 1) / 2, (f.r - 1) / 2, false); },
          [](const family::ParallelTriple& f) {
            Tripartite3Graph h({1, 1, 1});
            h.add_edge(0, 0, 0, f.r);
            return h;
          },
          [](const family::RandomRegular& f) {
            Tripartite3Graph h({f.n, f.n, f.n});
            std::mt19937_64 rng(f.seed);
            for (int k = 0; k < f.r; ++k) {
              const auto to_b = random_permutation(rng, f.n);
              const auto to_c = random_permutation(rng, f.n);
              for (int a = 0; a < f.n; ++a) h.add_edge(a, to_b[a], to_c[a]);
            }
            return h;
          },
          [](const family::Mixture& f) {
            Tripartite3Graph h({0, 0, 0});
            for (const auto& p : f.parts) h = disjoint_union(h, build(p));
            return h;
          },
      },
      spec.family);
}

// ---------------------------------------------------------------------------
// Validation

namespace {

BoundReport claim(const std::string& name, bool ok, nlohmann::ordered_json witnesses = {}) {
  auto rep = BoundReport::make(name, ExtRational::of(Rational(ok ? 1 : 0)),
                               ExtRational::of(Rational(1)));
  if (!witnesses.empty()) rep.witnesses = std::move(witnesses);
  return rep;
}

BoundReport at_least(const std::string& name, Rational lhs, Rational rhs, ReportContext ctx = {}) {
  return BoundReport::make(name, ExtRational::of(lhs), ExtRational::of(rhs), ctx);
}

// nu >= (1 + 1/(22r - 77/3)) n/2 for regular instances without (r/2)F.
BoundReport fano_free_bound(int nu, int n, int r) {
  const Rational factor = 1 + 1 / (Rational(22 * r) - Rational(77, 3));
  return at_least("fano-free-nu", Rational(nu), factor * Rational(n, 2), {r, n, derived_epsilon(nu, n)});
}

void add_regular_reports(std::vector<BoundReport>& out, const Tripartite3Graph& h, int r, int n) {
  out.push_back(claim("class-sizes", h.class_sizes() == std::array<int, 3>{n, n, n},
                      {{"classes", h.class_sizes()}}));
  out.push_back(claim("regular", is_regular(h, r), {{"r", r}}));
}

}  // namespace

std::vector<BoundReport> validate(const GadgetSpec& spec, const Tripartite3Graph& h,
                                  const ExactLimits& limits) {
  spec.check();
  std::vector<BoundReport> out;
  std::visit(
      Overloaded{
          [&](const family::Fano&) {
            add_regular_reports(out, h, 2, 2);
            out.push_back(claim("nu", nu_exact(h, limits).size == 1));
          },
          [&](const family::ScaledFano& f) {
            add_regular_reports(out, h, 2 * f.s, 2);
            out.push_back(claim("nu", nu_exact(h, limits).size == 1));
          },
          [&](const family::Extremal& f) {
            add_regular_reports(out, h, f.r, f.n);
            const int nu = nu_exact(h, limits).size;
            out.push_back(claim("nu", nu == f.n / 2, {{"nu", nu}}));
            const auto scan = find_fano_components(h, f.r);
            out.push_back(claim("fano-components", static_cast<int>(scan.reports.size()) == f.n / 2,
                                {{"count", scan.reports.size()}}));
            for (int c = 0; c < 3; ++c) {
              const auto lk = link_of_class(h, c);
              const auto c4s = find_c4_components(lk.graph, f.r);
              std::size_t covered = 0;
              for (const auto& q : c4s) covered += q.edge_ids.size();
              out.push_back(claim("link-" + std::to_string(c) + "-c4-cover",
                                  static_cast<int>(c4s.size()) == f.n / 2 &&
                                      covered == lk.graph.edge_count(),
                                  {{"c4s", c4s.size()}}));
            }
          },
          [&](const family::Thm53Even& f) {
            const int n = f.r + 1;
            add_regular_reports(out, h, f.r, n);
            const int nu = nu_exact(h, limits).size;
            out.push_back(claim("fano-components", find_fano_components(h, f.r).reports.empty()));
            out.push_back(claim("fano-subcopy-free", !find_fano_subcopy(h, f.r / 2).has_value()));
            out.push_back(at_least("nu-upper", Rational(f.r / 2 + 1), Rational(nu)));
            out.push_back(at_least("nu-lower", Rational(nu), Rational(n, 2)));
            if (f.r <= 4) out.push_back(claim("nu-exact", nu == f.r / 2 + 1, {{"nu", nu}}));
            out.push_back(fano_free_bound(nu, n, f.r));
          },
          [&](const family::Thm53Odd& f) {
            const int n = f.r;
            add_regular_reports(out, h, f.r, n);
            const int nu = nu_exact(h, limits).size;
            out.push_back(at_least("nu-upper", Rational((f.r - 1) / 2 + 1), Rational(nu)));
            out.push_back(at_least("nu-lower", Rational(nu), Rational(n, 2)));
            if (f.r <= 5) out.push_back(claim("nu-exact", nu == (f.r + 1) / 2, {{"nu", nu}}));
            out.push_back(fano_free_bound(nu, n, f.r));
          },
          [&](const family::ParallelTriple& f) {
            add_regular_reports(out, h, f.r, 1);
            out.push_back(claim("nu", nu_exact(h, limits).size == 1));
          },
          [&](const family::RandomRegular& f) {
            add_regular_reports(out, h, f.r, f.n);
            const int nu = nu_exact(h, limits).size;
            out.push_back(at_least("nu-lower", Rational(nu), Rational(ceil(Rational(f.n, 2)))));
          },
          [&](const family::Mixture& f) {
            std::array<int, 3> sizes{0, 0, 0};
            for (const auto& p : f.parts) {
              const auto part = build(p);
              for (int c = 0; c < 3; ++c) sizes[c] += part.class_size(c);
              for (auto& rep : validate(p, part, limits)) {
                rep.name = p.name() + "/" + rep.name;
                out.push_back(std::move(rep));
              }
            }
            out.push_back(claim("class-sizes", h.class_sizes() == sizes));
          },
      },
      spec.family);
  return out;
}

}  // namespace t3lab
