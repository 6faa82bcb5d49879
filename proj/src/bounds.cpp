#include "t3lab/bounds.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "t3lab/errors.hpp"
#include "t3lab/structure.hpp"

namespace t3lab {

// ---------------------------------------------------------------------------
// LP

namespace {

struct Point3 {
  Rational x1, x2, x3;
};

std::array<Rational, 3> weights(int r) {
  return {Rational(3 * r - 2), Rational(2 * r - 1), Rational(6 * r - 5)};
}

constexpr std::array<int, 3> kMatchingWeight{1, 2, 3};
constexpr std::array<int, 3> kCost{1, 1, 2};

bool feasible(const std::array<Rational, 3>& x, int nu, int v, int r) {
  const auto w = weights(r);
  Rational lhs_nu{0};
  Rational lhs_v{0};
  for (int i = 0; i < 3; ++i) {
    if (x[i] < 0) return false;
    lhs_nu += kMatchingWeight[i] * x[i];
    lhs_v += w[i] * x[i];
  }
  return lhs_nu >= nu && lhs_v >= v;
}

Rational cost(const std::array<Rational, 3>& x) {
  return kCost[0] * x[0] + kCost[1] * x[1] + kCost[2] * x[2];
}

// Basic points: at most two nonzero coordinates. With one nonzero
// coordinate the binding constraint decides its value; with two, both
// constraints are tight.
std::vector<std::array<Rational, 3>> primal_candidates(int nu, int v, int r) {
  const auto w = weights(r);
  std::vector<std::array<Rational, 3>> out;
  out.push_back({Rational(0), Rational(0), Rational(0)});
  for (int i = 0; i < 3; ++i) {
    std::array<Rational, 3> x{Rational(0), Rational(0), Rational(0)};
    x[i] = std::max(Rational(nu, kMatchingWeight[i]), Rational(v) / w[i]);
    out.push_back(x);
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      // a_i xi + a_j xj = nu, w_i xi + w_j xj = v
      const Rational det = kMatchingWeight[i] * w[j] - kMatchingWeight[j] * w[i];
      if (det == 0) continue;
      std::array<Rational, 3> x{Rational(0), Rational(0), Rational(0)};
      x[i] = (nu * w[j] - kMatchingWeight[j] * Rational(v)) / det;
      x[j] = (kMatchingWeight[i] * Rational(v) - nu * w[i]) / det;
      out.push_back(x);
    }
  }
  return out;
}

struct DualPoint {
  Rational y1, y2;
};

// Vertices of the dual polygon: pairwise intersections of its five
// bounding lines.
std::vector<DualPoint> dual_candidates(int r) {
  const auto w = weights(r);
  // a y1 + b y2 <= c
  std::vector<std::array<Rational, 3>> lines;
  for (int i = 0; i < 3; ++i) lines.push_back({Rational(kMatchingWeight[i]), w[i], Rational(kCost[i])});
  lines.push_back({Rational(-1), Rational(0), Rational(0)});
  lines.push_back({Rational(0), Rational(-1), Rational(0)});
  std::vector<DualPoint> out;
  for (std::size_t p = 0; p < lines.size(); ++p) {
    for (std::size_t q = p + 1; q < lines.size(); ++q) {
      const auto& [a1, b1, c1] = lines[p];
      const auto& [a2, b2, c2] = lines[q];
      const Rational det = a1 * b2 - a2 * b1;
      if (det == 0) continue;
      const DualPoint y{(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
      if (dual_feasible(y.y1, y.y2, r)) out.push_back(y);
    }
  }
  return out;
}

}  // namespace

bool primal_feasible(const LpSolution& s, int nu, int v, int r) {
  return feasible({s.x1, s.x2, s.x3}, nu, v, r);
}

bool dual_feasible(const Rational& y1, const Rational& y2, int r) {
  const auto w = weights(r);
  if (y1 < 0 || y2 < 0) return false;
  for (int i = 0; i < 3; ++i) {
    if (kMatchingWeight[i] * y1 + w[i] * y2 > kCost[i]) return false;
  }
  return true;
}

LpSolution lp_min(int nu, int v, int r) {
  if (r < 2 || nu < 0 || v < 0) throw InputError("lp_min needs r >= 2, nu >= 0, v >= 0");
  LpSolution s;
  std::optional<std::array<Rational, 3>> best;
  for (const auto& x : primal_candidates(nu, v, r)) {
    if (!feasible(x, nu, v, r)) continue;
    if (!best) {
      best = x;
      continue;
    }
    const Rational cx = cost(x);
    const Rational cb = cost(*best);
    if (cx < cb || (cx == cb && (x[0] < (*best)[0] || (x[0] == (*best)[0] && x[1] < (*best)[1])))) {
      best = x;
    }
  }
  s.x1 = (*best)[0];
  s.x2 = (*best)[1];
  s.x3 = (*best)[2];
  s.t = cost(*best);

  const auto duals = dual_candidates(r);
  const auto top = std::max_element(duals.begin(), duals.end(), [&](const DualPoint& a, const DualPoint& b) {
    return nu * a.y1 + v * a.y2 < nu * b.y1 + v * b.y2;
  });
  s.y1 = top->y1;
  s.y2 = top->y2;
  s.dual_objective = nu * s.y1 + v * s.y2;
  s.gap = s.t - s.dual_objective;

  const Rational cert_y1(2 * r - 3, 6 * r - 7);
  const Rational cert_y2(1, 6 * r - 7);
  if (!dual_feasible(cert_y1, cert_y2, r)) {
    throw TheoryDiscrepancy("dual certificate infeasible at r = " + std::to_string(r));
  }
  s.closed_form_t = Rational((2 * r - 3) * nu + v, 6 * r - 7);
  s.closed_form_applies = 2 * v >= (2 * r - 1) * nu && 3 * v <= (6 * r - 5) * nu;
  if (s.closed_form_applies && s.t != s.closed_form_t) {
    throw TheoryDiscrepancy("LP optimum " + to_string(s.t) + " differs from closed form " +
                            to_string(s.closed_form_t));
  }
  if (s.gap != 0) throw TheoryDiscrepancy("nonzero LP duality gap " + to_string(s.gap));
  return s;
}

Rational derived_epsilon(int nu, int n) {
  if (n == 0) return Rational(0);
  return std::max(Rational(0), Rational(2 * nu, n) - 1);
}

// ---------------------------------------------------------------------------
// Helpers

namespace {

bool equal_classes(const Tripartite3Graph& h) {
  const auto& n = h.class_sizes();
  return n[0] == n[1] && n[1] == n[2];
}

nlohmann::ordered_json refs_json(const std::vector<VertexRef>& vs) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& v : vs) j.push_back({v.cls, v.index});
  return j;
}

// Left side of an eta bound. AtLeast values resolve only when the cap
// already clears the right side.
ExtRational eta_side(const EtaValue& eta, const Rational& rhs, std::string& note) {
  switch (eta.kind()) {
    case EtaValue::Kind::Finite: return ExtRational::of(Rational(eta.value()));
    case EtaValue::Kind::Infinite: return ExtRational::inf();
    case EtaValue::Kind::AtLeast: break;
  }
  if (Rational(eta.value()) >= rhs) {
    note = "eta reported as a lower bound " + to_string(eta);
    return ExtRational::of(Rational(eta.value()));
  }
  throw ResourceError("eta " + to_string(eta) + " does not resolve a bound of " + to_string(rhs) +
                      "; raise the dimension cap");
}

void require_line_preconditions(const BipartiteMultigraph& g, int r) {
  if (r < 2) throw InputError("r must be >= 2");
  if (g.max_degree() > r) {
    throw InputError("maximum degree " + std::to_string(g.max_degree()) + " exceeds r = " +
                     std::to_string(r));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Matching and cover bounds

BoundReport check_thm_1_3(const Tripartite3Graph& h, const ExactLimits& limits) {
  const auto m = nu_exact(h, limits);
  const auto c = tau_exact(h, limits);
  ReportContext ctx;
  if (equal_classes(h)) {
    ctx.n = h.class_size(0);
    ctx.epsilon = derived_epsilon(m.size, h.class_size(0));
  }
  auto rep = BoundReport::make("thm-1.3", ExtRational::of(Rational(2 * m.size)),
                               ExtRational::of(Rational(c.size)), ctx);
  rep.witnesses["nu"] = m.size;
  rep.witnesses["tau"] = c.size;
  rep.witnesses["matching"] = m.edge_ids;
  rep.witnesses["cover"] = refs_json(c.vertices);
  return rep;
}

BoundReport check_thm_1_2(const Tripartite3Graph& h, int r, const ExactLimits& limits) {
  if (r < 1 || !equal_classes(h) || !is_regular(h, r)) {
    throw InputError("needs an r-regular instance with equal class sizes");
  }
  const int n = h.class_size(0);
  const auto m = nu_exact(h, limits);
  auto rep = BoundReport::make("thm-1.2", ExtRational::of(Rational(m.size)),
                               ExtRational::of(Rational(n, 2)),
                               {r, n, derived_epsilon(m.size, n)});
  rep.witnesses["matching"] = m.edge_ids;
  return rep;
}

// ---------------------------------------------------------------------------
// Connectedness bounds

BoundReport check_thm_3_1(const BipartiteMultigraph& g, const LineSubgraph& j, int r,
                          const EtaFn& eta_fn) {
  require_line_preconditions(g, r);
  if (has_c4_component(g, r)) throw InputError("host has an r-regular C4 component");
  const int nu = nu_of(j);
  const int v = static_cast<int>(j.vertex_count());
  const Rational rhs((2 * r - 3) * nu + v, 6 * r - 7);
  std::string note;
  const auto lhs = eta_side(eta_of(j, eta_fn), rhs, note);
  auto rep = BoundReport::make("thm-3.1", lhs, ExtRational::of(rhs), {r, std::nullopt, std::nullopt});
  rep.witnesses["nu"] = nu;
  rep.witnesses["vertices"] = v;
  rep.note = note;
  return rep;
}

BoundReport check_cor_3_8(const BipartiteMultigraph& g, int r, const EtaFn& eta_fn) {
  require_line_preconditions(g, r);
  const int k = static_cast<int>(find_c4_components(g, r).size());
  const int nu = nu_bip(g).size;
  const int e = static_cast<int>(g.edge_count());
  const Rational rhs((2 * r - 3) * nu + e - k, 6 * r - 7);
  std::string note;
  const auto lhs = eta_side(eta_of(full_line(g), eta_fn), rhs, note);
  auto rep = BoundReport::make("cor-3.8", lhs, ExtRational::of(rhs), {r, std::nullopt, std::nullopt});
  rep.witnesses["nu"] = nu;
  rep.witnesses["edges"] = e;
  rep.witnesses["c4_components"] = k;
  rep.note = note;
  return rep;
}

BoundReport check_thm_2_5(const BipartiteMultigraph& g, const EtaFn& eta_fn) {
  const int nu = nu_bip(g).size;
  const Rational rhs(nu, 2);
  std::string note;
  const auto lhs = eta_side(eta_of(full_line(g), eta_fn), rhs, note);
  auto rep = BoundReport::make("thm-2.5", lhs, ExtRational::of(rhs));
  rep.witnesses["nu"] = nu;
  rep.note = note;
  return rep;
}

// ---------------------------------------------------------------------------
// Hall witness

HallWitness hall_witness(const Tripartite3Graph& h, int cls, const EtaFn& eta_fn, int max_class) {
  const int n = h.class_size(cls);
  if (n > max_class) {
    throw ResourceError("hall_witness: class of size " + std::to_string(n) + " exceeds " +
                        std::to_string(max_class));
  }
  struct Pending {
    std::vector<int> subset;
    int bound;  // defect is at most this
  };
  HallWitness best;
  best.class_size = n;
  bool have = false;
  std::vector<Pending> pending;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s.push_back(i);
    }
    const auto eta = eta_fn(full_line(link(h, cls, s).graph).to_simple_graph());
    if (eta.is_infinite()) continue;
    const int size = static_cast<int>(s.size());
    if (eta.is_at_least()) {
      pending.push_back({s, size - eta.value()});
      continue;
    }
    const int d = size - eta.value();
    if (!have || d > best.defect || (d == best.defect && s < best.subset)) {
      best.defect = d;
      best.subset = s;
      have = true;
    }
  }
  for (const auto& p : pending) {
    if (!have || p.bound >= best.defect) {
      throw ResourceError("hall_witness: eta cap leaves the maximum defect undetermined");
    }
  }
  best.nu = nu_exact(h).size;
  if (best.nu < n - std::max(best.defect, 0)) {
    throw TheoryDiscrepancy("matching number " + std::to_string(best.nu) + " below " +
                            std::to_string(n - std::max(best.defect, 0)));
  }
  return best;
}

BoundReport check_thm_2_2(const Tripartite3Graph& h, int cls, const EtaFn& eta_fn) {
  if (cls < 0 || cls > 2) throw InputError("class id must be 0, 1 or 2");
  const auto w = hall_witness(h, cls, eta_fn);
  auto rep = BoundReport::make("thm-2.2", ExtRational::of(Rational(w.nu)),
                               ExtRational::of(Rational(w.class_size - std::max(w.defect, 0))));
  rep.witnesses["class"] = cls;
  rep.witnesses["subset"] = w.subset;
  rep.witnesses["defect"] = w.defect;
  return rep;
}

// ---------------------------------------------------------------------------
// Stability

bool abc_degree_conditions(const Tripartite3Graph& h, int r) {
  for (int i = 0; i < h.class_size(0); ++i) {
    if (h.degree(0, i) < r) return false;
  }
  for (int c = 1; c < 3; ++c) {
    for (int i = 0; i < h.class_size(c); ++i) {
      if (h.degree(c, i) > r) return false;
    }
  }
  return true;
}

BoundReport check_thm_4_1(const Tripartite3Graph& h, int r, const ExactLimits& limits) {
  if (r < 2 || !equal_classes(h) || !is_regular(h, r)) {
    throw InputError("needs an r-regular instance with equal class sizes and r >= 2");
  }
  const int n = h.class_size(0);
  const int nu = nu_exact(h, limits).size;
  const Rational eps = derived_epsilon(nu, n);
  const auto scan = find_fano_components(h, r);
  const Rational rhs = (1 - (Rational(22 * r) - Rational(77, 3)) * eps) * Rational(n, 2);
  auto rep = BoundReport::make("thm-4.1",
                               ExtRational::of(Rational(static_cast<int>(scan.reports.size()))),
                               ExtRational::of(rhs), {r, n, eps});
  rep.witnesses["nu"] = nu;
  auto comps = nlohmann::ordered_json::array();
  for (const auto& f : scan.reports) comps.push_back(to_json(f));
  rep.witnesses["fano_components"] = std::move(comps);
  if (scan.warning) rep.note = *scan.warning;
  return rep;
}

Thm42Transform thm_4_2_transform(const Tripartite3Graph& h, int r, const ExactLimits& limits) {
  // Trim: keep the r lowest-id edges at every overfull vertex of A.
  std::vector<int> by_vertex_seen(h.class_size(0), 0);
  std::vector<int> kept;
  for (const auto& e : h.edges()) {
    if (by_vertex_seen[e.v[0]]++ < r) kept.push_back(e.id);
  }
  Thm42Transform out;
  out.trimmed = h.with_edges(kept);
  out.transformed = Tripartite3Graph(h.class_sizes());
  for (const auto& comp : components(out.trimmed)) {
    std::array<int, 3> per_class{0, 0, 0};
    for (const auto& v : comp.vertices) ++per_class[v.cls];
    const int k = per_class[0];
    bool perfect = k > 0 && per_class[1] == k && per_class[2] == k;
    ComponentSubgraph3 sub;
    Matching m;
    if (perfect) {
      sub = extract(out.trimmed, comp);
      m = nu_exact(sub.graph, limits);
      perfect = m.size == k;
    }
    if (perfect) {
      ++out.replaced_components;
      for (int id : m.edge_ids) {
        const auto& e = sub.graph.edge(id);
        out.transformed.add_edge(sub.vertex_of[0][e.v[0]], sub.vertex_of[1][e.v[1]],
                                 sub.vertex_of[2][e.v[2]], r);
      }
    } else {
      for (int id : comp.edge_ids) {
        const auto& e = out.trimmed.edge(id);
        out.transformed.add_edge(e.v[0], e.v[1], e.v[2]);
      }
    }
  }
  return out;
}

BoundReport check_thm_4_2(const Tripartite3Graph& h, int r, const ExactLimits& limits) {
  if (r < 2 || !abc_degree_conditions(h, r)) {
    throw InputError("needs class-0 degrees >= r and other degrees <= r, r >= 2");
  }
  const int n = h.class_size(0);
  const int nu = nu_exact(h, limits).size;
  const Rational eps = derived_epsilon(nu, n);
  const auto tr = thm_4_2_transform(h, r, limits);
  const auto after = find_fano_components(tr.transformed, r);
  const auto before = find_fano_components(h, r);
  const Rational rhs = (1 - Rational(72 * r * r - 150 * r + 77) * eps) * Rational(n, 2);
  auto rep = BoundReport::make("thm-4.2",
                               ExtRational::of(Rational(static_cast<int>(after.reports.size()))),
                               ExtRational::of(rhs), {r, n, eps});
  rep.witnesses["nu"] = nu;
  rep.witnesses["fano_components_untransformed"] = before.reports.size();
  rep.witnesses["replaced_components"] = tr.replaced_components;
  rep.witnesses["trimmed_edges"] = h.edge_count() - tr.trimmed.edge_count();
  if (after.warning) rep.note = *after.warning;
  return rep;
}

BoundReport check_lemma_4_2(const Tripartite3Graph& h, int r, const ExactLimits& limits) {
  if (r < 2 || !abc_degree_conditions(h, r)) {
    throw InputError("needs class-0 degrees >= r and other degrees <= r, r >= 2");
  }
  const int n = h.class_size(0);
  const int nu = nu_exact(h, limits).size;
  const Rational eps = derived_epsilon(nu, n);
  const auto c4s = find_c4_components(link_of_class(h, 0).graph, r);
  const Rational rhs = (1 - Rational(6 * r - 7) * eps) * Rational(n, 2);
  auto rep = BoundReport::make("lemma-4.2",
                               ExtRational::of(Rational(static_cast<int>(c4s.size()))),
                               ExtRational::of(rhs), {r, n, eps});
  rep.witnesses["nu"] = nu;
  rep.vacuous = rhs <= 0;
  return rep;
}

BoundReport check_lemma_4_3(const Tripartite3Graph& h, int r) {
  int checked = 0;
  int held = 0;
  int disjoint = 0;
  int fano = 0;
  std::vector<std::string> failures;
  for (int cls = 0; cls < 3; ++cls) {
    for (const auto& c4 : find_link_c4s(h, cls, r)) {
      const auto hosted = hosted_edges(h, cls, c4.c4);
      const bool degree_ok = std::all_of(hosted.begin(), hosted.end(), [&](int id) {
        return h.degree(cls, h.edge(id).v[cls]) <= r;
      });
      if (!degree_ok) continue;
      ++checked;
      try {
        const auto d = c4_dichotomy(h, cls, c4.c4);
        ++held;
        (std::holds_alternative<TwoDisjoint>(d) ? disjoint : fano) += 1;
      } catch (const TheoryDiscrepancy& e) {
        failures.emplace_back(e.what());
      }
    }
  }
  auto rep = BoundReport::make("lemma-4.3", ExtRational::of(Rational(held)),
                               ExtRational::of(Rational(checked)), {r, std::nullopt, std::nullopt});
  rep.vacuous = checked == 0;
  rep.witnesses["two_disjoint"] = disjoint;
  rep.witnesses["half_fano"] = fano;
  if (!failures.empty()) {
    rep.witnesses["failures"] = failures;
    rep.note = failures.front();
  }
  return rep;
}

BoundReport check_lemma_4_5(const Tripartite3Graph& h, int r) {
  const auto table = badness(h, r);
  int checked = 0;
  int held = 0;
  auto seen = nlohmann::ordered_json::array();
  for (int cls = 0; cls < 3; ++cls) {
    for (const auto& c4 : find_link_c4s(h, cls, r)) {
      const auto hosted = hosted_edges(h, cls, c4.c4);
      bool two = false;
      for (std::size_t p = 0; p < hosted.size() && !two; ++p) {
        for (std::size_t q = p + 1; q < hosted.size() && !two; ++q) {
          const auto& e = h.edge(hosted[p]);
          const auto& f = h.edge(hosted[q]);
          two = e.v[0] != f.v[0] && e.v[1] != f.v[1] && e.v[2] != f.v[2];
        }
      }
      if (!two) continue;
      const auto vs = c4.vertices();
      const bool covered = std::all_of(vs.begin(), vs.end(), [&](const VertexRef& v) {
        return !table.at(v).bad_in[3 - cls - v.cls];
      });
      if (!covered) continue;
      ++checked;
      const auto type = classify_pm_component(h, component_containing(h, vs.front()));
      held += type == PmComponentType::Other ? 0 : 1;
      seen.push_back({{"link_class", cls}, {"left", c4.c4.left}, {"right", c4.c4.right},
                      {"component", to_string(type)}});
    }
  }
  auto rep = BoundReport::make("lemma-4.5", ExtRational::of(Rational(held)),
                               ExtRational::of(Rational(checked)), {r, std::nullopt, std::nullopt});
  rep.vacuous = checked == 0;
  rep.witnesses["c4s"] = std::move(seen);
  return rep;
}

}  // namespace t3lab
