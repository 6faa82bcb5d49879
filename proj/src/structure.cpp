#include "t3lab/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "t3lab/errors.hpp"

namespace t3lab {

namespace {

std::array<int, 2> link_sides(int cls) {
  if (cls == 0) return {1, 2};
  if (cls == 1) return {0, 2};
  return {0, 1};
}

int third_class(int a, int b) { return 3 - a - b; }

}  // namespace

// ---------------------------------------------------------------------------
// C4 components

std::vector<C4Report> find_c4_components(const BipartiteMultigraph& g, int r) {
  std::vector<C4Report> out;
  for (const auto& comp : components(g)) {
    std::vector<int> left;
    std::vector<int> right;
    for (const auto& v : comp.vertices) (v.cls == 0 ? left : right).push_back(v.index);
    if (left.size() != 2 || right.size() != 2) continue;
    C4Report rep;
    rep.left = {left[0], left[1]};
    rep.right = {right[0], right[1]};
    rep.r = r;
    for (int id : comp.edge_ids) {
      const auto& e = g.edge(id);
      const int i = e.u == rep.left[0] ? 0 : 1;
      const int j = e.v == rep.right[0] ? 0 : 1;
      rep.sides[i][j].push_back(id);
    }
    bool ok = true;
    for (int i = 0; i < 2 && ok; ++i) {
      for (int j = 0; j < 2 && ok; ++j) ok = !rep.sides[i][j].empty();
    }
    for (int i = 0; i < 2 && ok; ++i) {
      ok = g.degree({0, rep.left[i]}) == r && g.degree({1, rep.right[i]}) == r;
    }
    if (!ok) continue;
    rep.edge_ids = comp.edge_ids;
    std::sort(rep.edge_ids.begin(), rep.edge_ids.end());
    out.push_back(std::move(rep));
  }
  return out;
}

bool has_c4_component(const BipartiteMultigraph& g, int r) {
  return !find_c4_components(g, r).empty();
}

std::vector<VertexRef> LinkC4::vertices() const {
  const auto sides = link_sides(cls);
  std::vector<VertexRef> out{{sides[0], c4.left[0]},
                             {sides[0], c4.left[1]},
                             {sides[1], c4.right[0]},
                             {sides[1], c4.right[1]}};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinkC4> find_link_c4s(const Tripartite3Graph& h, int cls, int r) {
  std::vector<LinkC4> out;
  for (auto& c4 : find_c4_components(link_of_class(h, cls).graph, r)) {
    out.push_back({cls, std::move(c4)});
  }
  return out;
}

std::vector<int> hosted_edges(const Tripartite3Graph& h, int cls, const C4Report& c4) {
  const Link lk = link_of_class(h, cls);
  const auto current = find_c4_components(lk.graph, c4.r);
  const bool present = std::any_of(current.begin(), current.end(), [&](const C4Report& x) {
    return x.left == c4.left && x.right == c4.right && x.edge_ids == c4.edge_ids;
  });
  if (!present) throw InputError("C4 report does not match a component of the current link");
  std::vector<int> out;
  for (int id : c4.edge_ids) out.push_back(lk.hosted[id]);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Truncated Fano components

std::optional<FanoReport> match_scaled_fano(const Tripartite3Graph& h,
                                            const std::vector<int>& edge_ids) {
  if (edge_ids.empty()) return std::nullopt;
  std::array<std::set<int>, 3> used;
  for (int id : edge_ids) {
    const auto& e = h.edge(id);
    for (int c = 0; c < 3; ++c) used[c].insert(e.v[c]);
  }
  FanoReport rep;
  for (int c = 0; c < 3; ++c) {
    if (used[c].size() != 2) return std::nullopt;
    rep.vertices[c] = {*used[c].begin(), *used[c].rbegin()};
  }
  std::array<int, 8> count{};
  for (int id : edge_ids) {
    const auto& e = h.edge(id);
    int code = 0;
    for (int c = 0; c < 3; ++c) code |= (e.v[c] == rep.vertices[c][1] ? 1 : 0) << c;
    ++count[code];
  }
  // The four shapes of one parity class, each with the same multiplicity.
  for (int parity = 0; parity < 2; ++parity) {
    int s = -1;
    bool ok = true;
    for (int code = 0; code < 8 && ok; ++code) {
      const bool member = (std::popcount(static_cast<unsigned>(code)) % 2) == parity;
      if (!member) {
        ok = count[code] == 0;
      } else if (s < 0) {
        s = count[code];
        ok = s > 0;
      } else {
        ok = count[code] == s;
      }
    }
    if (!ok) continue;
    rep.multiplicity = s;
    int k = 0;
    for (int code = 0; code < 8; ++code) {
      if ((std::popcount(static_cast<unsigned>(code)) % 2) != parity) continue;
      for (int c = 0; c < 3; ++c) rep.shapes[k][c] = rep.vertices[c][(code >> c) & 1];
      ++k;
    }
    std::sort(rep.shapes.begin(), rep.shapes.end());
    rep.edge_ids = edge_ids;
    std::sort(rep.edge_ids.begin(), rep.edge_ids.end());
    return rep;
  }
  return std::nullopt;
}

FanoScan find_fano_components(const Tripartite3Graph& h, int r) {
  FanoScan scan;
  if (r % 2 != 0) {
    scan.warning = "r = " + std::to_string(r) + " is odd; (r/2)F does not exist";
    return scan;
  }
  for (const auto& comp : components(h)) {
    if (comp.vertices.size() != 6) continue;
    auto rep = match_scaled_fano(h, comp.edge_ids);
    if (rep && 2 * rep->multiplicity == r) scan.reports.push_back(std::move(*rep));
  }
  return scan;
}

std::optional<FanoReport> find_fano_subcopy(const Tripartite3Graph& h, int s) {
  if (s < 1) throw InputError("find_fano_subcopy: multiplicity must be >= 1");
  std::map<std::array<int, 3>, std::vector<int>> by_triple;
  for (const auto& e : h.edges()) by_triple[e.v].push_back(e.id);
  const auto& n = h.class_sizes();
  for (int a0 = 0; a0 < n[0]; ++a0) {
    for (int a1 = a0 + 1; a1 < n[0]; ++a1) {
      for (int b0 = 0; b0 < n[1]; ++b0) {
        for (int b1 = b0 + 1; b1 < n[1]; ++b1) {
          for (int c0 = 0; c0 < n[2]; ++c0) {
            for (int c1 = c0 + 1; c1 < n[2]; ++c1) {
              const std::array<std::array<int, 2>, 3> pick{{{a0, a1}, {b0, b1}, {c0, c1}}};
              for (int parity = 0; parity < 2; ++parity) {
                std::vector<int> ids;
                bool ok = true;
                for (int code = 0; code < 8 && ok; ++code) {
                  if ((std::popcount(static_cast<unsigned>(code)) % 2) != parity) continue;
                  const std::array<int, 3> t{pick[0][code & 1], pick[1][(code >> 1) & 1],
                                             pick[2][(code >> 2) & 1]};
                  const auto it = by_triple.find(t);
                  ok = it != by_triple.end() && static_cast<int>(it->second.size()) >= s;
                  if (ok) ids.insert(ids.end(), it->second.begin(), it->second.begin() + s);
                }
                if (!ok) continue;
                auto rep = match_scaled_fano(h, ids);
                if (rep) return rep;
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hosted-edge dichotomy

C4Dichotomy c4_dichotomy(const Tripartite3Graph& h, int cls, const C4Report& c4) {
  const auto hosted = hosted_edges(h, cls, c4);
  for (int id : hosted) {
    const int v = h.edge(id).v[cls];
    if (h.degree(cls, v) > c4.r) {
      throw InputError("vertex " + std::to_string(v) + " of class " + std::to_string(cls) +
                       " has degree above r on a hosted edge");
    }
  }
  for (std::size_t p = 0; p < hosted.size(); ++p) {
    for (std::size_t q = p + 1; q < hosted.size(); ++q) {
      const auto& e = h.edge(hosted[p]);
      const auto& f = h.edge(hosted[q]);
      if (e.v[0] != f.v[0] && e.v[1] != f.v[1] && e.v[2] != f.v[2]) {
        return TwoDisjoint{{hosted[p], hosted[q]}};
      }
    }
  }
  if (auto rep = match_scaled_fano(h, hosted); rep && 2 * rep->multiplicity == c4.r) {
    return FormsHalfFano{std::move(*rep)};
  }
  throw TheoryDiscrepancy("C4 in link of class " + std::to_string(cls) +
                          " hosts no two disjoint edges and does not form (r/2)F");
}

// ---------------------------------------------------------------------------
// Perfect-matching components

std::string to_string(PmComponentType t) {
  switch (t) {
    case PmComponentType::Type1: return "type1";
    case PmComponentType::Type2: return "type2";
    case PmComponentType::Other: break;
  }
  return "other";
}

PmComponentType classify_pm_component(const Tripartite3Graph& h, const Component3& comp) {
  std::array<int, 3> per_class{0, 0, 0};
  for (const auto& v : comp.vertices) ++per_class[v.cls];
  const int k = per_class[0];
  if (per_class[1] != k || per_class[2] != k || (k != 2 && k != 4)) return PmComponentType::Other;
  const auto sub = extract(h, comp);
  if (nu_exact(sub.graph).size != k) return PmComponentType::Other;
  return k == 2 ? PmComponentType::Type1 : PmComponentType::Type2;
}

Component3 component_containing(const Tripartite3Graph& h, VertexRef v) {
  for (auto& comp : components(h)) {
    if (std::binary_search(comp.vertices.begin(), comp.vertices.end(), v)) return comp;
  }
  throw InputError("vertex not in graph");
}

// ---------------------------------------------------------------------------
// Badness

BadnessTable::BadnessTable(std::array<int, 3> sizes, std::vector<VertexBadness> rows)
    : offset_{0, sizes[0], sizes[0] + sizes[1]}, rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != sizes[0] + sizes[1] + sizes[2]) {
    throw InputError("badness table size mismatch");
  }
}

const VertexBadness& BadnessTable::at(VertexRef v) const {
  return rows_.at(offset_.at(v.cls) + v.index);
}

int BadnessTable::bad_count() const {
  return static_cast<int>(
      std::count_if(rows_.begin(), rows_.end(), [](const VertexBadness& b) { return b.bad(); }));
}

BadnessTable badness(const Tripartite3Graph& h, int r) {
  std::vector<VertexBadness> rows;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < h.class_size(c); ++i) rows.push_back({{c, i}, {false, false, false}});
  }
  BadnessTable table(h.class_sizes(), rows);
  const std::array<int, 3> offset{0, h.class_size(0), h.class_size(0) + h.class_size(1)};
  for (int cls = 0; cls < 3; ++cls) {
    const auto sides = link_sides(cls);
    const auto lk = link_of_class(h, cls);
    std::set<std::pair<int, int>> in_c4;  // (side, index)
    for (const auto& c4 : find_c4_components(lk.graph, r)) {
      for (int x : c4.left) in_c4.insert({0, x});
      for (int x : c4.right) in_c4.insert({1, x});
    }
    for (int side = 0; side < 2; ++side) {
      const int c = sides[side];
      for (int i = 0; i < h.class_size(c); ++i) {
        if (!in_c4.contains({side, i})) rows[offset[c] + i].bad_in[cls] = true;
      }
    }
  }
  return BadnessTable(h.class_sizes(), std::move(rows));
}

C4Partition good_c4s(const Tripartite3Graph& h, int cls, int r) {
  const auto table = badness(h, r);
  C4Partition out;
  for (auto& c4 : find_link_c4s(h, cls, r)) {
    (bad_vertex_count(c4, table) == 0 ? out.good : out.ruined).push_back(std::move(c4));
  }
  return out;
}

int bad_vertex_count(const LinkC4& c4, const BadnessTable& table) {
  int count = 0;
  for (const auto& v : c4.vertices()) count += table.at(v).bad() ? 1 : 0;
  return count;
}

// ---------------------------------------------------------------------------
// One-bad-vertex structure

namespace {

// The r-regular C4 component of lk(cls) containing v, if any.
std::optional<LinkC4> c4_through(const std::vector<LinkC4>& c4s, VertexRef v) {
  for (const auto& c : c4s) {
    const auto vs = c.vertices();
    if (std::find(vs.begin(), vs.end(), v) != vs.end()) return c;
  }
  return std::nullopt;
}

bool same_c4(const LinkC4& a, const LinkC4& b) {
  return a.cls == b.cls && a.c4.left == b.c4.left && a.c4.right == b.c4.right;
}

nlohmann::ordered_json refs_json(const std::vector<VertexRef>& vs) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& v : vs) j.push_back({v.cls, v.index});
  return j;
}

nlohmann::ordered_json link_c4_json(const LinkC4& c) {
  return {{"link_class", c.cls}, {"vertices", refs_json(c.vertices())}};
}

}  // namespace

BoundReport check_one_bad_vertex_structure(const Tripartite3Graph& h, int r, const LinkC4& c4) {
  if (h.max_degree() > r) throw InputError("maximum degree exceeds r");
  const auto table = badness(h, r);
  std::vector<VertexRef> bad;
  for (const auto& v : c4.vertices()) {
    if (table.at(v).bad()) bad.push_back(v);
  }
  if (bad.size() != 1) {
    throw InputError("C4 has " + std::to_string(bad.size()) + " bad vertices, not exactly one");
  }
  const int i = c4.cls;
  const int j = bad[0].cls;
  const int k = third_class(i, j);

  std::array<std::vector<LinkC4>, 3> all;
  for (int c = 0; c < 3; ++c) all[c] = find_link_c4s(h, c, r);

  std::vector<std::string> missing;
  std::vector<LinkC4> unit{c4};

  // Two companions in lk V_j through the class-k vertices.
  std::vector<LinkC4> companions;
  for (const auto& v : c4.vertices()) {
    if (v.cls != k) continue;
    auto comp = c4_through(all[j], v);
    if (!comp) {
      missing.push_back("no C4 of link " + std::to_string(j) + " through class-" +
                        std::to_string(k) + " vertex " + std::to_string(v.index));
      continue;
    }
    std::vector<VertexRef> cbad;
    for (const auto& u : comp->vertices()) {
      if (table.at(u).bad()) cbad.push_back(u);
    }
    const bool shape = cbad.size() == 2 && cbad[0].cls != cbad[1].cls &&
                       table.at(cbad[0]).bad_in[cbad[0].cls == i ? k : i] &&
                       table.at(cbad[1]).bad_in[cbad[1].cls == i ? k : i];
    if (!shape) {
      missing.push_back("C4 of link " + std::to_string(j) + " through class-" + std::to_string(k) +
                        " vertex " + std::to_string(v.index) + " lacks the two-bad-vertex profile");
    }
    companions.push_back(*comp);
  }
  if (companions.size() == 2 && same_c4(companions[0], companions[1])) {
    missing.push_back("the two link-" + std::to_string(j) + " companions coincide");
  }
  unit.insert(unit.end(), companions.begin(), companions.end());

  // One companion in lk V_k through the good class-j vertex.
  for (const auto& v : c4.vertices()) {
    if (v.cls != j || v == bad[0]) continue;
    auto comp = c4_through(all[k], v);
    if (!comp) {
      missing.push_back("no C4 of link " + std::to_string(k) + " through class-" +
                        std::to_string(j) + " vertex " + std::to_string(v.index));
      continue;
    }
    std::vector<VertexRef> cbad;
    for (const auto& u : comp->vertices()) {
      if (table.at(u).bad()) cbad.push_back(u);
    }
    if (cbad.size() != 1 || cbad[0].cls != j || !table.at(cbad[0]).bad_in[i]) {
      missing.push_back("C4 of link " + std::to_string(k) + " through class-" + std::to_string(j) +
                        " vertex " + std::to_string(v.index) +
                        " lacks exactly one bad vertex of the required kind");
    }
    unit.push_back(*comp);
  }

  // Isolation of the unit.
  std::set<VertexRef> covered;
  for (const auto& u : unit) {
    for (const auto& v : u.vertices()) covered.insert(v);
  }
  for (int c = 0; c < 3; ++c) {
    for (const auto& other : all[c]) {
      const bool member = std::any_of(unit.begin(), unit.end(),
                                      [&](const LinkC4& u) { return same_c4(u, other); });
      if (member) continue;
      for (const auto& v : other.vertices()) {
        if (covered.contains(v)) {
          missing.push_back("C4 of link " + std::to_string(c) + " outside the unit touches it");
          break;
        }
      }
    }
  }

  const bool ok = missing.empty();
  auto rep = BoundReport::make("lemma-4.6", ExtRational::of(ok ? 1 : 0), ExtRational::of(1),
                               {r, std::nullopt, std::nullopt});
  rep.witnesses["c4"] = link_c4_json(c4);
  rep.witnesses["bad_vertex"] = {bad[0].cls, bad[0].index};
  auto u = nlohmann::ordered_json::array();
  for (const auto& x : unit) u.push_back(link_c4_json(x));
  rep.witnesses["unit"] = std::move(u);
  if (!ok) {
    rep.witnesses["missing"] = missing;
    rep.note = missing.front();
  }
  return rep;
}

BoundReport check_lemma_4_6(const Tripartite3Graph& h, int r) {
  if (h.max_degree() > r) throw InputError("maximum degree exceeds r");
  const auto table = badness(h, r);
  int checked = 0;
  int passed = 0;
  auto details = nlohmann::ordered_json::array();
  for (int c = 0; c < 3; ++c) {
    for (const auto& c4 : find_link_c4s(h, c, r)) {
      if (bad_vertex_count(c4, table) != 1) continue;
      ++checked;
      auto rep = check_one_bad_vertex_structure(h, r, c4);
      passed += rep.pass ? 1 : 0;
      details.push_back(to_json(rep));
    }
  }
  auto rep = BoundReport::make("lemma-4.6", ExtRational::of(passed), ExtRational::of(checked),
                               {r, std::nullopt, std::nullopt});
  rep.vacuous = checked == 0;
  rep.witnesses["checked"] = std::move(details);
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::ordered_json to_json(const C4Report& c4) {
  nlohmann::ordered_json j;
  j["left"] = c4.left;
  j["right"] = c4.right;
  j["r"] = c4.r;
  j["edge_ids"] = c4.edge_ids;
  return j;
}

nlohmann::ordered_json to_json(const FanoReport& f) {
  nlohmann::ordered_json j;
  j["vertices"] = f.vertices;
  j["multiplicity"] = f.multiplicity;
  j["shapes"] = f.shapes;
  j["edge_ids"] = f.edge_ids;
  return j;
}

}  // namespace t3lab
