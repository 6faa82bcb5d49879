#include "t3lab/linegraph.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "t3lab/errors.hpp"
#include "t3lab/structure.hpp"

namespace t3lab {

LineSubgraph::LineSubgraph(std::shared_ptr<const BipartiteMultigraph> host,
                           std::vector<int> vertices, std::set<Adjacency> adjacencies)
    : host_(std::move(host)), vertices_(std::move(vertices)), adjacencies_(std::move(adjacencies)) {
  if (!host_) throw InputError("line subgraph without a host");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("line subgraph lists an edge id twice");
  }
  for (int id : vertices_) {
    if (id < 0 || id >= static_cast<int>(host_->edge_count())) {
      throw InputError("line subgraph vertex " + std::to_string(id) + " is not a host edge");
    }
  }
  for (const auto& a : adjacencies_) {
    if (a.first >= a.second || !contains(a.first) || !contains(a.second)) {
      throw InputError("adjacency (" + std::to_string(a.first) + "," + std::to_string(a.second) +
                       ") is not between two vertices of J");
    }
    if (!host_->intersect(a.first, a.second)) {
      throw InputError("adjacency (" + std::to_string(a.first) + "," + std::to_string(a.second) +
                       ") joins disjoint edges");
    }
  }
}

bool LineSubgraph::contains(int id) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

int LineSubgraph::position(int id) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) throw InputError("edge id not in J");
  return static_cast<int>(it - vertices_.begin());
}

SimpleGraph LineSubgraph::to_simple_graph() const {
  SimpleGraph g(static_cast<int>(vertices_.size()));
  for (const auto& a : adjacencies_) g.add_edge(position(a.first), position(a.second));
  return g;
}

LineSubgraph full_line(std::shared_ptr<const BipartiteMultigraph> g) {
  std::vector<int> ids(g->edge_count());
  std::set<Adjacency> adj;
  for (int i = 0; i < static_cast<int>(g->edge_count()); ++i) {
    ids[i] = i;
    for (int k = i + 1; k < static_cast<int>(g->edge_count()); ++k) {
      if (g->intersect(i, k)) adj.insert({i, k});
    }
  }
  return LineSubgraph(std::move(g), std::move(ids), std::move(adj));
}

LineSubgraph full_line(const BipartiteMultigraph& g) {
  return full_line(std::make_shared<const BipartiteMultigraph>(g));
}

HostRestriction g_of(const LineSubgraph& j) {
  HostRestriction out{BipartiteMultigraph(j.host().left_size(), j.host().right_size()), {}};
  for (int id : j.vertices()) {
    const auto& e = j.host().edge(id);
    out.graph.add_edge(e.u, e.v);
    out.edge_of.push_back(id);
  }
  return out;
}

int nu_of(const LineSubgraph& j) { return nu_bip(g_of(j).graph).size; }

LineSubgraph delete_adjacency(const LineSubgraph& j, const Adjacency& a) {
  if (!j.has(a)) {
    throw InputError("no adjacency (" + std::to_string(a.first) + "," + std::to_string(a.second) +
                     ") to delete");
  }
  auto adj = j.adjacencies();
  adj.erase(a);
  return LineSubgraph(j.host_ptr(), j.vertices(), std::move(adj));
}

LineSubgraph explode(const LineSubgraph& j, const Adjacency& a) {
  if (!j.has(a)) {
    throw InputError("no adjacency (" + std::to_string(a.first) + "," + std::to_string(a.second) +
                     ") to explode");
  }
  std::set<int> gone{a.first, a.second};
  for (const auto& b : j.adjacencies()) {
    if (b.first == a.first || b.first == a.second) gone.insert(b.second);
    if (b.second == a.first || b.second == a.second) gone.insert(b.first);
  }
  std::vector<int> keep;
  for (int id : j.vertices()) {
    if (!gone.contains(id)) keep.push_back(id);
  }
  std::set<Adjacency> adj;
  for (const auto& b : j.adjacencies()) {
    if (!gone.contains(b.first) && !gone.contains(b.second)) adj.insert(b);
  }
  return LineSubgraph(j.host_ptr(), std::move(keep), std::move(adj));
}

EtaValue eta_of(const LineSubgraph& j, const EtaFn& eta_fn) { return eta_fn(j.to_simple_graph()); }

bool is_decouplable(const LineSubgraph& j, const Adjacency& a, const EtaFn& eta_fn) {
  return eta_le(eta_of(delete_adjacency(j, a), eta_fn), eta_of(j, eta_fn));
}

bool is_explodable(const LineSubgraph& j, const Adjacency& a, const EtaFn& eta_fn) {
  return eta_le(eta_of(explode(j, a), eta_fn).plus(1), eta_of(j, eta_fn));
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

template <typename Order>
Reduction reduce_with(const LineSubgraph& j, const EtaFn& eta_fn, Order order) {
  Reduction out{j, {}, eta_of(j, eta_fn), EtaValue::finite(0)};
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Adjacency> pass(out.result.adjacencies().begin(), out.result.adjacencies().end());
    order(pass);
    for (const auto& a : pass) {
      if (is_decouplable(out.result, a, eta_fn)) {
        out.result = delete_adjacency(out.result, a);
        out.deleted.push_back(a);
        changed = true;
      }
    }
  }
  out.eta_after = eta_of(out.result, eta_fn);
  if (!eta_le(out.eta_after, out.eta_before)) {
    throw TheoryDiscrepancy("reduction raised eta from " + to_string(out.eta_before) + " to " +
                            to_string(out.eta_after));
  }
  return out;
}

}  // namespace

Reduction reduce(const LineSubgraph& j, const EtaFn& eta_fn) {
  return reduce_with(j, eta_fn, [](std::vector<Adjacency>&) {});
}

Reduction reduce_shuffled(const LineSubgraph& j, const EtaFn& eta_fn, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return reduce_with(j, eta_fn, [&rng](std::vector<Adjacency>& pass) {
    for (std::size_t i = pass.size(); i > 1; --i) {
      std::swap(pass[i - 1], pass[rng() % i]);
    }
  });
}

// ---------------------------------------------------------------------------
// Explosion types

int type_index(ExplosionType t) {
  switch (t) {
    case ExplosionType::Type1: return 1;
    case ExplosionType::Type2: return 2;
    case ExplosionType::Type3: return 3;
    case ExplosionType::Untyped: break;
  }
  return 0;
}

namespace {

struct Drops {
  int nu = 0;
  int vertices = 0;
};

Drops drops(int nu0, std::size_t v0, const LineSubgraph& after) {
  return {nu0 - nu_of(after), static_cast<int>(v0 - after.vertex_count())};
}

// First explodable pair of a reduced J' (ascending order) whose explosion
// keeps nu within 3 and the vertex loss within 6r - 5 of the original J.
std::optional<std::pair<Adjacency, Drops>> find_followup(const LineSubgraph& reduced, int nu0,
                                                         std::size_t v0, int r,
                                                         const EtaFn& eta_fn) {
  for (const auto& b : reduced.adjacencies()) {
    const auto after = explode(reduced, b);
    const Drops d = drops(nu0, v0, after);
    if (d.nu > 3 || d.vertices > 6 * r - 5) continue;
    if (is_explodable(reduced, b, eta_fn)) return std::make_pair(b, d);
  }
  return std::nullopt;
}

PairClassification classify_simple(const LineSubgraph& j, const Adjacency& a, int r, int nu0) {
  PairClassification c;
  const Drops d = drops(nu0, j.vertex_count(), explode(j, a));
  c.nu_drop = c.total_nu_drop = d.nu;
  c.vertex_drop = c.total_vertex_drop = d.vertices;
  if (d.nu <= 1 && d.vertices <= 3 * r - 2) {
    c.type = ExplosionType::Type1;
  } else if (d.nu <= 2 && d.vertices <= 2 * r - 1) {
    c.type = ExplosionType::Type2;
  }
  return c;
}

void classify_third(PairClassification& c, const LineSubgraph& j, const Adjacency& a, int r,
                    int nu0, const EtaFn& eta_fn, const ClassifyOptions& options) {
  const auto exploded = explode(j, a);
  const auto reduced = reduce(exploded, eta_fn).result;
  const auto found = find_followup(reduced, nu0, j.vertex_count(), r, eta_fn);
  if (!found) return;
  c.type = ExplosionType::Type3;
  c.followup = found->first;
  c.total_nu_drop = found->second.nu;
  c.total_vertex_drop = found->second.vertices;
  if (options.verify_orders > 0) {
    bool agree = true;
    for (int k = 0; k < options.verify_orders && agree; ++k) {
      const auto other = reduce_shuffled(exploded, eta_fn, options.seed + k).result;
      agree = find_followup(other, nu0, j.vertex_count(), r, eta_fn).has_value();
    }
    c.reduction_orders_agree = agree;
  }
}

}  // namespace

PairClassification classify_pair(const LineSubgraph& j, const Adjacency& a, int r,
                                  const EtaFn& eta_fn, const ClassifyOptions& options) {
  const int nu0 = nu_of(j);
  PairClassification c = classify_simple(j, a, r, nu0);
  if (c.type == ExplosionType::Untyped) classify_third(c, j, a, r, nu0, eta_fn, options);
  return c;
}

// ---------------------------------------------------------------------------
// Explosion sequence

Rational ExplosionCertificate::bound() const {
  return Rational((2 * r - 3) * nu + edges, 6 * r - 7);
}

bool ExplosionCertificate::bound_applies() const { return 2 * edges >= (2 * r - 1) * nu; }

namespace {

void log_reduction(ExplosionCertificate& cert, const Reduction& red) {
  for (const auto& a : red.deleted) {
    cert.steps.push_back({ExplosionStep::Kind::Delete, a, ExplosionType::Untyped, false});
  }
}

}  // namespace

ExplosionCertificate explosion_sequence(const BipartiteMultigraph& g, int r, const EtaFn& eta_fn) {
  if (r < 2) throw InputError("explosion_sequence needs r >= 2");
  if (g.max_degree() > r) {
    throw InputError("host has maximum degree " + std::to_string(g.max_degree()) + " > r = " +
                     std::to_string(r));
  }
  if (has_c4_component(g, r)) throw InputError("host has an r-regular C4 component");

  ExplosionCertificate cert;
  cert.r = r;
  cert.nu = nu_bip(g).size;
  cert.edges = static_cast<int>(g.edge_count());

  LineSubgraph j = full_line(g);
  for (;;) {
    const Reduction red = reduce(j, eta_fn);
    log_reduction(cert, red);
    j = red.result;
    if (j.adjacencies().empty()) break;

    const int nu0 = nu_of(j);
    std::optional<std::pair<Adjacency, PairClassification>> pick;
    std::vector<Adjacency> explodable;
    for (const auto& a : j.adjacencies()) {
      if (!is_explodable(j, a, eta_fn)) continue;
      explodable.push_back(a);
      auto c = classify_simple(j, a, r, nu0);
      if (c.type == ExplosionType::Untyped) continue;
      if (!pick || type_index(c.type) < type_index(pick->second.type)) pick.emplace(a, c);
      if (c.type == ExplosionType::Type1) break;
    }
    if (!pick) {
      for (const auto& a : explodable) {
        PairClassification c = classify_simple(j, a, r, nu0);
        classify_third(c, j, a, r, nu0, eta_fn, {});
        if (c.type == ExplosionType::Type3) {
          pick.emplace(a, c);
          break;
        }
      }
    }
    if (!pick) {
      throw NoTypedPair("reduced line subgraph with " + std::to_string(j.vertex_count()) +
                        " vertices and " + std::to_string(j.adjacencies().size()) +
                        " adjacencies has no typed explodable pair");
    }

    const auto& [a, c] = *pick;
    cert.steps.push_back({ExplosionStep::Kind::Explode, a, c.type, false});
    j = explode(j, a);
    switch (c.type) {
      case ExplosionType::Type1: ++cert.x1; break;
      case ExplosionType::Type2: ++cert.x2; break;
      default: {
        ++cert.x3;
        const Reduction second = reduce(j, eta_fn);
        log_reduction(cert, second);
        j = second.result;
        if (!c.followup || !j.has(*c.followup)) {
          throw TheoryDiscrepancy("type 3 follow-up pair vanished on re-reduction");
        }
        cert.steps.push_back({ExplosionStep::Kind::Explode, *c.followup, c.type, true});
        j = explode(j, *c.followup);
        break;
      }
    }
  }
  cert.t = cert.x1 + cert.x2 + 2 * cert.x3;
  cert.infinite = j.vertex_count() > 0;
  return cert;
}

LineSubgraph replay(const BipartiteMultigraph& g, const ExplosionCertificate& cert) {
  LineSubgraph j = full_line(g);
  for (const auto& s : cert.steps) {
    j = s.kind == ExplosionStep::Kind::Delete ? delete_adjacency(j, s.pair) : explode(j, s.pair);
  }
  return j;
}

nlohmann::ordered_json to_json(const ExplosionCertificate& cert) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : cert.steps) {
    nlohmann::ordered_json step;
    step["op"] = s.kind == ExplosionStep::Kind::Delete ? "delete" : "explode";
    step["pair"] = {s.pair.first, s.pair.second};
    if (s.kind == ExplosionStep::Kind::Explode) {
      step["type"] = type_index(s.type);
      if (s.followup) step["followup"] = true;
    }
    steps.push_back(std::move(step));
  }
  nlohmann::ordered_json j;
  j["r"] = cert.r;
  j["nu"] = cert.nu;
  j["edges"] = cert.edges;
  j["x1"] = cert.x1;
  j["x2"] = cert.x2;
  j["x3"] = cert.x3;
  j["t"] = cert.t;
  j["infinite"] = cert.infinite;
  j["bound"] = to_string(cert.bound());
  j["bound_applies"] = cert.bound_applies();
  j["steps"] = std::move(steps);
  return j;
}

}  // namespace t3lab
