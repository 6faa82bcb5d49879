#include "t3lab/hypercore.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>

#include "t3lab/errors.hpp"

namespace t3lab {

// ---------------------------------------------------------------------------
// Tripartite3Graph

Tripartite3Graph::Tripartite3Graph(std::array<int, 3> class_sizes) : sizes_(class_sizes) {
  for (int c = 0; c < 3; ++c) {
    if (sizes_[c] < 0) throw InputError("negative class size");
    degree_[c].assign(sizes_[c], 0);
  }
}

void Tripartite3Graph::check_vertex(VertexRef v) const {
  if (v.cls < 0 || v.cls > 2 || v.index < 0 || v.index >= sizes_[v.cls]) {
    throw InputError("vertex (" + std::to_string(v.cls) + "," + std::to_string(v.index) +
                     ") out of range");
  }
}

int Tripartite3Graph::add_edge(int a, int b, int c) {
  const std::array<int, 3> v{a, b, c};
  for (int k = 0; k < 3; ++k) check_vertex({k, v[k]});
  const int id = static_cast<int>(edges_.size());
  edges_.push_back(Edge3{v, id});
  for (int k = 0; k < 3; ++k) ++degree_[k][v[k]];
  return id;
}

void Tripartite3Graph::add_edge(int a, int b, int c, int multiplicity) {
  if (multiplicity < 1) throw InputError("edge multiplicity must be >= 1");
  for (int i = 0; i < multiplicity; ++i) add_edge(a, b, c);
}

int Tripartite3Graph::degree(VertexRef v) const {
  check_vertex(v);
  return degree_[v.cls][v.index];
}

int Tripartite3Graph::max_degree() const {
  int best = 0;
  for (const auto& d : degree_) {
    for (int x : d) best = std::max(best, x);
  }
  return best;
}

Tripartite3Graph Tripartite3Graph::with_edges(std::span<const int> ids) const {
  Tripartite3Graph out(sizes_);
  for (int id : ids) {
    const auto& e = edge(id);
    out.add_edge(e.v[0], e.v[1], e.v[2]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// BipartiteMultigraph

BipartiteMultigraph::BipartiteMultigraph(int n_left, int n_right)
    : n_left_(n_left), n_right_(n_right) {
  if (n_left < 0 || n_right < 0) throw InputError("negative class size");
  deg_left_.assign(n_left, 0);
  deg_right_.assign(n_right, 0);
}

int BipartiteMultigraph::add_edge(int u, int v) {
  if (u < 0 || u >= n_left_ || v < 0 || v >= n_right_) {
    throw InputError("bipartite edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") out of range");
  }
  const int id = static_cast<int>(edges_.size());
  edges_.push_back(EdgeB{u, v, id});
  ++deg_left_[u];
  ++deg_right_[v];
  return id;
}

void BipartiteMultigraph::add_edge(int u, int v, int multiplicity) {
  if (multiplicity < 1) throw InputError("edge multiplicity must be >= 1");
  for (int i = 0; i < multiplicity; ++i) add_edge(u, v);
}

int BipartiteMultigraph::degree(VertexRef v) const {
  if (v.cls == 0 && v.index >= 0 && v.index < n_left_) return deg_left_[v.index];
  if (v.cls == 1 && v.index >= 0 && v.index < n_right_) return deg_right_[v.index];
  throw InputError("bipartite vertex out of range");
}

int BipartiteMultigraph::max_degree() const {
  int best = 0;
  for (int d : deg_left_) best = std::max(best, d);
  for (int d : deg_right_) best = std::max(best, d);
  return best;
}

bool BipartiteMultigraph::intersect(int id1, int id2) const {
  const auto& a = edge(id1);
  const auto& b = edge(id2);
  return a.u == b.u || a.v == b.v;
}

// ---------------------------------------------------------------------------
// Structure queries

bool is_regular(const Tripartite3Graph& h, int r) {
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < h.class_size(c); ++i) {
      if (h.degree(c, i) != r) return false;
    }
  }
  return true;
}

bool is_regular(const BipartiteMultigraph& g, int r) {
  for (int i = 0; i < g.left_size(); ++i) {
    if (g.degree({0, i}) != r) return false;
  }
  for (int i = 0; i < g.right_size(); ++i) {
    if (g.degree({1, i}) != r) return false;
  }
  return true;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<Component3> components(const Tripartite3Graph& h) {
  const auto& n = h.class_sizes();
  const std::array<int, 3> offset{0, n[0], n[0] + n[1]};
  UnionFind uf(h.vertex_count());
  for (const auto& e : h.edges()) {
    uf.unite(offset[0] + e.v[0], offset[1] + e.v[1]);
    uf.unite(offset[0] + e.v[0], offset[2] + e.v[2]);
  }
  // Roots are minimal global indices, and global order equals (cls, index)
  // order, so iterating vertices in order visits components by smallest vertex.
  std::map<int, std::size_t> slot;
  std::vector<Component3> out;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < n[c]; ++i) {
      const int root = uf.find(offset[c] + i);
      auto [it, inserted] = slot.try_emplace(root, out.size());
      if (inserted) out.emplace_back();
      out[it->second].vertices.push_back({c, i});
    }
  }
  for (const auto& e : h.edges()) {
    out[slot.at(uf.find(offset[0] + e.v[0]))].edge_ids.push_back(e.id);
  }
  return out;
}

std::vector<ComponentB> components(const BipartiteMultigraph& g) {
  const int nl = g.left_size();
  UnionFind uf(nl + g.right_size());
  for (const auto& e : g.edges()) uf.unite(e.u, nl + e.v);
  std::map<int, std::size_t> slot;
  std::vector<ComponentB> out;
  for (int x = 0; x < nl + g.right_size(); ++x) {
    auto [it, inserted] = slot.try_emplace(uf.find(x), out.size());
    if (inserted) out.emplace_back();
    out[it->second].vertices.push_back(x < nl ? VertexRef{0, x} : VertexRef{1, x - nl});
  }
  for (const auto& e : g.edges()) out[slot.at(uf.find(e.u))].edge_ids.push_back(e.id);
  return out;
}

ComponentSubgraph3 extract(const Tripartite3Graph& h, const Component3& comp) {
  ComponentSubgraph3 sub;
  std::array<std::map<int, int>, 3> local;
  for (const auto& v : comp.vertices) {
    local[v.cls][v.index] = static_cast<int>(sub.vertex_of[v.cls].size());
    sub.vertex_of[v.cls].push_back(v.index);
  }
  sub.graph = Tripartite3Graph({static_cast<int>(sub.vertex_of[0].size()),
                                static_cast<int>(sub.vertex_of[1].size()),
                                static_cast<int>(sub.vertex_of[2].size())});
  for (int id : comp.edge_ids) {
    const auto& e = h.edge(id);
    sub.graph.add_edge(local[0].at(e.v[0]), local[1].at(e.v[1]), local[2].at(e.v[2]));
    sub.edge_of.push_back(id);
  }
  return sub;
}

Link link(const Tripartite3Graph& h, int cls, std::span<const int> subset) {
  if (cls < 0 || cls > 2) throw InputError("class id must be 0, 1 or 2");
  Link out;
  out.cls = cls;
  out.sides = cls == 0 ? std::array<int, 2>{1, 2}
                       : (cls == 1 ? std::array<int, 2>{0, 2} : std::array<int, 2>{0, 1});
  std::vector<char> in_subset(h.class_size(cls), 0);
  for (int s : subset) {
    if (s < 0 || s >= h.class_size(cls)) throw InputError("link subset vertex out of range");
    in_subset[s] = 1;
  }
  out.graph = BipartiteMultigraph(h.class_size(out.sides[0]), h.class_size(out.sides[1]));
  for (const auto& e : h.edges()) {
    if (!in_subset[e.v[cls]]) continue;
    out.graph.add_edge(e.v[out.sides[0]], e.v[out.sides[1]]);
    out.hosted.push_back(e.id);
  }
  return out;
}

Link link_of_class(const Tripartite3Graph& h, int cls) {
  std::vector<int> all(h.class_size(cls));
  std::iota(all.begin(), all.end(), 0);
  return link(h, cls, all);
}

Tripartite3Graph disjoint_union(const Tripartite3Graph& a, const Tripartite3Graph& b) {
  const auto& na = a.class_sizes();
  const auto& nb = b.class_sizes();
  Tripartite3Graph out({na[0] + nb[0], na[1] + nb[1], na[2] + nb[2]});
  for (const auto& e : a.edges()) out.add_edge(e.v[0], e.v[1], e.v[2]);
  for (const auto& e : b.edges()) out.add_edge(e.v[0] + na[0], e.v[1] + na[1], e.v[2] + na[2]);
  return out;
}

BipartiteMultigraph disjoint_union(const BipartiteMultigraph& a, const BipartiteMultigraph& b) {
  BipartiteMultigraph out(a.left_size() + b.left_size(), a.right_size() + b.right_size());
  for (const auto& e : a.edges()) out.add_edge(e.u, e.v);
  for (const auto& e : b.edges()) out.add_edge(e.u + a.left_size(), e.v + a.right_size());
  return out;
}

// ---------------------------------------------------------------------------
// Validity checks

bool is_matching(const Tripartite3Graph& h, std::span<const int> edge_ids) {
  std::array<std::vector<char>, 3> used;
  for (int c = 0; c < 3; ++c) used[c].assign(h.class_size(c), 0);
  for (int id : edge_ids) {
    if (id < 0 || id >= static_cast<int>(h.edge_count())) return false;
    const auto& e = h.edge(id);
    for (int c = 0; c < 3; ++c) {
      if (used[c][e.v[c]]) return false;
      used[c][e.v[c]] = 1;
    }
  }
  return true;
}

bool is_cover(const Tripartite3Graph& h, std::span<const VertexRef> cover) {
  std::array<std::vector<char>, 3> in;
  for (int c = 0; c < 3; ++c) in[c].assign(h.class_size(c), 0);
  for (const auto& v : cover) {
    if (v.cls < 0 || v.cls > 2 || v.index < 0 || v.index >= h.class_size(v.cls)) return false;
    in[v.cls][v.index] = 1;
  }
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge3& e) {
    return in[0][e.v[0]] || in[1][e.v[1]] || in[2][e.v[2]];
  });
}

bool is_matching(const BipartiteMultigraph& g, std::span<const int> edge_ids) {
  std::vector<char> left(g.left_size(), 0);
  std::vector<char> right(g.right_size(), 0);
  for (int id : edge_ids) {
    if (id < 0 || id >= static_cast<int>(g.edge_count())) return false;
    const auto& e = g.edge(id);
    if (left[e.u] || right[e.v]) return false;
    left[e.u] = right[e.v] = 1;
  }
  return true;
}

bool is_cover(const BipartiteMultigraph& g, std::span<const VertexRef> cover) {
  std::vector<char> left(g.left_size(), 0);
  std::vector<char> right(g.right_size(), 0);
  for (const auto& v : cover) {
    if (v.cls == 0 && v.index >= 0 && v.index < g.left_size()) {
      left[v.index] = 1;
    } else if (v.cls == 1 && v.index >= 0 && v.index < g.right_size()) {
      right[v.index] = 1;
    } else {
      return false;
    }
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const EdgeB& e) { return left[e.u] || right[e.v]; });
}

std::vector<int> dedup_edge_ids(const Tripartite3Graph& h) {
  std::map<std::array<int, 3>, int> first;
  for (const auto& e : h.edges()) first.try_emplace(e.v, e.id);
  std::vector<int> ids;
  ids.reserve(first.size());
  for (const auto& [key, id] : first) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// ---------------------------------------------------------------------------
// nu_exact

namespace {

class MatchingSearch {
 public:
  MatchingSearch(const Tripartite3Graph& h, std::vector<int> order) : h_(h), order_(std::move(order)) {
    for (int c = 0; c < 3; ++c) {
      used_[c].assign(h.class_size(c), 0);
      stamp_[c].assign(h.class_size(c), 0);
    }
  }

  Matching run() {
    dfs(0);
    Matching m;
    m.size = static_cast<int>(best_.size());
    m.edge_ids = best_;
    std::sort(m.edge_ids.begin(), m.edge_ids.end());
    return m;
  }

 private:
  bool free(const Edge3& e) const {
    return !used_[0][e.v[0]] && !used_[1][e.v[1]] && !used_[2][e.v[2]];
  }

  // Upper bound on how many of order_[i..] can still be added.
  int remaining_bound(std::size_t i) {
    ++tick_;
    std::array<int, 3> distinct{0, 0, 0};
    int count = 0;
    for (std::size_t k = i; k < order_.size(); ++k) {
      const auto& e = h_.edge(order_[k]);
      if (!free(e)) continue;
      ++count;
      for (int c = 0; c < 3; ++c) {
        if (stamp_[c][e.v[c]] != tick_) {
          stamp_[c][e.v[c]] = tick_;
          ++distinct[c];
        }
      }
    }
    return std::min({count, distinct[0], distinct[1], distinct[2]});
  }

  void dfs(std::size_t i) {
    const int size = static_cast<int>(current_.size());
    if (size > static_cast<int>(best_.size())) best_ = current_;
    if (i == order_.size()) return;
    if (size + remaining_bound(i) <= static_cast<int>(best_.size())) return;
    const auto& e = h_.edge(order_[i]);
    if (free(e)) {
      for (int c = 0; c < 3; ++c) used_[c][e.v[c]] = 1;
      current_.push_back(e.id);
      dfs(i + 1);
      current_.pop_back();
      for (int c = 0; c < 3; ++c) used_[c][e.v[c]] = 0;
    }
    dfs(i + 1);
  }

  const Tripartite3Graph& h_;
  std::vector<int> order_;
  std::array<std::vector<char>, 3> used_;
  std::array<std::vector<unsigned>, 3> stamp_;
  unsigned tick_ = 0;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

Matching nu_exact(const Tripartite3Graph& h, const ExactLimits& limits) {
  auto ids = dedup_edge_ids(h);
  if (static_cast<int>(ids.size()) > limits.max_dedup_edges) {
    throw ResourceError("nu_exact: " + std::to_string(ids.size()) +
                        " deduplicated edges exceed the cap of " +
                        std::to_string(limits.max_dedup_edges));
  }
  auto degree_sum = [&](int id) {
    const auto& e = h.edge(id);
    return h.degree(0, e.v[0]) + h.degree(1, e.v[1]) + h.degree(2, e.v[2]);
  };
  const std::set<int> kept(ids.begin(), ids.end());
  Matching m;
  for (const auto& comp : components(h)) {
    std::vector<int> part;
    for (int id : comp.edge_ids) {
      if (kept.count(id)) part.push_back(id);
    }
    if (part.empty()) continue;
    std::sort(part.begin(), part.end(), [&](int a, int b) {
      const int da = degree_sum(a);
      const int db = degree_sum(b);
      return da != db ? da > db : a < b;
    });
    const auto sub = MatchingSearch(h, std::move(part)).run();
    m.size += sub.size;
    m.edge_ids.insert(m.edge_ids.end(), sub.edge_ids.begin(), sub.edge_ids.end());
  }
  std::sort(m.edge_ids.begin(), m.edge_ids.end());
  return m;
}

// ---------------------------------------------------------------------------
// tau_exact

namespace {

class CoverSearch {
 public:
  CoverSearch(const Tripartite3Graph& h, std::vector<int> edges) : h_(h), edges_(std::move(edges)) {
    for (int c = 0; c < 3; ++c) in_[c].assign(h.class_size(c), 0);
  }

  std::optional<std::vector<VertexRef>> find(int budget) {
    chosen_.clear();
    if (search(budget)) return chosen_;
    return std::nullopt;
  }

 private:
  bool covered(const Edge3& e) const { return in_[0][e.v[0]] || in_[1][e.v[1]] || in_[2][e.v[2]]; }

  // Greedy count of pairwise disjoint uncovered edges: a lower bound on the
  // number of vertices still needed.
  int disjoint_uncovered() const {
    std::array<std::vector<char>, 3> used;
    for (int c = 0; c < 3; ++c) used[c].assign(h_.class_size(c), 0);
    int count = 0;
    for (int id : edges_) {
      const auto& e = h_.edge(id);
      if (covered(e) || used[0][e.v[0]] || used[1][e.v[1]] || used[2][e.v[2]]) continue;
      for (int c = 0; c < 3; ++c) used[c][e.v[c]] = 1;
      ++count;
    }
    return count;
  }

  bool search(int budget) {
    const Edge3* open = nullptr;
    for (int id : edges_) {
      if (!covered(h_.edge(id))) {
        open = &h_.edge(id);
        break;
      }
    }
    if (open == nullptr) return true;
    if (budget == 0 || disjoint_uncovered() > budget) return false;
    for (int c = 0; c < 3; ++c) {
      const int idx = open->v[c];
      in_[c][idx] = 1;
      chosen_.push_back({c, idx});
      if (search(budget - 1)) return true;
      chosen_.pop_back();
      in_[c][idx] = 0;
    }
    return false;
  }

  const Tripartite3Graph& h_;
  std::vector<int> edges_;
  std::array<std::vector<char>, 3> in_;
  std::vector<VertexRef> chosen_;
};

}  // namespace

Cover tau_exact(const Tripartite3Graph& h, const ExactLimits& limits) {
  int active = 0;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < h.class_size(c); ++i) active += h.degree(c, i) > 0 ? 1 : 0;
  }
  if (active > limits.max_cover_vertices) {
    throw ResourceError("tau_exact: " + std::to_string(active) +
                        " non-isolated vertices exceed the cap of " +
                        std::to_string(limits.max_cover_vertices));
  }
  const int nu = nu_exact(h, limits).size;
  CoverSearch search(h, dedup_edge_ids(h));
  for (int k = nu; k <= 3 * nu; ++k) {
    if (auto found = search.find(k)) {
      Cover cover;
      cover.size = static_cast<int>(found->size());
      cover.vertices = std::move(*found);
      std::sort(cover.vertices.begin(), cover.vertices.end());
      return cover;
    }
  }
  throw TheoryDiscrepancy("tau_exact: no cover of size <= 3 nu found");
}

// ---------------------------------------------------------------------------
// Bipartite matching and Koenig cover

namespace {

struct BipartiteMatcher {
  explicit BipartiteMatcher(const BipartiteMultigraph& g)
      : g(g), adj(g.left_size()), mate_left(g.left_size(), -1), mate_right(g.right_size(), -1),
        edge_left(g.left_size(), -1) {
    // One representative (smallest id) per parallel class.
    std::map<std::pair<int, int>, int> rep;
    for (const auto& e : g.edges()) rep.try_emplace({e.u, e.v}, e.id);
    for (const auto& [key, id] : rep) adj[key.first].push_back({key.second, id});
    for (int u = 0; u < g.left_size(); ++u) {
      std::vector<char> seen(g.right_size(), 0);
      augment(u, seen);
    }
  }

  bool augment(int u, std::vector<char>& seen) {
    for (const auto& [v, id] : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (mate_right[v] < 0 || augment(mate_right[v], seen)) {
        mate_right[v] = u;
        mate_left[u] = v;
        edge_left[u] = id;
        return true;
      }
    }
    return false;
  }

  const BipartiteMultigraph& g;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (right vertex, edge id)
  std::vector<int> mate_left;
  std::vector<int> mate_right;
  std::vector<int> edge_left;
};

}  // namespace

Matching nu_bip(const BipartiteMultigraph& g) {
  BipartiteMatcher m(g);
  Matching out;
  for (int u = 0; u < g.left_size(); ++u) {
    if (m.edge_left[u] >= 0) out.edge_ids.push_back(m.edge_left[u]);
  }
  std::sort(out.edge_ids.begin(), out.edge_ids.end());
  out.size = static_cast<int>(out.edge_ids.size());
  return out;
}

Cover tau_bip(const BipartiteMultigraph& g) {
  BipartiteMatcher m(g);
  std::vector<char> reach_left(g.left_size(), 0);
  std::vector<char> reach_right(g.right_size(), 0);
  std::queue<int> frontier;
  for (int u = 0; u < g.left_size(); ++u) {
    if (m.mate_left[u] < 0) {
      reach_left[u] = 1;
      frontier.push(u);
    }
  }
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (const auto& [v, id] : m.adj[u]) {
      if (reach_right[v]) continue;
      reach_right[v] = 1;
      const int w = m.mate_right[v];
      if (w >= 0 && !reach_left[w]) {
        reach_left[w] = 1;
        frontier.push(w);
      }
    }
  }
  Cover cover;
  for (int u = 0; u < g.left_size(); ++u) {
    if (!reach_left[u]) cover.vertices.push_back({0, u});
  }
  for (int v = 0; v < g.right_size(); ++v) {
    if (reach_right[v]) cover.vertices.push_back({1, v});
  }
  cover.size = static_cast<int>(cover.vertices.size());
  int matched = 0;
  for (int u = 0; u < g.left_size(); ++u) matched += m.mate_left[u] >= 0 ? 1 : 0;
  if (cover.size != matched || !is_cover(g, cover.vertices)) {
    throw TheoryDiscrepancy("tau_bip: Koenig cut is not a cover of matching size");
  }
  return cover;
}

}  // namespace t3lab
