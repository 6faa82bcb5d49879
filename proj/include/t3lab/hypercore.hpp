#pragma once

// Core data model: tripartite 3-multihypergraphs, bipartite multigraphs,
// links, and exact matching / cover numbers.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace t3lab {

struct VertexRef {
  int cls = 0;    // 0, 1, 2 for a tripartite graph; 0 (left), 1 (right) for bipartite
  int index = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

struct Edge3 {
  std::array<int, 3> v{};  // one vertex index per class
  int id = 0;
};

// A 3-partite 3-uniform multihypergraph. Parallel edges are distinct
// instances with their own ids; ids are dense 0..|E|-1 in insertion order.
class Tripartite3Graph {
 public:
  Tripartite3Graph() = default;
  explicit Tripartite3Graph(std::array<int, 3> class_sizes);

  // Appends an edge and returns its id.
  int add_edge(int a, int b, int c);
  void add_edge(int a, int b, int c, int multiplicity);

  const std::array<int, 3>& class_sizes() const { return sizes_; }
  int class_size(int cls) const { return sizes_.at(cls); }
  int vertex_count() const { return sizes_[0] + sizes_[1] + sizes_[2]; }
  const std::vector<Edge3>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge3& edge(int id) const { return edges_.at(id); }

  int degree(VertexRef v) const;
  int degree(int cls, int index) const { return degree(VertexRef{cls, index}); }
  int max_degree() const;

  // Sub-hypergraph on the same vertex set keeping the listed edge ids
  // (re-numbered densely in the given order).
  Tripartite3Graph with_edges(std::span<const int> ids) const;

 private:
  void check_vertex(VertexRef v) const;

  std::array<int, 3> sizes_{0, 0, 0};
  std::vector<Edge3> edges_;
  std::array<std::vector<int>, 3> degree_;
};

struct EdgeB {
  int u = 0;  // left index
  int v = 0;  // right index
  int id = 0;
};

class BipartiteMultigraph {
 public:
  BipartiteMultigraph() = default;
  BipartiteMultigraph(int n_left, int n_right);

  int add_edge(int u, int v);
  void add_edge(int u, int v, int multiplicity);

  int left_size() const { return n_left_; }
  int right_size() const { return n_right_; }
  const std::vector<EdgeB>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const EdgeB& edge(int id) const { return edges_.at(id); }

  int degree(VertexRef v) const;
  int max_degree() const;

  // Two edge instances intersect when they share a left or a right vertex
  // (parallel edges share both).
  bool intersect(int id1, int id2) const;

 private:
  int n_left_ = 0;
  int n_right_ = 0;
  std::vector<EdgeB> edges_;
  std::vector<int> deg_left_;
  std::vector<int> deg_right_;
};

// ---------------------------------------------------------------------------
// Structure queries

bool is_regular(const Tripartite3Graph& h, int r);
bool is_regular(const BipartiteMultigraph& g, int r);

struct Component3 {
  std::vector<VertexRef> vertices;  // sorted
  std::vector<int> edge_ids;        // sorted
};

// Connected components through shared vertices; an isolated vertex is a
// singleton component. Ordered by smallest vertex.
std::vector<Component3> components(const Tripartite3Graph& h);

struct ComponentB {
  std::vector<VertexRef> vertices;  // cls 0 = left, 1 = right
  std::vector<int> edge_ids;
};

std::vector<ComponentB> components(const BipartiteMultigraph& g);

// The bipartite multigraph induced by a single component, re-indexed, plus
// the maps back to the host.
struct ComponentSubgraph3 {
  Tripartite3Graph graph;
  std::array<std::vector<int>, 3> vertex_of;  // local index -> host index
  std::vector<int> edge_of;                   // local id -> host id
};

ComponentSubgraph3 extract(const Tripartite3Graph& h, const Component3& comp);

// Link of a vertex subset S of class `cls`. The two remaining classes keep
// their order: the smaller class index is the left side. Link edge i comes
// from hypergraph edge hosted[i].
struct Link {
  int cls = 0;
  std::array<int, 2> sides{};  // class ids of left and right
  BipartiteMultigraph graph;
  std::vector<int> hosted;
};

Link link(const Tripartite3Graph& h, int cls, std::span<const int> subset);
Link link_of_class(const Tripartite3Graph& h, int cls);

// Disjoint union; the second graph's vertices are shifted past the first's.
Tripartite3Graph disjoint_union(const Tripartite3Graph& a, const Tripartite3Graph& b);
BipartiteMultigraph disjoint_union(const BipartiteMultigraph& a, const BipartiteMultigraph& b);

// ---------------------------------------------------------------------------
// Exact matching and cover numbers

struct Matching {
  int size = 0;
  std::vector<int> edge_ids;  // sorted
};

struct Cover {
  int size = 0;
  std::vector<VertexRef> vertices;  // sorted
};

struct ExactLimits {
  int max_dedup_edges = 60;    // nu_exact
  int max_cover_vertices = 24;  // tau_exact, counted over non-isolated vertices
};

// Branch-and-bound over parallel-deduplicated edges, ordered by degree sum
// (descending) then id, one connected component at a time. Throws
// ResourceError above the cap.
Matching nu_exact(const Tripartite3Graph& h, const ExactLimits& limits = {});

// Iterative deepening from nu upward; each depth is a bounded search that
// branches on the three vertices of the first uncovered edge.
Cover tau_exact(const Tripartite3Graph& h, const ExactLimits& limits = {});

// Augmenting paths on the deduplicated graph.
Matching nu_bip(const BipartiteMultigraph& g);

// Minimum cover read off the alternating-reachability cut of a maximum
// matching. Throws TheoryDiscrepancy if the cover is not a cover or its size
// differs from the matching size.
Cover tau_bip(const BipartiteMultigraph& g);

bool is_matching(const Tripartite3Graph& h, std::span<const int> edge_ids);
bool is_cover(const Tripartite3Graph& h, std::span<const VertexRef> cover);
bool is_matching(const BipartiteMultigraph& g, std::span<const int> edge_ids);
bool is_cover(const BipartiteMultigraph& g, std::span<const VertexRef> cover);

// Representative ids of the parallel classes (smallest id per (a,b,c)).
std::vector<int> dedup_edge_ids(const Tripartite3Graph& h);

}  // namespace t3lab
