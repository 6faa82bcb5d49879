#pragma once

// Subgraphs J of the line graph L(G) of a bipartite multigraph G, the
// deletion / explosion moves on them, reduction, explosion typing, and the
// certified explosion sequence.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "t3lab/hypercore.hpp"
#include "t3lab/rational.hpp"
#include "t3lab/topology.hpp"

namespace t3lab {

// Unordered pair of edge ids of the host, stored with first < second.
struct Adjacency {
  int first = 0;
  int second = 0;

  static Adjacency of(int a, int b) { return a < b ? Adjacency{a, b} : Adjacency{b, a}; }
  friend auto operator<=>(const Adjacency&, const Adjacency&) = default;
};

class LineSubgraph {
 public:
  LineSubgraph(std::shared_ptr<const BipartiteMultigraph> host, std::vector<int> vertices,
               std::set<Adjacency> adjacencies);

  const BipartiteMultigraph& host() const { return *host_; }
  const std::shared_ptr<const BipartiteMultigraph>& host_ptr() const { return host_; }
  const std::vector<int>& vertices() const { return vertices_; }  // sorted edge ids
  const std::set<Adjacency>& adjacencies() const { return adjacencies_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  bool contains(int id) const;
  bool has(const Adjacency& a) const { return adjacencies_.contains(a); }

  // Graph on positions 0..|V(J)|-1 in vertex order.
  SimpleGraph to_simple_graph() const;
  // Position of an edge id in vertices().
  int position(int id) const;

 private:
  std::shared_ptr<const BipartiteMultigraph> host_;
  std::vector<int> vertices_;
  std::set<Adjacency> adjacencies_;
};

LineSubgraph full_line(const BipartiteMultigraph& g);
LineSubgraph full_line(std::shared_ptr<const BipartiteMultigraph> g);

// G_J: the host restricted to V(J), all host vertices kept. Edge ids of the
// result are dense; edge_of maps them back to host ids.
struct HostRestriction {
  BipartiteMultigraph graph;
  std::vector<int> edge_of;
};

HostRestriction g_of(const LineSubgraph& j);
int nu_of(const LineSubgraph& j);  // nu(G_J)

LineSubgraph delete_adjacency(const LineSubgraph& j, const Adjacency& a);
LineSubgraph explode(const LineSubgraph& j, const Adjacency& a);

EtaValue eta_of(const LineSubgraph& j, const EtaFn& eta_fn);
bool is_decouplable(const LineSubgraph& j, const Adjacency& a, const EtaFn& eta_fn);
bool is_explodable(const LineSubgraph& j, const Adjacency& a, const EtaFn& eta_fn);

// ---------------------------------------------------------------------------
// Reduction

struct Reduction {
  LineSubgraph result;
  std::vector<Adjacency> deleted;  // in deletion order
  EtaValue eta_before;
  EtaValue eta_after;
};

// Repeated ascending passes over the adjacencies, deleting each one that is
// decouplable at the time it is visited, until a pass deletes nothing.
Reduction reduce(const LineSubgraph& j, const EtaFn& eta_fn);

// Same, visiting adjacencies in a random order drawn from `seed`.
Reduction reduce_shuffled(const LineSubgraph& j, const EtaFn& eta_fn, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Explosion types

enum class ExplosionType { Type1, Type2, Type3, Untyped };

int type_index(ExplosionType t);  // 1, 2, 3, or 0 for Untyped

struct PairClassification {
  ExplosionType type = ExplosionType::Untyped;
  int nu_drop = 0;
  int vertex_drop = 0;
  // Type 3 only: the follow-up pair in the canonical reduction of J * me and
  // the combined drops of both explosions relative to J.
  std::optional<Adjacency> followup;
  int total_nu_drop = 0;
  int total_vertex_drop = 0;
  // Set when verification orders were requested for a Type 3 pair: false if
  // some shuffled reduction had no qualifying follow-up pair.
  std::optional<bool> reduction_orders_agree;
};

struct ClassifyOptions {
  int verify_orders = 0;  // extra random reduction orders checked for Type 3
  std::uint64_t seed = 1;
};

PairClassification classify_pair(const LineSubgraph& j, const Adjacency& a, int r,
                                  const EtaFn& eta_fn, const ClassifyOptions& options = {});

// ---------------------------------------------------------------------------
// Explosion sequence

struct ExplosionStep {
  enum class Kind { Delete, Explode };
  Kind kind = Kind::Delete;
  Adjacency pair;
  ExplosionType type = ExplosionType::Untyped;  // Explode only
  bool followup = false;                        // second explosion of a Type 3 unit
};

struct ExplosionCertificate {
  int r = 0;
  int nu = 0;     // nu(G)
  int edges = 0;  // |E(G)|
  std::vector<ExplosionStep> steps;
  int x1 = 0;
  int x2 = 0;
  int x3 = 0;
  int t = 0;  // x1 + x2 + 2 x3
  // True when the sequence ended in an edgeless J with a vertex left, which
  // shows eta = infinity.
  bool infinite = false;

  Rational bound() const;  // ((2r-3) nu + |E|) / (6r-7)
  bool bound_applies() const;  // |E| >= (2r-1) nu / 2
};

ExplosionCertificate explosion_sequence(const BipartiteMultigraph& g, int r,
                                        const EtaFn& eta_fn);

// Replays a certificate from L(G); returns the final subgraph. Throws
// InputError if a step is not applicable.
LineSubgraph replay(const BipartiteMultigraph& g, const ExplosionCertificate& cert);

nlohmann::ordered_json to_json(const ExplosionCertificate& cert);

}  // namespace t3lab
