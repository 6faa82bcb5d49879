#pragma once

// Independence complexes and the connectedness parameter eta, computed from
// reduced homology ranks.
//
// eta_H(J) = 1 + min{ i : H~_i(Ind(J)) != 0 }, so a vertexless graph (empty
// complex, H~_{-1} != 0) has eta 0, a disconnected complex has eta 1 and an
// acyclic complex has eta infinite.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace t3lab {

// Simple undirected graph on at most 64 vertices, adjacency as bitmasks.
class SimpleGraph {
 public:
  static constexpr int kMaxOrder = 64;

  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  void add_edge(int u, int v);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  std::uint64_t neighbours(int v) const { return adj_[v]; }
  std::uint64_t all_vertices() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  std::size_t edge_count() const;

  SimpleGraph without_edge(int u, int v) const;
  // Removes both endpoints of uv and all their neighbours.
  SimpleGraph exploded(int u, int v) const;
  // Induced subgraph on `keep`, re-indexed in increasing order.
  SimpleGraph induced(std::uint64_t keep) const;

  bool has_isolated_vertex() const;
  std::vector<std::uint64_t> component_masks() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
  friend auto operator<=>(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

// Extended natural number: Finite(k), Infinite, or AtLeast(cap) when the
// computation stopped at the dimension cap.
class EtaValue {
 public:
  enum class Kind { Finite, Infinite, AtLeast };

  static EtaValue finite(int k) { return EtaValue(Kind::Finite, k); }
  static EtaValue infinite() { return EtaValue(Kind::Infinite, 0); }
  static EtaValue at_least(int cap) { return EtaValue(Kind::AtLeast, cap); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  bool is_at_least() const { return kind_ == Kind::AtLeast; }
  // Finite value, or the cap for AtLeast.
  int value() const { return value_; }

  EtaValue plus(int k) const;

  friend bool operator==(const EtaValue&, const EtaValue&) = default;

 private:
  EtaValue(Kind kind, int value) : kind_(kind), value_(value) {}
  Kind kind_;
  int value_;
};

std::string to_string(const EtaValue& eta);
nlohmann::ordered_json to_json(const EtaValue& eta);

// a <= b under the extended order (Infinite is greatest). Throws
// ResourceError when an AtLeast operand leaves the answer undetermined.
bool eta_le(const EtaValue& a, const EtaValue& b);

// a + b with Infinite absorbing and AtLeast propagating as a lower bound.
EtaValue eta_sum(const EtaValue& a, const EtaValue& b);

enum class Coefficients { Rational, Binary, Integer };

std::string to_string(Coefficients c);
Coefficients parse_coefficients(const std::string& text);  // "q", "f2", "z"

struct EtaOptions {
  Coefficients coeff = Coefficients::Rational;
  int cap = 8;
  int max_vertices = 20;
};

// Reduced homology of the independence complex. betti[i] is the rank of
// H~_i for i = 0..computed_dim (betti[-1] is implicit: nonzero only for the
// empty complex). torsion[i] lists nontrivial invariant factors of H~_i
// (integer coefficients only).
struct HomologyProfile {
  Coefficients coeff = Coefficients::Rational;
  int vertex_count = 0;
  int top_dim = -1;       // dimension of the complex
  int computed_dim = -1;  // highest i with H~_i computed
  std::vector<std::int64_t> face_counts;  // f-vector, index = dimension
  std::vector<std::int64_t> betti;
  std::vector<std::vector<std::int64_t>> torsion;

  bool complete() const { return computed_dim >= top_dim; }
  bool nonvanishing(int i) const;
};

// Computes H~_0..H~_{max_dim} (clamped to the complex dimension).
HomologyProfile reduced_homology(const SimpleGraph& g, Coefficients coeff, int max_dim);

nlohmann::ordered_json to_json(const HomologyProfile& profile);

// eta_H. Isolated vertices short-circuit to Infinite. Over a field, eta is
// additive on components and is evaluated per component; integer
// coefficients evaluate the whole complex. Throws ResourceError if a
// complex exceeds max_vertices.
EtaValue eta(const SimpleGraph& g, const EtaOptions& options = {});

using EtaFn = std::function<EtaValue(const SimpleGraph&)>;

// An EtaFn with a per-instance cache keyed on the labelled graph. Not
// thread-safe; give each worker its own.
class EtaEvaluator {
 public:
  explicit EtaEvaluator(EtaOptions options = {});
  EtaValue operator()(const SimpleGraph& g);
  EtaFn as_fn();
  const EtaOptions& options() const { return options_; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  EtaOptions options_;
  std::map<SimpleGraph, EtaValue> cache_;
};

// eta(J - e) <= eta(J).
bool is_decouplable(const SimpleGraph& j, int u, int v, const EtaFn& eta_fn);
// eta(J * e) <= eta(J) - 1.
bool is_explodable(const SimpleGraph& j, int u, int v, const EtaFn& eta_fn);

// Lower bound from recursive application of
//   eta(J) >= min(eta(J - e), eta(J * e) + 1),
// maximised over the choice of e, memoised on (vertex set, edge set).
struct MeshulamOptions {
  int max_vertices = 14;
  std::size_t max_states = 2'000'000;
};

EtaValue meshulam_game_lb(const SimpleGraph& j, const MeshulamOptions& options = {});

}  // namespace t3lab
