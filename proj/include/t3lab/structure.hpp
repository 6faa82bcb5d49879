#pragma once

// Detectors for r-regular C4 components of links, (r/2)F components,
// hosted-edge analysis, perfect-matching components, and bad vertices.

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "t3lab/hypercore.hpp"
#include "t3lab/report.hpp"

namespace t3lab {

// An r-regular C4 component of a bipartite multigraph: two left and two
// right vertices, all four left-right pairs present, every degree r.
struct C4Report {
  std::array<int, 2> left{};   // sorted
  std::array<int, 2> right{};  // sorted
  int r = 0;
  // sides[i][j]: edge ids joining left[i] and right[j].
  std::array<std::array<std::vector<int>, 2>, 2> sides;
  std::vector<int> edge_ids;  // sorted, all sides
};

std::vector<C4Report> find_c4_components(const BipartiteMultigraph& g, int r);
bool has_c4_component(const BipartiteMultigraph& g, int r);

// A C4 component of the link of a whole vertex class.
struct LinkC4 {
  int cls = 0;  // class whose link contains it
  C4Report c4;
  std::vector<VertexRef> vertices() const;  // host vertex refs
};

std::vector<LinkC4> find_link_c4s(const Tripartite3Graph& h, int cls, int r);

// Hypergraph edge ids hosted by the C4 (preimage of its link edges).
// Throws InputError if the report does not match the current link.
std::vector<int> hosted_edges(const Tripartite3Graph& h, int cls, const C4Report& c4);

// A component consisting of six vertices (two per class) whose edges are
// the four shapes of the truncated Fano plane, each with multiplicity r/2.
struct FanoReport {
  std::array<std::array<int, 2>, 3> vertices{};  // per class, sorted
  int multiplicity = 0;                          // r/2
  std::array<std::array<int, 3>, 4> shapes{};    // the four triples, sorted
  std::vector<int> edge_ids;
};

// Checks whether the given edges are exactly s.F on the given vertex pairs.
std::optional<FanoReport> match_scaled_fano(const Tripartite3Graph& h,
                                            const std::vector<int>& edge_ids);

struct FanoScan {
  std::vector<FanoReport> reports;
  std::optional<std::string> warning;
};

// Components of h that are copies of (r/2).F. Odd r yields no reports and a
// warning.
FanoScan find_fano_components(const Tripartite3Graph& h, int r);

// Searches every class-respecting choice of two vertices per class for a
// sub-multigraph copy of s.F (each of the four shapes present with
// multiplicity >= s, under either parity labelling).
std::optional<FanoReport> find_fano_subcopy(const Tripartite3Graph& h, int s);

struct TwoDisjoint {
  std::array<int, 2> edge_ids{};
};
struct FormsHalfFano {
  FanoReport fano;
};
using C4Dichotomy = std::variant<TwoDisjoint, FormsHalfFano>;

// The edges hosted by an r-regular C4 in lk(cls) either contain two disjoint
// edges or form (r/2).F, provided vertices of `cls` on hosted edges have
// degree <= r. Throws InputError on the degree precondition and
// TheoryDiscrepancy if neither branch holds.
C4Dichotomy c4_dichotomy(const Tripartite3Graph& h, int cls, const C4Report& c4);

enum class PmComponentType { Type1, Type2, Other };

std::string to_string(PmComponentType t);

// Type1: 2 vertices per class and a matching of size 2; Type2: 4 per class
// and a matching of size 4.
PmComponentType classify_pm_component(const Tripartite3Graph& h, const Component3& comp);

// Component of h containing vertex v.
Component3 component_containing(const Tripartite3Graph& h, VertexRef v);

// bad[i] for a vertex v: v lies in a component of lk V_i that is not an
// r-regular C4 (only meaningful for i != v.cls).
struct VertexBadness {
  VertexRef vertex;
  std::array<bool, 3> bad_in{false, false, false};
  bool bad() const { return bad_in[0] || bad_in[1] || bad_in[2]; }
};

class BadnessTable {
 public:
  BadnessTable() = default;
  BadnessTable(std::array<int, 3> sizes, std::vector<VertexBadness> rows);

  const VertexBadness& at(VertexRef v) const;
  const std::vector<VertexBadness>& rows() const { return rows_; }
  int bad_count() const;
  bool empty() const { return rows_.empty(); }

 private:
  std::array<int, 3> offset_{0, 0, 0};
  std::vector<VertexBadness> rows_;
};

BadnessTable badness(const Tripartite3Graph& h, int r);

struct C4Partition {
  std::vector<LinkC4> good;
  std::vector<LinkC4> ruined;
};

C4Partition good_c4s(const Tripartite3Graph& h, int cls, int r);

int bad_vertex_count(const LinkC4& c4, const BadnessTable& table);

// For a C4 component of lk V_i with exactly one bad vertex (in V_j, V_k-bad):
// checks the two companion C4s of lk V_j (two bad vertices each, one V_i-bad
// and one V_k-bad), the companion C4 of lk V_k with exactly one V_i-bad
// vertex in V_j, and that no other r-regular C4 component touches the four.
// Throws InputError if the badness profile or max-degree hypothesis fails.
BoundReport check_one_bad_vertex_structure(const Tripartite3Graph& h, int r,
                                           const LinkC4& c4);

// Runs the check on every C4 component (any link) with exactly one bad
// vertex; a vacuous pass when there is none.
BoundReport check_lemma_4_6(const Tripartite3Graph& h, int r);

nlohmann::ordered_json to_json(const C4Report& c4);
nlohmann::ordered_json to_json(const FanoReport& f);

}  // namespace t3lab
