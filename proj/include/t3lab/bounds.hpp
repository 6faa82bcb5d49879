#pragma once

// Exact verifiers for the matching / connectedness bounds, the small LP
// behind the explosion counting argument, and the Hall-type witness search.

#include <optional>
#include <vector>

#include "t3lab/hypercore.hpp"
#include "t3lab/linegraph.hpp"
#include "t3lab/rational.hpp"
#include "t3lab/report.hpp"
#include "t3lab/topology.hpp"

namespace t3lab {

// minimise t = x1 + x2 + 2 x3 subject to
//   x1 + 2 x2 + 3 x3 >= nu
//   (3r-2) x1 + (2r-1) x2 + (6r-5) x3 >= v
//   x >= 0
// Dual: maximise nu y1 + v y2 subject to
//   y1 + (3r-2) y2 <= 1,  2 y1 + (2r-1) y2 <= 1,  3 y1 + (6r-5) y2 <= 2.
struct LpSolution {
  Rational x1, x2, x3;
  Rational t;
  Rational y1, y2;
  Rational dual_objective;
  Rational gap;  // t - dual_objective
  // (2r-1) nu / 2 <= v <= (6r-5) nu / 3: the point with x1 = 0 and both
  // constraints tight is feasible and optimal.
  bool closed_form_applies = false;
  Rational closed_form_t;  // ((2r-3) nu + v) / (6r-7)
};

// Exact optimum by enumerating the basic points of the primal and of the
// dual. Among tied optimal primal vertices the one with the smallest x1
// (then x2) is reported. Throws TheoryDiscrepancy if the closed form applies
// and disagrees, or if the certificate y = ((2r-3), 1) / (6r-7) is not dual
// feasible.
LpSolution lp_min(int nu, int v, int r);

bool primal_feasible(const LpSolution& s, int nu, int v, int r);
bool dual_feasible(const Rational& y1, const Rational& y2, int r);

// epsilon := max(0, 2 nu / n - 1); 0 when n = 0.
Rational derived_epsilon(int nu, int n);

BoundReport check_thm_1_3(const Tripartite3Graph& h, const ExactLimits& limits = {});
BoundReport check_thm_1_2(const Tripartite3Graph& h, int r, const ExactLimits& limits = {});

// eta(J) >= ((2r-3) nu(G_J) + |V(J)|) / (6r-7) for G of max degree <= r
// with no r-regular C4 component.
BoundReport check_thm_3_1(const BipartiteMultigraph& g, const LineSubgraph& j, int r,
                          const EtaFn& eta_fn);

// eta(L(G)) >= ((2r-3) nu(G) + |E(G)| - k) / (6r-7), k = number of r-regular
// C4 components (computed).
BoundReport check_cor_3_8(const BipartiteMultigraph& g, int r, const EtaFn& eta_fn);

// eta(L(G)) >= nu(G) / 2.
BoundReport check_thm_2_5(const BipartiteMultigraph& g, const EtaFn& eta_fn);

struct HallWitness {
  std::vector<int> subset;  // lexicographically least maximiser
  int defect = 0;           // max over S of |S| - eta(L(lk S)); infinite eta counts as -inf
  int nu = 0;
  int class_size = 0;
};

// Scans all subsets of the class (size <= max_class). Throws
// TheoryDiscrepancy if nu(h) < |class| - max(defect, 0).
HallWitness hall_witness(const Tripartite3Graph& h, int cls, const EtaFn& eta_fn,
                         int max_class = 16);

BoundReport check_thm_2_2(const Tripartite3Graph& h, int cls, const EtaFn& eta_fn);

// Degree conditions: every vertex of A = V_0 has degree >= r, every vertex of
// B and C degree <= r.
bool abc_degree_conditions(const Tripartite3Graph& h, int r);

BoundReport check_thm_4_1(const Tripartite3Graph& h, int r, const ExactLimits& limits = {});

// The two transformations replayed before counting for the A/B/C version.
struct Thm42Transform {
  Tripartite3Graph trimmed;      // class-A degrees cut to exactly r
  Tripartite3Graph transformed;  // perfect-matching components replaced
  int replaced_components = 0;
};

// Trimming removes, for each vertex of A of degree > r, its highest-id
// edges. Each component with k vertices per class and a matching of size k
// is replaced by r parallel copies of that matching.
Thm42Transform thm_4_2_transform(const Tripartite3Graph& h, int r,
                                 const ExactLimits& limits = {});

BoundReport check_thm_4_2(const Tripartite3Graph& h, int r, const ExactLimits& limits = {});
BoundReport check_lemma_4_2(const Tripartite3Graph& h, int r, const ExactLimits& limits = {});

// Dichotomy of hosted edges over every r-regular C4 component of every link
// where the degree precondition holds.
BoundReport check_lemma_4_3(const Tripartite3Graph& h, int r);

// Every C4 component hosting two disjoint edges whose vertices all sit in
// C4 components of the other links belongs to a Type1 or Type2 component.
BoundReport check_lemma_4_5(const Tripartite3Graph& h, int r);

}  // namespace t3lab
