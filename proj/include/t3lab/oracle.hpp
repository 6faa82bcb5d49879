#pragma once

// Exhaustive references for tiny instances. Deliberately naive; shares no
// code with the main algorithms beyond the data types.

#include <optional>
#include <string>

#include "t3lab/hypercore.hpp"
#include "t3lab/topology.hpp"

namespace t3lab::oracle {

struct OracleBudget {
  int max_vertices = 18;  // tau_bruteforce: total vertex count
  int max_edges = 12;     // nu_bruteforce: deduplicated edges
  int max_complex_vertices = 14;  // eta_bruteforce: graph order
  int max_dim = 12;

  void check() const;
};

// Defaults overridden by T3LAB_BUDGET, e.g. "vertices=20,edges=14,complex=12,dim=10".
OracleBudget budget_from_env();
OracleBudget parse_budget(const std::string& text, OracleBudget base = {});

int nu_bruteforce(const Tripartite3Graph& h, const OracleBudget& budget = {});
int nu_bruteforce(const BipartiteMultigraph& g, const OracleBudget& budget = {});
int tau_bruteforce(const Tripartite3Graph& h, const OracleBudget& budget = {});

struct OracleEta {
  EtaValue eta = EtaValue::finite(0);
  bool torsion = false;  // some H~_i has torsion
  bool flagged = false;  // acyclic but greedy collapse did not reach a point
};

// Integral reduced homology of the whole independence complex by dense
// Smith normal form on arbitrary-precision integers. Infinite only when the
// complex is a cone or collapses to a point.
OracleEta eta_bruteforce(const SimpleGraph& j, const OracleBudget& budget = {});

// Greedy elementary collapses of the independence complex.
bool collapses_to_point(const SimpleGraph& j);

}  // namespace t3lab::oracle
