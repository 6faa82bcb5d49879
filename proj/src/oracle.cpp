#include "t3lab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "t3lab/errors.hpp"

namespace t3lab::oracle {

using boost::multiprecision::cpp_int;

void OracleBudget::check() const {
  if (max_vertices < 1 || max_edges < 1 || max_complex_vertices < 1 || max_dim < 0) {
    throw InputError("oracle budget values must be positive");
  }
  if (max_edges > 30 || max_vertices > 30 || max_complex_vertices > 24) {
    throw InputError("oracle budget too large for exhaustive search");
  }
}

OracleBudget parse_budget(const std::string& text, OracleBudget base) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("budget entry without '=': " + item);
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("budget value is not an integer: " + item);
    }
    if (key == "vertices") {
      base.max_vertices = value;
    } else if (key == "edges") {
      base.max_edges = value;
    } else if (key == "complex") {
      base.max_complex_vertices = value;
    } else if (key == "dim") {
      base.max_dim = value;
    } else {
      throw InputError("unknown budget key: " + key);
    }
  }
  base.check();
  return base;
}

OracleBudget budget_from_env() {
  const char* text = std::getenv("T3LAB_BUDGET");
  if (text == nullptr) return {};
  return parse_budget(text);
}

// ---------------------------------------------------------------------------
// Matching and cover by subset enumeration

namespace {

template <class Edge>
int max_disjoint_subset(const std::vector<Edge>& edges) {
  const int m = static_cast<int>(edges.size());
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (int k = i + 1; k < m && ok; ++k) {
        if (!((mask >> k) & 1U)) continue;
        for (std::size_t c = 0; c < edges[i].size(); ++c) {
          if (edges[i][c] == edges[k][c]) ok = false;
        }
      }
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace

int nu_bruteforce(const Tripartite3Graph& h, const OracleBudget& budget) {
  std::set<std::array<int, 3>> distinct;
  for (const auto& e : h.edges()) distinct.insert(e.v);
  if (static_cast<int>(distinct.size()) > budget.max_edges) {
    throw ResourceError("nu_bruteforce: too many distinct edges");
  }
  return max_disjoint_subset(std::vector<std::array<int, 3>>(distinct.begin(), distinct.end()));
}

int nu_bruteforce(const BipartiteMultigraph& g, const OracleBudget& budget) {
  std::set<std::array<int, 2>> distinct;
  for (const auto& e : g.edges()) distinct.insert({e.u, e.v});
  if (static_cast<int>(distinct.size()) > budget.max_edges) {
    throw ResourceError("nu_bruteforce: too many distinct edges");
  }
  return max_disjoint_subset(std::vector<std::array<int, 2>>(distinct.begin(), distinct.end()));
}

int tau_bruteforce(const Tripartite3Graph& h, const OracleBudget& budget) {
  const int n = h.vertex_count();
  if (n > budget.max_vertices) throw ResourceError("tau_bruteforce: too many vertices");
  const auto& sizes = h.class_sizes();
  std::vector<std::uint32_t> edge_masks;
  for (const auto& e : h.edges()) {
    edge_masks.push_back((1U << e.v[0]) | (1U << (sizes[0] + e.v[1])) |
                         (1U << (sizes[0] + sizes[1] + e.v[2])));
  }
  int best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    if (std::all_of(edge_masks.begin(), edge_masks.end(),
                    [&](std::uint32_t e) { return (e & mask) != 0; })) {
      best = size;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Homology by dense Smith normal form

namespace {

using Matrix = std::vector<std::vector<cpp_int>>;

struct Invariants {
  int rank = 0;
  bool torsion = false;
};

// Diagonalises a copy of m; rank and whether any invariant factor exceeds 1.
Invariants smith(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  Invariants out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero absolute entry in the trailing block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const cpp_int q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const cpp_int q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // Pivot must divide the whole trailing block.
        for (std::size_t i = t + 1; i < rows && clean; ++i) {
          for (std::size_t j = t + 1; j < cols && clean; ++j) {
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
              clean = false;
            }
          }
        }
      }
    }
    ++out.rank;
    if (abs(m[t][t]) > 1) out.torsion = true;
    ++t;
  }
  return out;
}

bool independent(const SimpleGraph& g, std::uint32_t mask) {
  for (int v = 0; v < g.order(); ++v) {
    if (((mask >> v) & 1U) && (g.neighbours(v) & mask) != 0) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> all_faces(const SimpleGraph& g) {
  std::vector<std::vector<std::uint32_t>> faces;
  for (std::uint32_t mask = 1; mask < (1U << g.order()); ++mask) {
    if (!independent(g, mask)) continue;
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (faces.size() < size) faces.resize(size);
    faces[size - 1].push_back(mask);
  }
  return faces;
}

}  // namespace

OracleEta eta_bruteforce(const SimpleGraph& j, const OracleBudget& budget) {
  if (j.order() > budget.max_complex_vertices) {
    throw ResourceError("eta_bruteforce: graph too large");
  }
  OracleEta out;
  if (j.order() == 0) return out;
  if (j.has_isolated_vertex()) {
    out.eta = EtaValue::infinite();
    return out;
  }
  const auto faces = all_faces(j);
  const int top = static_cast<int>(faces.size()) - 1;
  const int through = std::min(top, budget.max_dim);

  // rank of the boundary from dimension d to d-1; dimension 0 maps onto the
  // augmentation with rank 1.
  std::vector<int> ranks(through + 2, 0);
  ranks[0] = 1;
  for (int d = 1; d <= std::min(top, through + 1); ++d) {
    std::map<std::uint32_t, std::size_t> row_of;
    for (std::size_t i = 0; i < faces[d - 1].size(); ++i) row_of[faces[d - 1][i]] = i;
    Matrix m(faces[d - 1].size(), std::vector<cpp_int>(faces[d].size(), 0));
    for (std::size_t c = 0; c < faces[d].size(); ++c) {
      const std::uint32_t f = faces[d][c];
      int sign = 1;
      for (int v = 0; v < j.order(); ++v) {
        if (!((f >> v) & 1U)) continue;
        m[row_of.at(f & ~(1U << v))][c] = sign;
        sign = -sign;
      }
    }
    const auto inv = smith(std::move(m));
    ranks[d] = inv.rank;
    // Torsion in the cokernel of this map is torsion of H~_{d-1}.
    if (inv.torsion && d - 1 <= through) {
      out.torsion = true;
      out.eta = EtaValue::finite(d);
      return out;
    }
    const int i = d - 1;
    const int betti = static_cast<int>(faces[i].size()) - ranks[i] - ranks[i + 1];
    if (betti > 0) {
      out.eta = EtaValue::finite(i + 1);
      return out;
    }
  }
  if (top <= through) {
    const int betti = static_cast<int>(faces[top].size()) - ranks[top];
    if (betti > 0) {
      out.eta = EtaValue::finite(top + 1);
      return out;
    }
  } else {
    out.eta = EtaValue::at_least(through + 2);
    return out;
  }
  if (collapses_to_point(j)) {
    out.eta = EtaValue::infinite();
  } else {
    out.eta = EtaValue::at_least(top + 2);
    out.flagged = true;
  }
  return out;
}

bool collapses_to_point(const SimpleGraph& j) {
  if (j.order() == 0) return false;
  std::unordered_set<std::uint32_t> alive;
  for (std::uint32_t mask = 1; mask < (1U << j.order()); ++mask) {
    if (independent(j, mask)) alive.insert(mask);
  }
  auto cofaces = [&](std::uint32_t f) {
    std::vector<std::uint32_t> out;
    for (int v = 0; v < j.order(); ++v) {
      const std::uint32_t g = f | (1U << v);
      if (g != f && alive.count(g)) out.push_back(g);
    }
    return out;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    const std::vector<std::uint32_t> snapshot(alive.begin(), alive.end());
    for (const std::uint32_t f : snapshot) {
      if (!alive.count(f)) continue;
      const auto up = cofaces(f);
      if (up.size() != 1 || !cofaces(up[0]).empty()) continue;
      alive.erase(f);
      alive.erase(up[0]);
      progress = true;
    }
  }
  return alive.size() == 1;
}

}  // namespace t3lab::oracle
