#include "t3lab/topology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>

#include "t3lab/errors.hpp"

namespace t3lab {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t above(int v) { return v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1); }

}  // namespace

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) {
    throw InputError("graph order " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxOrder));
  }
  adj_.assign(n, 0);
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) throw InputError("bad graph edge");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

std::uint64_t SimpleGraph::all_vertices() const {
  return n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (std::uint64_t m = adj_[u] & above(u); m != 0; m &= m - 1) {
      out.emplace_back(u, std::countr_zero(m));
    }
  }
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto a : adj_) twice += std::popcount(a);
  return twice / 2;
}

SimpleGraph SimpleGraph::without_edge(int u, int v) const {
  SimpleGraph out = *this;
  out.adj_.at(u) &= ~bit(v);
  out.adj_.at(v) &= ~bit(u);
  return out;
}

SimpleGraph SimpleGraph::exploded(int u, int v) const {
  const std::uint64_t gone = adj_.at(u) | adj_.at(v) | bit(u) | bit(v);
  return induced(all_vertices() & ~gone);
}

SimpleGraph SimpleGraph::induced(std::uint64_t keep) const {
  keep &= all_vertices();
  std::vector<int> index(n_, -1);
  int k = 0;
  for (std::uint64_t m = keep; m != 0; m &= m - 1) index[std::countr_zero(m)] = k++;
  SimpleGraph out(k);
  for (std::uint64_t m = keep; m != 0; m &= m - 1) {
    const int u = std::countr_zero(m);
    for (std::uint64_t nb = adj_[u] & keep; nb != 0; nb &= nb - 1) {
      out.adj_[index[u]] |= bit(index[std::countr_zero(nb)]);
    }
  }
  return out;
}

bool SimpleGraph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](std::uint64_t a) { return a == 0; });
}

std::vector<std::uint64_t> SimpleGraph::component_masks() const {
  std::vector<std::uint64_t> out;
  std::uint64_t left = all_vertices();
  while (left != 0) {
    std::uint64_t comp = bit(std::countr_zero(left));
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m != 0; m &= m - 1) next |= adj_[std::countr_zero(m)];
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

// ---------------------------------------------------------------------------
// EtaValue

EtaValue EtaValue::plus(int k) const {
  switch (kind_) {
    case Kind::Finite: return finite(value_ + k);
    case Kind::AtLeast: return at_least(value_ + k);
    case Kind::Infinite: break;
  }
  return infinite();
}

std::string to_string(const EtaValue& eta) {
  switch (eta.kind()) {
    case EtaValue::Kind::Finite: return std::to_string(eta.value());
    case EtaValue::Kind::AtLeast: return ">=" + std::to_string(eta.value());
    case EtaValue::Kind::Infinite: break;
  }
  return "infinite";
}

nlohmann::ordered_json to_json(const EtaValue& eta) {
  switch (eta.kind()) {
    case EtaValue::Kind::Finite: return eta.value();
    case EtaValue::Kind::AtLeast: return {{"at_least", eta.value()}};
    case EtaValue::Kind::Infinite: break;
  }
  return "infinite";
}

bool eta_le(const EtaValue& a, const EtaValue& b) {
  if (b.is_infinite()) return true;
  if (a.is_finite() && b.is_finite()) return a.value() <= b.value();
  if (a.is_finite() && b.is_at_least() && a.value() <= b.value()) return true;
  if (a.is_at_least() && b.is_finite() && b.value() < a.value()) return false;
  if (a.is_infinite() && b.is_finite()) return false;
  throw ResourceError("cannot compare eta " + to_string(a) + " <= " + to_string(b) +
                      "; raise the dimension cap");
}

EtaValue eta_sum(const EtaValue& a, const EtaValue& b) {
  if (a.is_infinite() || b.is_infinite()) return EtaValue::infinite();
  if (a.is_finite() && b.is_finite()) return EtaValue::finite(a.value() + b.value());
  return EtaValue::at_least(a.value() + b.value());
}

std::string to_string(Coefficients c) {
  switch (c) {
    case Coefficients::Rational: return "q";
    case Coefficients::Binary: return "f2";
    case Coefficients::Integer: break;
  }
  return "z";
}

Coefficients parse_coefficients(const std::string& text) {
  if (text == "q") return Coefficients::Rational;
  if (text == "f2") return Coefficients::Binary;
  if (text == "z") return Coefficients::Integer;
  throw InputError("unknown coefficients '" + text + "' (expected q, f2 or z)");
}

// ---------------------------------------------------------------------------
// Face enumeration

namespace {

int independence_number(const SimpleGraph& g, std::uint64_t cand) {
  if (cand == 0) return 0;
  // A vertex with no neighbour among the candidates is always taken.
  for (std::uint64_t m = cand; m != 0; m &= m - 1) {
    const int v = std::countr_zero(m);
    if ((g.neighbours(v) & cand) == 0) return 1 + independence_number(g, cand & ~bit(v));
  }
  int best_v = std::countr_zero(cand);
  int best_deg = -1;
  for (std::uint64_t m = cand; m != 0; m &= m - 1) {
    const int v = std::countr_zero(m);
    const int d = std::popcount(g.neighbours(v) & cand);
    if (d > best_deg) {
      best_deg = d;
      best_v = v;
    }
  }
  const int with = 1 + independence_number(g, cand & ~g.neighbours(best_v) & ~bit(best_v));
  const int without = independence_number(g, cand & ~bit(best_v));
  return std::max(with, without);
}

// faces[d] holds the independent sets of size d + 1, sorted by mask.
std::vector<std::vector<std::uint64_t>> enumerate_faces(const SimpleGraph& g, int max_size) {
  std::vector<std::vector<std::uint64_t>> faces(std::max(max_size, 0));
  auto extend = [&](auto&& self, std::uint64_t face, std::uint64_t cand, int size) -> void {
    if (size > 0) faces[size - 1].push_back(face);
    if (size == max_size) return;
    for (std::uint64_t m = cand; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      self(self, face | bit(v), cand & ~g.neighbours(v) & above(v), size + 1);
    }
  };
  extend(extend, 0, g.all_vertices(), 0);
  for (auto& f : faces) std::sort(f.begin(), f.end());
  return faces;
}

using SparseColumn = std::vector<std::pair<int, std::int64_t>>;  // (row, value), rows ascending

// Columns of the boundary map from faces of size k+1 to faces of size k.
std::vector<SparseColumn> boundary_columns(const std::vector<std::uint64_t>& upper,
                                           const std::vector<std::uint64_t>& lower) {
  std::vector<SparseColumn> cols;
  cols.reserve(upper.size());
  for (std::uint64_t face : upper) {
    SparseColumn col;
    std::int64_t sign = 1;
    for (std::uint64_t m = face; m != 0; m &= m - 1) {
      const std::uint64_t sub = face & ~(m & -m);
      const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      col.emplace_back(static_cast<int>(it - lower.begin()), sign);
      sign = -sign;
    }
    std::sort(col.begin(), col.end());
    cols.push_back(std::move(col));
  }
  return cols;
}

std::int64_t checked(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) {
    throw ResourceError("integer overflow in boundary-matrix elimination");
  }
  return static_cast<std::int64_t>(x);
}

// Rank over the rationals: fraction-free column reduction on the lowest
// nonzero row, with each column divided by its content.
std::int64_t rank_rational(std::vector<SparseColumn> cols) {
  std::unordered_map<int, std::size_t> owner;
  std::int64_t rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    SparseColumn& col = cols[j];
    while (!col.empty()) {
      const auto found = owner.find(col.back().first);
      if (found == owner.end()) break;
      const SparseColumn& piv = cols[found->second];
      const std::int64_t a = col.back().second;
      const std::int64_t b = piv.back().second;
      const std::int64_t g = std::gcd(a, b);
      const std::int64_t ca = b / g;  // multiplies col
      const std::int64_t cb = a / g;  // multiplies piv
      SparseColumn merged;
      merged.reserve(col.size() + piv.size());
      std::size_t p = 0;
      std::size_t q = 0;
      while (p < col.size() || q < piv.size()) {
        if (q == piv.size() || (p < col.size() && col[p].first < piv[q].first)) {
          merged.emplace_back(col[p].first, checked(static_cast<__int128>(col[p].second) * ca));
          ++p;
        } else if (p == col.size() || piv[q].first < col[p].first) {
          merged.emplace_back(piv[q].first, checked(-static_cast<__int128>(piv[q].second) * cb));
          ++q;
        } else {
          const std::int64_t x = checked(static_cast<__int128>(col[p].second) * ca -
                                         static_cast<__int128>(piv[q].second) * cb);
          if (x != 0) merged.emplace_back(col[p].first, x);
          ++p;
          ++q;
        }
      }
      std::int64_t content = 0;
      for (const auto& e : merged) content = std::gcd(content, e.second);
      if (content > 1) {
        for (auto& e : merged) e.second /= content;
      }
      col = std::move(merged);
    }
    if (!col.empty()) {
      owner.emplace(col.back().first, j);
      ++rank;
    }
  }
  return rank;
}

// Rank over F2 by XOR column reduction.
std::int64_t rank_binary(const std::vector<SparseColumn>& input) {
  std::vector<std::vector<int>> cols;
  cols.reserve(input.size());
  for (const auto& c : input) {
    std::vector<int> rows;
    for (const auto& e : c) {
      if (e.second % 2 != 0) rows.push_back(e.first);
    }
    cols.push_back(std::move(rows));
  }
  std::unordered_map<int, std::size_t> owner;
  std::int64_t rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = cols[j];
    while (!col.empty()) {
      const auto found = owner.find(col.back());
      if (found == owner.end()) break;
      std::vector<int> x;
      std::set_symmetric_difference(col.begin(), col.end(), cols[found->second].begin(),
                                    cols[found->second].end(), std::back_inserter(x));
      col = std::move(x);
    }
    if (!col.empty()) {
      owner.emplace(col.back(), j);
      ++rank;
    }
  }
  return rank;
}

struct IntegerInvariants {
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("integer overflow in Smith form");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw ResourceError("integer overflow in Smith form");
  return out;
}

// Diagonal of the Smith normal form of a dense matrix (rows x cols).
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows;
      std::size_t pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pr == rows || std::abs(m[i][j]) < std::abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return diag;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      const std::int64_t p = m[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t q = m[i][t] / p;
        if (q != 0) {
          for (std::size_t j = t; j < cols; ++j) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
        }
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t q = m[t][j] / p;
        if (q != 0) {
          for (std::size_t i = t; i < rows; ++i) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
        }
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;
      // Divisibility: fold a row with an entry not divisible by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % p != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(std::abs(m[t][t]));
  }
  return diag;
}

// Unit pivots are eliminated sparsely; the residual goes through a dense
// Smith normal form.
IntegerInvariants integer_invariants(const std::vector<SparseColumn>& input, int n_rows) {
  std::vector<std::map<int, std::int64_t>> cols(input.size());
  std::vector<std::map<int, std::int64_t>> rows(n_rows);  // row -> (col -> value)
  for (std::size_t j = 0; j < input.size(); ++j) {
    for (const auto& [i, x] : input[j]) {
      cols[j][i] = x;
      rows[i][static_cast<int>(j)] = x;
    }
  }
  std::vector<char> col_alive(cols.size(), 1);
  std::vector<char> row_alive(n_rows, 1);
  IntegerInvariants out;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!col_alive[c]) continue;
      int prow = -1;
      for (const auto& [i, x] : cols[c]) {
        if (x == 1 || x == -1) {
          prow = i;
          break;
        }
      }
      if (prow < 0) continue;
      const std::int64_t u = cols[c].at(prow);
      // Clear row prow in every other column by column operations.
      const auto others = rows[prow];
      for (const auto& [c2, a] : others) {
        if (c2 == static_cast<int>(c)) continue;
        const std::int64_t factor = a * u;  // a / u with u = +-1
        for (const auto& [i, x] : cols[c]) {
          const std::int64_t nx = checked_sub(cols[c2].contains(i) ? cols[c2][i] : 0, checked_mul(factor, x));
          if (nx == 0) {
            cols[c2].erase(i);
            rows[i].erase(c2);
          } else {
            cols[c2][i] = nx;
            rows[i][c2] = nx;
          }
        }
      }
      // Row prow now meets only column c; drop both.
      for (const auto& [i, x] : cols[c]) rows[i].erase(static_cast<int>(c));
      cols[c].clear();
      col_alive[c] = 0;
      row_alive[prow] = 0;
      rows[prow].clear();
      ++out.rank;
      progress = true;
    }
  }
  std::vector<int> live_rows;
  std::vector<std::size_t> live_cols;
  for (int i = 0; i < n_rows; ++i) {
    if (row_alive[i] && !rows[i].empty()) live_rows.push_back(i);
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (col_alive[c] && !cols[c].empty()) live_cols.push_back(c);
  }
  if (!live_rows.empty() && !live_cols.empty()) {
    std::vector<std::vector<std::int64_t>> dense(live_rows.size(),
                                                 std::vector<std::int64_t>(live_cols.size(), 0));
    for (std::size_t b = 0; b < live_cols.size(); ++b) {
      for (const auto& [i, x] : cols[live_cols[b]]) {
        const auto a = std::lower_bound(live_rows.begin(), live_rows.end(), i) - live_rows.begin();
        dense[a][b] = x;
      }
    }
    for (std::int64_t d : smith_diagonal(std::move(dense))) {
      ++out.rank;
      if (d > 1) out.torsion.push_back(d);
    }
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace

bool HomologyProfile::nonvanishing(int i) const {
  if (i == -1) return vertex_count == 0;
  if (i < 0 || i > computed_dim) return false;
  return betti[i] > 0 || (coeff == Coefficients::Integer && !torsion[i].empty());
}

HomologyProfile reduced_homology(const SimpleGraph& g, Coefficients coeff, int max_dim) {
  HomologyProfile p;
  p.coeff = coeff;
  p.vertex_count = g.order();
  p.top_dim = independence_number(g, g.all_vertices()) - 1;
  p.computed_dim = std::min(max_dim, p.top_dim);
  if (p.computed_dim < 0) {
    p.computed_dim = -1;
    return p;
  }
  const int max_size = std::min(p.computed_dim + 2, p.top_dim + 1);
  const auto faces = enumerate_faces(g, max_size);
  for (const auto& f : faces) p.face_counts.push_back(static_cast<std::int64_t>(f.size()));

  // rank[d] is the rank of the boundary from dimension d to d - 1; the
  // augmentation gives rank[0] = 1.
  std::vector<std::int64_t> rank(p.computed_dim + 2, 0);
  std::vector<std::vector<std::int64_t>> torsion(p.computed_dim + 1);
  rank[0] = 1;
  for (int d = 1; d <= p.computed_dim + 1 && d < static_cast<int>(faces.size()); ++d) {
    const auto cols = boundary_columns(faces[d], faces[d - 1]);
    switch (coeff) {
      case Coefficients::Rational: rank[d] = rank_rational(cols); break;
      case Coefficients::Binary: rank[d] = rank_binary(cols); break;
      case Coefficients::Integer: {
        auto inv = integer_invariants(cols, static_cast<int>(faces[d - 1].size()));
        rank[d] = inv.rank;
        torsion[d - 1] = std::move(inv.torsion);
        break;
      }
    }
  }
  for (int i = 0; i <= p.computed_dim; ++i) {
    p.betti.push_back(p.face_counts[i] - rank[i] - rank[i + 1]);
  }
  p.torsion = std::move(torsion);
  return p;
}

nlohmann::ordered_json to_json(const HomologyProfile& profile) {
  nlohmann::ordered_json j;
  j["coefficients"] = to_string(profile.coeff);
  j["vertices"] = profile.vertex_count;
  j["dimension"] = profile.top_dim;
  j["computed_through"] = profile.computed_dim;
  j["f_vector"] = profile.face_counts;
  j["betti"] = profile.betti;
  if (profile.coeff == Coefficients::Integer) j["torsion"] = profile.torsion;
  return j;
}

// ---------------------------------------------------------------------------
// eta

namespace {

EtaValue eta_whole(const SimpleGraph& g, const EtaOptions& options) {
  if (g.order() > options.max_vertices) {
    throw ResourceError("eta: complex on " + std::to_string(g.order()) +
                        " vertices exceeds the limit of " + std::to_string(options.max_vertices));
  }
  const auto profile = reduced_homology(g, options.coeff, options.cap - 2);
  for (int i = 0; i <= profile.computed_dim; ++i) {
    if (profile.nonvanishing(i)) return EtaValue::finite(i + 1);
  }
  if (profile.complete()) return EtaValue::infinite();
  return EtaValue::at_least(options.cap);
}

}  // namespace

EtaValue eta(const SimpleGraph& g, const EtaOptions& options) {
  if (g.order() == 0) return EtaValue::finite(0);
  if (g.has_isolated_vertex()) return EtaValue::infinite();
  if (options.coeff == Coefficients::Integer) return eta_whole(g, options);
  EtaValue total = EtaValue::finite(0);
  for (std::uint64_t comp : g.component_masks()) {
    total = eta_sum(total, eta_whole(g.induced(comp), options));
    if (total.is_infinite()) break;
  }
  return total;
}

EtaEvaluator::EtaEvaluator(EtaOptions options) : options_(options) {}

EtaValue EtaEvaluator::operator()(const SimpleGraph& g) {
  if (auto it = cache_.find(g); it != cache_.end()) return it->second;
  const EtaValue value = eta(g, options_);
  cache_.emplace(g, value);
  return value;
}

EtaFn EtaEvaluator::as_fn() {
  return [this](const SimpleGraph& g) { return (*this)(g); };
}

bool is_decouplable(const SimpleGraph& j, int u, int v, const EtaFn& eta_fn) {
  if (!j.adjacent(u, v)) throw InputError("is_decouplable: pair is not adjacent");
  return eta_le(eta_fn(j.without_edge(u, v)), eta_fn(j));
}

bool is_explodable(const SimpleGraph& j, int u, int v, const EtaFn& eta_fn) {
  if (!j.adjacent(u, v)) throw InputError("is_explodable: pair is not adjacent");
  return eta_le(eta_fn(j.exploded(u, v)).plus(1), eta_fn(j));
}

// ---------------------------------------------------------------------------
// Meshulam game

namespace {

class MeshulamGame {
 public:
  MeshulamGame(const SimpleGraph& j, const MeshulamOptions& options)
      : j_(j), options_(options), edges_(j.edges()) {
    if (edges_.size() > 128) throw ResourceError("meshulam_game_lb: more than 128 edges");
  }

  EtaValue solve() {
    EdgeSet all{0, 0};
    for (std::size_t k = 0; k < edges_.size(); ++k) all[k / 64] |= bit(static_cast<int>(k % 64));
    return value(j_.all_vertices(), all);
  }

 private:
  using EdgeSet = std::array<std::uint64_t, 2>;
  struct Key {
    std::uint64_t vertices;
    EdgeSet edges;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<std::uint64_t>{}(k.vertices);
      h ^= std::hash<std::uint64_t>{}(k.edges[0]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= std::hash<std::uint64_t>{}(k.edges[1]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

  static bool has(const EdgeSet& s, std::size_t k) { return (s[k / 64] >> (k % 64)) & 1U; }

  EtaValue value(std::uint64_t verts, const EdgeSet& es) {
    if (verts == 0) return EtaValue::finite(0);
    std::uint64_t covered = 0;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (has(es, k)) covered |= bit(edges_[k].first) | bit(edges_[k].second);
    }
    if ((verts & ~covered) != 0) return EtaValue::infinite();
    const Key key{verts, es};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= options_.max_states) {
      throw ResourceError("meshulam_game_lb: state cap exceeded");
    }
    EtaValue best = EtaValue::finite(0);
    for (std::size_t k = 0; k < edges_.size() && !best.is_infinite(); ++k) {
      if (!has(es, k)) continue;
      EdgeSet minus = es;
      minus[k / 64] &= ~bit(static_cast<int>(k % 64));
      const EtaValue deleted = value(verts, minus);
      // Explosion: drop both endpoints and their current neighbours.
      const auto [u, v] = edges_[k];
      std::uint64_t gone = bit(u) | bit(v);
      for (std::size_t q = 0; q < edges_.size(); ++q) {
        if (!has(es, q)) continue;
        const auto [a, b] = edges_[q];
        if (a == u || a == v) gone |= bit(b);
        if (b == u || b == v) gone |= bit(a);
      }
      const std::uint64_t rest = verts & ~gone;
      EdgeSet kept{0, 0};
      for (std::size_t q = 0; q < edges_.size(); ++q) {
        if (has(es, q) && (rest >> edges_[q].first & 1U) && (rest >> edges_[q].second & 1U)) {
          kept[q / 64] |= bit(static_cast<int>(q % 64));
        }
      }
      const EtaValue exploded = value(rest, kept).plus(1);
      const EtaValue candidate = eta_le(deleted, exploded) ? deleted : exploded;
      if (!eta_le(candidate, best)) best = candidate;
    }
    memo_.emplace(key, best);
    return best;
  }

  const SimpleGraph& j_;
  MeshulamOptions options_;
  std::vector<std::pair<int, int>> edges_;
  std::unordered_map<Key, EtaValue, KeyHash> memo_;
};

}  // namespace

EtaValue meshulam_game_lb(const SimpleGraph& j, const MeshulamOptions& options) {
  if (j.order() > options.max_vertices) {
    throw ResourceError("meshulam_game_lb: " + std::to_string(j.order()) +
                        " vertices exceed the limit of " + std::to_string(options.max_vertices));
  }
  return MeshulamGame(j, options).solve();
}

}  // namespace t3lab
