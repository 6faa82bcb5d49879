#pragma once

#include <random>
#include <utility>
#include <vector>

#include "t3lab/constructions.hpp"
#include "t3lab/hypercore.hpp"
#include "t3lab/topology.hpp"

namespace fixtures {

using t3lab::BipartiteMultigraph;
using t3lab::SimpleGraph;
using t3lab::Tripartite3Graph;

inline BipartiteMultigraph bmg(int nl, int nr, const std::vector<std::pair<int, int>>& pairs) {
  BipartiteMultigraph g(nl, nr);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

// Path with k edges, alternating sides.
inline BipartiteMultigraph path(int k) {
  BipartiteMultigraph g((k + 2) / 2, (k + 1) / 2);
  for (int i = 0; i < k; ++i) g.add_edge((i + 1) / 2, i / 2);
  return g;
}

// Even cycle with 2m edges.
inline BipartiteMultigraph cycle(int m) {
  BipartiteMultigraph g(m, m);
  for (int i = 0; i < m; ++i) {
    g.add_edge(i, i);
    g.add_edge((i + 1) % m, i);
  }
  return g;
}

inline SimpleGraph simple(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline SimpleGraph simple_cycle(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline SimpleGraph simple_path(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline SimpleGraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline BipartiteMultigraph random_bipartite(std::mt19937_64& rng, int nl, int nr, int m) {
  BipartiteMultigraph g(nl, nr);
  for (int i = 0; i < m; ++i) {
    g.add_edge(static_cast<int>(t3lab::uniform_below(rng, nl)),
               static_cast<int>(t3lab::uniform_below(rng, nr)));
  }
  return g;
}

inline Tripartite3Graph random_tripartite(std::mt19937_64& rng, std::array<int, 3> sizes, int m) {
  Tripartite3Graph h(sizes);
  for (int i = 0; i < m; ++i) {
    h.add_edge(static_cast<int>(t3lab::uniform_below(rng, sizes[0])),
               static_cast<int>(t3lab::uniform_below(rng, sizes[1])),
               static_cast<int>(t3lab::uniform_below(rng, sizes[2])));
  }
  return h;
}

inline Tripartite3Graph fano() { return t3lab::build({t3lab::family::Fano{}}); }

// Every triple on two vertices per class; 4-regular with a matching of size 2.
inline Tripartite3Graph complete_222() {
  Tripartite3Graph h({2, 2, 2});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) h.add_edge(a, b, c);
  return h;
}

// 2-regular on four vertices per class, one component with a perfect
// matching. Vertices a, b, c, d are indices 0..3 in every class.
inline Tripartite3Graph pm_component_four() {
  Tripartite3Graph h({4, 4, 4});
  const int a = 0, b = 1, c = 2, d = 3;
  h.add_edge(a, a, a);
  h.add_edge(b, b, b);
  h.add_edge(c, a, b);
  h.add_edge(d, b, a);
  h.add_edge(a, c, d);
  h.add_edge(b, d, c);
  h.add_edge(c, c, c);
  h.add_edge(d, d, d);
  return h;
}

// 2-regular fixture around a C4 of lk V_0 with a single bad vertex.
// Class 2 has five vertices a3, b3, d3, e3, f3 at indices 0..4.
inline Tripartite3Graph one_bad_vertex() {
  Tripartite3Graph h({4, 4, 5});
  const int a = 0, b = 1, c = 2, d = 3;
  const int a3 = 0, b3 = 1, d3 = 2, e3 = 3, f3 = 4;
  h.add_edge(a, a, a3);
  h.add_edge(b, b, b3);
  h.add_edge(c, a, b3);
  h.add_edge(d, b, a3);
  h.add_edge(a, c, d3);
  h.add_edge(d, d, d3);
  h.add_edge(c, c, e3);
  h.add_edge(b, d, f3);
  return h;
}

}  // namespace fixtures
