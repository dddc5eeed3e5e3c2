#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "edgepoly/components.hpp"
#include "edgepoly/errors.hpp"
#include "edgepoly/graph.hpp"
#include "edgepoly/subgraph_counts.hpp"

namespace edgepoly {

struct FaceCounts {
  std::uint64_t f0 = 0;
  std::uint64_t f1 = 0;
};

struct PolytopeSummary {
  std::size_t n = 0;
  std::size_t e = 0;
  std::size_t dim = 0;
  std::uint64_t f0 = 0;
  std::uint64_t f1 = 0;
  /// e(G) <= C(dim+1, 2); vacuously true when dim+1 < 4.
  bool edge_bound_ok = true;
  bool edge_bound_tight = false;
  /// f1 >= f0^{3/2} - f0, decided as (f1+f0)^2 >= f0^3.
  bool f1_bound_ok = true;
  bool f1_bound_tight = false;
};

/// dim P(G) = n - c0(G) - 1.
inline std::size_t dimension(const Graph& g) {
  require_no_isolated(g, "dimension");
  return g.vertex_count() - decompose(g).c0 - 1;
}

/// Whether the polytope vertices of two distinct edges span a polytope edge:
/// they share an endpoint, or they are disjoint and lie on no common 4-cycle.
inline bool is_skeleton_edge(const Graph& g, const Edge& a, const Edge& b) {
  if (!g.has_edge(a) || !g.has_edge(b)) throw DomainError("is_skeleton_edge: edge not in graph");
  if (a == b) throw ValidationError("is_skeleton_edge: edges must be distinct");
  if (a.shares_vertex(b)) return true;
  const bool cross1 = g.adjacent(a.u, b.u) && g.adjacent(a.v, b.v);
  const bool cross2 = g.adjacent(a.u, b.v) && g.adjacent(a.v, b.u);
  return !(cross1 || cross2);
}

/// f0 = e(G), f1 = C(e,2) - 2 c4(G) + 3 k4(G).
inline FaceCounts f_counts(const Graph& g) {
  require_no_isolated(g, "f_counts");
  const std::uint64_t e = g.edge_count();
  return {e, e * (e - 1) / 2 - 2 * count_c4(g) + 3 * count_k4(g)};
}

/// The 1-skeleton of P(G) as a graph on the edge indices of g.
inline Graph skeleton_graph(const Graph& g) {
  require_no_isolated(g, "skeleton_graph");
  const auto& es = g.edges();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (is_skeleton_edge(g, es[i], es[j])) pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(es.size(), pairs);
}

inline PolytopeSummary summary(const Graph& g) {
  PolytopeSummary s;
  s.n = g.vertex_count();
  s.e = g.edge_count();
  s.dim = dimension(g);
  const FaceCounts fc = f_counts(g);
  s.f0 = fc.f0;
  s.f1 = fc.f1;

  const std::uint64_t d = s.dim + 1;
  if (d >= 4) {
    const std::uint64_t cap = d * (d - 1) / 2;
    s.edge_bound_ok = s.e <= cap;
    s.edge_bound_tight = s.e == cap;
  }

  // Squared form of f1 >= f0^{3/2} - f0, kept integral.
  const mpz_class sum(static_cast<unsigned long>(s.f1 + s.f0));
  const mpz_class f0(static_cast<unsigned long>(s.f0));
  const mpz_class lhs = sum * sum;
  const mpz_class rhs = f0 * f0 * f0;
  s.f1_bound_ok = lhs >= rhs;
  s.f1_bound_tight = lhs == rhs;
  return s;
}

}  // namespace edgepoly
