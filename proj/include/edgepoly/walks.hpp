#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "edgepoly/errors.hpp"
#include "edgepoly/graph.hpp"

namespace edgepoly {

struct WalkStats {
  std::size_t k = 0;
  mpz_class total;         ///< non-returning walks of length k, over all start vertices
  mpq_class nu;            ///< total / n
  mpq_class moore_bound;   ///< d (d-1)^(k-1), d the average degree
  std::optional<bool> bound_holds;  ///< nu >= moore_bound; only defined for min degree >= 2
};

/// Counts walks v0 e0 v1 ... e_{k-1} v_k with e_i != e_{i+1}.
///
/// State is the last traversed arc. The walks ending in arc v->w extend those
/// ending in any arc x->v with x != w, so per step each arc receives the total
/// arriving at v minus the count on its own reversal.
inline WalkStats non_returning_walks(const Graph& g, std::size_t k) {
  if (k < 1) throw ValidationError("non_returning_walks: k must be at least 1");
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  // Arc 2i runs u->v of edge i, arc 2i+1 runs v->u.
  std::vector<Vertex> head(2 * m), tail(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    tail[2 * i] = g.edge(i).u;
    head[2 * i] = g.edge(i).v;
    tail[2 * i + 1] = g.edge(i).v;
    head[2 * i + 1] = g.edge(i).u;
  }
  std::vector<mpz_class> count(2 * m, 1), next(2 * m);
  std::vector<mpz_class> arriving(n);
  for (std::size_t step = 1; step < k; ++step) {
    for (auto& a : arriving) a = 0;
    for (std::size_t a = 0; a < 2 * m; ++a) arriving[head[a]] += count[a];
    for (std::size_t a = 0; a < 2 * m; ++a) next[a] = arriving[tail[a]] - count[a ^ 1];
    count.swap(next);
  }

  WalkStats s;
  s.k = k;
  s.total = 0;
  for (const auto& c : count) s.total += c;
  s.nu = mpq_class(s.total, static_cast<unsigned long>(n));
  s.nu.canonicalize();
  mpq_class d(static_cast<unsigned long>(2 * m), static_cast<unsigned long>(n));
  d.canonicalize();
  mpq_class bound = d;
  for (std::size_t i = 1; i < k; ++i) bound *= d - 1;
  s.moore_bound = bound;
  if (n > 0 && g.min_degree() >= 2) s.bound_holds = s.nu >= s.moore_bound;
  return s;
}

/// Number of paths (no repeated vertex) with exactly k edges from u to v.
inline std::uint64_t count_k_paths(const Graph& g, Vertex u, Vertex v, std::size_t k) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  if (u < 0 || v < 0 || u >= n || v >= n) throw ValidationError("count_k_paths: vertex out of range");
  if (k == 0) return u == v ? 1 : 0;
  if (u == v) throw ValidationError("count_k_paths: endpoints must differ for k >= 1");

  VertexSet visited(g.vertex_count());
  visited.insert(u);
  auto dfs = [&](auto&& self, Vertex at, std::size_t remaining) -> std::uint64_t {
    if (remaining == 0) return at == v ? 1 : 0;
    if (at == v) return 0;
    std::uint64_t total = 0;
    (g.neighbors(at) - visited).for_each([&](Vertex w) {
      visited.insert(w);
      total += self(self, w, remaining - 1);
      visited.erase(w);
    });
    return total;
  };
  return dfs(dfs, u, k);
}

/// e_G(S,T) - (d/n)|S||T| with d = 2e(G)/n, exactly.
inline mpq_class discrepancy(const Graph& g, const VertexSet& s, const VertexSet& t) {
  const auto n = static_cast<unsigned long>(g.vertex_count());
  mpq_class expected(static_cast<unsigned long>(2 * g.edge_count() * s.size() * t.size()), n * n);
  expected.canonicalize();
  return mpq_class(static_cast<unsigned long>(edges_between(g, s, t))) - expected;
}

/// (1/2) n^{1+1/k} + ((k-1)/(2k)) n + n^{1-1/k}, in floating point.
inline double turan_bound(std::size_t n, std::size_t k) {
  if (k < 2) throw ValidationError("turan_bound: k must be at least 2");
  if (n < 1) throw ValidationError("turan_bound: n must be at least 1");
  const double x = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  return 0.5 * std::pow(x, 1.0 + 1.0 / kk) + (kk - 1.0) / (2.0 * kk) * x + std::pow(x, 1.0 - 1.0 / kk);
}

}  // namespace edgepoly
