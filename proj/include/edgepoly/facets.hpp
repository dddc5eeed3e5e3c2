#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgepoly/components.hpp"
#include "edgepoly/errors.hpp"
#include "edgepoly/graph.hpp"
#include "edgepoly/polyskeleton.hpp"

namespace edgepoly {

enum class FacetKind { coordinate, independent_set };

inline const char* to_string(FacetKind k) { return k == FacetKind::coordinate ? "coordinate" : "independent_set"; }

/// A facet of P(G) given by c . x >= 0.
///
/// coordinate: support = {i}, c = e_i.
/// independent_set: support = A, c = +1 on N(A), -1 on A, 0 elsewhere.
struct FacetCertificate {
  FacetKind kind = FacetKind::coordinate;
  std::vector<Vertex> support;
  std::vector<int> inequality;
  std::vector<std::size_t> facet_vertices;  ///< edge indices tight at c . x = 0
};

/// A certificate dropped because an earlier one cuts the same face.
struct FacetMerge {
  std::size_t kept = 0;  ///< index into FacetList::facets
  FacetCertificate duplicate;
};

struct FacetList {
  std::vector<FacetCertificate> facets;
  std::vector<FacetMerge> merges;
};

struct FacetOptions {
  std::size_t max_n = 24;
};

struct FacetBounds {
  std::size_t count = 0;
  std::size_t dim = 0;
  bool upper_ok = true;        ///< count <= 2^dim + dim
  bool windmill_lower = false;  ///< count > 4^floor(dim/3)
};

namespace detail {

inline void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw DomainError(std::string(what) + ": graph must be connected");
}

/// Whether G[A, N(A)] (edges between A and N(A) only) is connected.
/// Requires A independent and non-empty.
inline bool link_connected(const Graph& g, const VertexSet& a, const VertexSet& na) {
  VertexSet seen(g.vertex_count());
  std::vector<Vertex> stack{a.first()};
  seen.insert(a.first());
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    const VertexSet next = (g.neighbors(v) & (a.contains(v) ? na : a)) - seen;
    next.for_each([&](Vertex w) {
      seen.insert(w);
      stack.push_back(w);
    });
  }
  return seen == (a | na);
}

/// Whether the members of `targets` lie in one component of G[region].
inline bool joined_within(const Graph& g, const VertexSet& targets, const VertexSet& region) {
  VertexSet seen(g.vertex_count());
  std::vector<Vertex> stack{targets.first()};
  seen.insert(targets.first());
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    const VertexSet next = (g.neighbors(v) & region) - seen;
    next.for_each([&](Vertex w) {
      seen.insert(w);
      stack.push_back(w);
    });
  }
  return targets.is_subset_of(seen);
}

inline std::size_t induced_edge_count(const Graph& g, const VertexSet& s) { return edges_between(g, s, s) / 2; }

struct FacetContext {
  const Graph& g;
  bool bipartite;
  VertexSet side;  ///< V1 for bipartite graphs, all vertices otherwise
};

inline FacetContext make_context(const Graph& g) {
  auto side = bipartition_side(g);
  return {g, side.has_value(), side ? *side : g.all_vertices()};
}

/// The remainder condition for independent sets: no bipartite component
/// (non-bipartite g) or connected with at least one edge (bipartite g).
inline bool remainder_ok(const FacetContext& ctx, const VertexSet& rest) {
  if (!ctx.bipartite) return components_within(ctx.g, rest).c0 == 0;
  if (rest.empty()) return false;
  return components_within(ctx.g, rest).count() == 1 && induced_edge_count(ctx.g, rest) >= 1;
}

inline bool set_conditions(const FacetContext& ctx, const VertexSet& a, const VertexSet& na) {
  if (ctx.bipartite && (!a.is_subset_of(ctx.side) || a == ctx.side)) return false;
  if (!link_connected(ctx.g, a, na)) return false;
  return remainder_ok(ctx, (a | na).complement());
}

inline FacetCertificate make_certificate(const Graph& g, FacetKind kind, const VertexSet& support) {
  FacetCertificate c;
  c.kind = kind;
  c.support = support.to_vector();
  c.inequality.assign(g.vertex_count(), 0);
  if (kind == FacetKind::coordinate) {
    c.inequality[support.first()] = 1;
  } else {
    neighbor_set(g, support).for_each([&](Vertex v) { c.inequality[v] = 1; });
    support.for_each([&](Vertex v) { c.inequality[v] = -1; });
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (c.inequality[e.u] + c.inequality[e.v] == 0) c.facet_vertices.push_back(i);
  }
  return c;
}

}  // namespace detail

/// Whether x_i >= 0 defines a facet: i is regular (non-bipartite g: G - i has
/// no bipartite component) or ordinary (bipartite g: G - i is connected).
inline bool vertex_facet_test(const Graph& g, Vertex i) {
  if (i < 0 || static_cast<std::size_t>(i) >= g.vertex_count()) throw ValidationError("vertex_facet_test: vertex out of range");
  require_no_isolated(g, "vertex_facet_test");
  detail::require_connected(g, "vertex_facet_test");
  VertexSet rest = g.all_vertices();
  rest.erase(i);
  const ComponentDecomposition dec = components_within(g, rest);
  if (is_bipartite(g)) return dec.count() == 1;
  return dec.c0 == 0;
}

/// Whether the independent-set inequality for A defines a facet
/// (A fundamental, or acceptable with A a proper subset of V1).
inline bool set_facet_test(const Graph& g, const VertexSet& a) {
  if (a.empty()) throw ValidationError("set_facet_test: A must be non-empty");
  detail::require_connected(g, "set_facet_test");
  if (!is_independent(g, a)) return false;
  const auto ctx = detail::make_context(g);
  return detail::set_conditions(ctx, a, neighbor_set(g, a));
}

/// All facets of P(G) for a connected graph, as certificates sorted by kind
/// then support. Certificates cutting an already-listed face are merged.
inline FacetList enumerate_facets(const Graph& g, const FacetOptions& opts = {}) {
  require_no_isolated(g, "enumerate_facets");
  detail::require_connected(g, "enumerate_facets");
  if (g.edge_count() < 2) throw DomainError("enumerate_facets: need at least two edges");
  if (g.vertex_count() > opts.max_n)
    throw ResourceError("enumerate_facets: n = " + std::to_string(g.vertex_count()) + " exceeds the cap " +
                        std::to_string(opts.max_n));
  if (dimension(g) < 2) throw DomainError("enumerate_facets: polytope dimension must be at least 2");

  const std::size_t n = g.vertex_count();
  const auto ctx = detail::make_context(g);
  std::vector<FacetCertificate> found;

  for (std::size_t i = 0; i < n; ++i)
    if (vertex_facet_test(g, static_cast<Vertex>(i)))
      found.push_back(detail::make_certificate(g, FacetKind::coordinate, VertexSet(n, {static_cast<Vertex>(i)})));

  // Independent sets A in increasing-vertex DFS order over the allowed side.
  std::vector<FacetCertificate> set_facets;
  VertexSet a(n);
  VertexSet na(n);
  auto dfs = [&](auto&& self, Vertex last) -> void {
    if (detail::set_conditions(ctx, a, na)) set_facets.push_back(detail::make_certificate(g, FacetKind::independent_set, a));

    VertexSet future = ctx.side - a - na;
    future.erase_below(last + 1);
    if (future.empty()) return;

    // No extension can join the pieces of G[A, N(A)] if they already sit in
    // different components of the subgraph that any extension could use.
    if (!detail::link_connected(g, a, na)) {
      VertexSet region = a | na | future;
      future.for_each([&](Vertex w) { region |= g.neighbors(w); });
      if (!detail::joined_within(g, a | na, region)) return;
    }

    future.for_each([&](Vertex w) {
      const VertexSet saved_na = na;
      a.insert(w);
      na = (na | g.neighbors(w)) - a;
      self(self, w);
      a.erase(w);
      na = saved_na;
    });
  };
  ctx.side.for_each([&](Vertex v) {
    a.insert(v);
    na = g.neighbors(v);
    dfs(dfs, v);
    a.erase(v);
  });
  std::sort(set_facets.begin(), set_facets.end(),
            [](const FacetCertificate& x, const FacetCertificate& y) { return x.support < y.support; });
  found.insert(found.end(), set_facets.begin(), set_facets.end());

  FacetList out;
  for (auto& cert : found) {
    auto same = std::find_if(out.facets.begin(), out.facets.end(),
                             [&](const FacetCertificate& k) { return k.facet_vertices == cert.facet_vertices; });
    if (same == out.facets.end()) {
      out.facets.push_back(std::move(cert));
    } else {
      out.merges.push_back({static_cast<std::size_t>(same - out.facets.begin()), std::move(cert)});
    }
  }
  return out;
}

inline FacetBounds facet_count_bounds_check(const Graph& g, const FacetOptions& opts = {}) {
  FacetBounds b;
  b.count = enumerate_facets(g, opts).facets.size();
  b.dim = dimension(g);
  if (b.dim < 63) b.upper_ok = b.count <= (std::uint64_t{1} << b.dim) + b.dim;
  const std::size_t third = b.dim / 3;
  b.windmill_lower = third < 32 && b.count > (std::uint64_t{1} << (2 * third));
  return b;
}

}  // namespace edgepoly
