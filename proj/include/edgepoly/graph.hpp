#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgepoly/errors.hpp"
#include "edgepoly/vertex_set.hpp"

namespace edgepoly {

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool contains(Vertex w) const { return u == w || v == w; }
  bool shares_vertex(const Edge& o) const { return contains(o.u) || contains(o.v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
///
/// Edges are kept sorted lexicographically; edge index i always refers to
/// edges()[i]. Adjacency rows are bitsets that agree exactly with the edge list.
class Graph {
 public:
  Graph() = default;

  /// Validates and normalizes `pairs`; duplicates collapse into one edge.
  /// Throws ValidationError on n == 0, loops, or out-of-range endpoints.
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) : n_(n), adjacency_(n, VertexSet(n)) {
    if (n == 0) throw ValidationError("graph must have at least one vertex");
    edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
        throw ValidationError("edge {" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                              "} has an endpoint outside 1.." + std::to_string(n));
      if (a == b) throw ValidationError("loop at vertex " + std::to_string(a + 1));
      edges_.push_back(make_edge(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
      adjacency_[e.u].insert(e.v);
      adjacency_[e.v].insert(e.u);
    }
  }

  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size())) {}

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex a, Vertex b) const { return adjacency_[a].contains(b); }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  /// Position of {a,b} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const {
    const Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  VertexSet all_vertices() const { return VertexSet::full(n_); }

  std::size_t min_degree() const {
    std::size_t m = n_;
    for (std::size_t v = 0; v < n_; ++v) m = std::min(m, degree(static_cast<Vertex>(v)));
    return m;
  }

  bool has_isolated_vertex() const { return min_degree() == 0; }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
};

inline Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) { return Graph(n, pairs); }

/// Throws DomainError when `g` has an isolated vertex; `what` names the caller.
inline void require_no_isolated(const Graph& g, const char* what) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<Vertex>(v)) == 0)
      throw DomainError(std::string(what) + ": vertex " + std::to_string(v + 1) +
                        " is isolated; edge polytopes require graphs without isolated vertices");
}

/// Induced subgraph on `keep`, relabeled in increasing order.
/// Returns the subgraph together with the original label of each new vertex.
inline std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> labels = keep.to_vector();
  std::vector<Vertex> relabel(g.vertex_count(), -1);
  for (std::size_t i = 0; i < labels.size(); ++i) relabel[labels[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges())
    if (keep.contains(e.u) && keep.contains(e.v)) pairs.emplace_back(relabel[e.u], relabel[e.v]);
  return {Graph(labels.size(), pairs), std::move(labels)};
}

/// Induced subgraph on the non-isolated vertices. Requires at least one edge.
inline Graph drop_isolated(const Graph& g) {
  VertexSet keep(g.vertex_count());
  for (const Edge& e : g.edges()) {
    keep.insert(e.u);
    keep.insert(e.v);
  }
  if (keep.empty()) throw DomainError("graph has no edges");
  return induced_subgraph(g, keep).first;
}

/// N(X): vertices outside X adjacent to some member of X.
inline VertexSet neighbor_set(const Graph& g, const VertexSet& x) {
  if (x.empty()) throw ValidationError("neighbor_set: X must be non-empty");
  VertexSet out(g.vertex_count());
  x.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out - x;
}

inline bool is_independent(const Graph& g, const VertexSet& a) {
  if (a.empty()) throw ValidationError("is_independent: A must be non-empty");
  bool ok = true;
  a.for_each([&](Vertex v) { ok = ok && !g.neighbors(v).intersects(a); });
  return ok;
}

/// e_G(S,T): ordered pairs (s,t), s in S, t in T, st an edge.
inline std::uint64_t edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  std::uint64_t count = 0;
  s.for_each([&](Vertex v) { count += (g.neighbors(v) & t).size(); });
  return count;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto pairs = a.edge_pairs();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (const Edge& e : b.edges()) pairs.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), pairs);
}

}  // namespace edgepoly
