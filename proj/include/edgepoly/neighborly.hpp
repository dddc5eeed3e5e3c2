#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "edgepoly/components.hpp"
#include "edgepoly/errors.hpp"
#include "edgepoly/graph.hpp"

namespace edgepoly {

enum class WitnessKind { even_cycle, two_odd_cycles_joined };

inline const char* to_string(WitnessKind k) {
  return k == WitnessKind::even_cycle ? "even_cycle" : "two_odd_cycles_joined";
}

/// A member of the forbidden family F_k found inside a graph.
///
/// even_cycle: `cycles` holds one cycle, `path` is empty.
/// two_odd_cycles_joined: `cycles` holds two odd cycles; `path` runs from a
/// vertex of the first to a vertex of the second. When the cycles share a
/// vertex the path is that single vertex.
struct ForbiddenWitness {
  WitnessKind kind = WitnessKind::even_cycle;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> path;
  std::size_t total_size = 0;
};

struct Neighborliness {
  bool simplex = false;  ///< every set of polytope vertices is a face
  std::size_t k = 1;     ///< largest k with P(G) k-neighborly; meaningless when simplex
};

namespace detail {

/// Depth-first cycle search. Cycles are reported in canonical form: the
/// smallest vertex first and the second vertex smaller than the last.
/// Visits cycles of length exactly `len` in lexicographic order; stops when
/// `visit` returns true.
template <class Visit>
bool for_each_cycle_of_length(const Graph& g, std::size_t len, Visit&& visit) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Vertex> path;
  VertexSet on_path(g.vertex_count());

  auto extend = [&](auto&& self) -> bool {
    const Vertex start = path.front();
    const Vertex last = path.back();
    if (path.size() == len) {
      if (g.adjacent(last, start) && path[1] < last) return visit(path);
      return false;
    }
    VertexSet next = g.neighbors(last) - on_path;
    next.erase_below(start + 1);
    bool done = false;
    next.for_each([&](Vertex w) {
      if (done) return;
      path.push_back(w);
      on_path.insert(w);
      done = self(self);
      on_path.erase(w);
      path.pop_back();
    });
    return done;
  };

  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path.insert(s);
    const bool done = extend(extend);
    on_path.erase(s);
    if (done) return true;
  }
  return false;
}

inline std::optional<std::vector<Vertex>> shortest_even_cycle(const Graph& g, std::size_t max_len) {
  std::optional<std::vector<Vertex>> found;
  for (std::size_t len = 4; len <= max_len && len <= g.vertex_count() && !found; len += 2)
    for_each_cycle_of_length(g, len, [&](const std::vector<Vertex>& c) {
      found = c;
      return true;
    });
  return found;
}

inline std::vector<std::vector<Vertex>> odd_cycles_up_to(const Graph& g, std::size_t max_len) {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t len = 3; len <= max_len && len <= g.vertex_count(); len += 2)
    for_each_cycle_of_length(g, len, [&](const std::vector<Vertex>& c) {
      out.push_back(c);
      return false;
    });
  std::sort(out.begin(), out.end());
  return out;
}

/// Shortest path from set `from` to set `to` (endpoints included), BFS in
/// increasing vertex order.
inline std::vector<Vertex> shortest_path_between(const Graph& g, const VertexSet& from, const VertexSet& to) {
  std::vector<Vertex> parent(g.vertex_count(), -2);
  std::vector<Vertex> queue;
  from.for_each([&](Vertex v) {
    parent[v] = -1;
    queue.push_back(v);
  });
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (to.contains(v)) {
      std::vector<Vertex> path;
      for (Vertex w = v; w != -1; w = parent[w]) path.push_back(w);
      std::reverse(path.begin(), path.end());
      return path;
    }
    g.neighbors(v).for_each([&](Vertex w) {
      if (parent[w] == -2) {
        parent[w] = v;
        queue.push_back(w);
      }
    });
  }
  return {};
}

inline bool is_graph_cycle(const Graph& g, const std::vector<Vertex>& c) {
  if (c.size() < 3) return false;
  std::vector<Vertex> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < 0 || static_cast<std::size_t>(c[i]) >= g.vertex_count() || !g.adjacent(c[i], c[(i + 1) % c.size()]))
      return false;
  return true;
}

}  // namespace detail

/// P(G) is a simplex iff every cycle is odd and each component has at most
/// one cycle, i.e. each component has e_c < v_c, or e_c == v_c and an odd cycle.
inline bool is_simplex(const Graph& g) {
  require_no_isolated(g, "is_simplex");
  const ComponentDecomposition dec = decompose(g);
  for (std::size_t c = 0; c < dec.count(); ++c) {
    const VertexSet members = VertexSet::from_range(g.vertex_count(), dec.components[c]);
    const std::size_t edges = edges_between(g, members, members) / 2;
    const std::size_t verts = dec.components[c].size();
    if (edges > verts) return false;
    if (edges == verts && dec.bipartite[c]) return false;
  }
  return true;
}

/// Searches g for a subgraph from F_k: an even cycle on at most 2k vertices,
/// or two odd cycles sharing at most one vertex joined by a (possibly empty)
/// path, on at most 2k vertices in total. Prefers the shortest even cycle,
/// then the lexicographically least pair of odd cycles.
inline std::optional<ForbiddenWitness> find_forbidden(const Graph& g, std::size_t k) {
  if (k < 2) throw ValidationError("find_forbidden: k must be at least 2");
  const std::size_t budget = 2 * k;

  if (auto c = detail::shortest_even_cycle(g, budget)) {
    ForbiddenWitness w;
    w.kind = WitnessKind::even_cycle;
    w.total_size = c->size();
    w.cycles.push_back(std::move(*c));
    return w;
  }

  // Without short even cycles, each odd cycle of a forbidden pair has at
  // most 2k-3 vertices since the other has at least 3 and they share <= 1.
  const auto odd = detail::odd_cycles_up_to(g, budget - 3);
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < odd.size(); ++i) {
    const VertexSet a = VertexSet::from_range(n, odd[i]);
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      if (odd[i].size() + odd[j].size() - 1 > budget) continue;
      const VertexSet b = VertexSet::from_range(n, odd[j]);
      const VertexSet shared = a & b;
      const std::size_t overlap = shared.size();
      if (overlap >= 2) continue;
      std::vector<Vertex> path;
      std::size_t total = 0;
      if (overlap == 1) {
        path.push_back(shared.first());
        total = odd[i].size() + odd[j].size() - 1;
      } else {
        path = detail::shortest_path_between(g, a, b);
        if (path.empty()) continue;
        total = odd[i].size() + odd[j].size() + path.size() - 2;
      }
      if (total > budget) continue;
      ForbiddenWitness w;
      w.kind = WitnessKind::two_odd_cycles_joined;
      w.cycles = {odd[i], odd[j]};
      w.path = std::move(path);
      w.total_size = total;
      return w;
    }
  }
  return std::nullopt;
}

/// Checks a witness against g: genuine subgraph, parity, shape, size <= 2k.
inline bool validate_witness(const Graph& g, const ForbiddenWitness& w, std::size_t k) {
  const std::size_t n = g.vertex_count();
  for (const auto& c : w.cycles)
    if (!detail::is_graph_cycle(g, c)) return false;
  if (w.kind == WitnessKind::even_cycle) {
    return w.cycles.size() == 1 && w.path.empty() && w.cycles[0].size() % 2 == 0 &&
           w.total_size == w.cycles[0].size() && w.total_size <= 2 * k;
  }
  if (w.cycles.size() != 2 || w.path.empty()) return false;
  if (w.cycles[0].size() % 2 == 0 || w.cycles[1].size() % 2 == 0) return false;
  const VertexSet a = VertexSet::from_range(n, w.cycles[0]);
  const VertexSet b = VertexSet::from_range(n, w.cycles[1]);
  const VertexSet shared = a & b;
  VertexSet all = a | b;
  if (shared.size() > 1) return false;
  if (shared.size() == 1) {
    if (w.path.size() != 1 || w.path[0] != shared.first()) return false;
  } else {
    if (w.path.size() < 2 || !a.contains(w.path.front()) || !b.contains(w.path.back())) return false;
    for (std::size_t i = 0; i + 1 < w.path.size(); ++i)
      if (!g.adjacent(w.path[i], w.path[i + 1])) return false;
    for (std::size_t i = 1; i + 1 < w.path.size(); ++i) {
      if (all.contains(w.path[i])) return false;
      all.insert(w.path[i]);
    }
  }
  return all.size() == w.total_size && w.total_size <= 2 * k;
}

/// P(G) is k-neighborly iff G is F_k-free; defined only for e(G) >= k.
inline bool is_k_neighborly(const Graph& g, std::size_t k) {
  if (k < 2) throw ValidationError("is_k_neighborly: k must be at least 2");
  require_no_isolated(g, "is_k_neighborly");
  if (g.edge_count() < k)
    throw DomainError("is_k_neighborly: the characterization needs at least k = " + std::to_string(k) +
                      " edges, graph has " + std::to_string(g.edge_count()));
  return !find_forbidden(g, k).has_value();
}

inline Neighborliness max_neighborliness(const Graph& g) {
  if (is_simplex(g)) return {true, g.edge_count()};
  std::size_t best = 1;
  for (std::size_t k = 2; k <= g.edge_count(); ++k) {
    if (find_forbidden(g, k)) break;
    best = k;
  }
  return {false, best};
}

}  // namespace edgepoly
