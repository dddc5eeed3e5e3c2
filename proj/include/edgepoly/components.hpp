#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "edgepoly/graph.hpp"

namespace edgepoly {

/// Connected components with a bipartiteness flag each.
/// An isolated vertex is its own component and counts as bipartite.
struct ComponentDecomposition {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> bipartite;
  std::size_t c0 = 0;  ///< number of bipartite components

  std::size_t count() const { return components.size(); }
};

/// Components of the induced subgraph G[within]. Components are listed in
/// order of their smallest vertex; vertices inside a component are sorted.
inline ComponentDecomposition components_within(const Graph& g, const VertexSet& within) {
  ComponentDecomposition out;
  std::vector<int> color(g.vertex_count(), -1);
  std::vector<Vertex> queue;
  within.for_each([&](Vertex root) {
    if (color[root] != -1) return;
    bool bipartite = true;
    queue.assign(1, root);
    color[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      (g.neighbors(v) & within).for_each([&](Vertex w) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          bipartite = false;
        }
      });
    }
    std::sort(queue.begin(), queue.end());
    out.components.push_back(queue);
    out.bipartite.push_back(bipartite);
    if (bipartite) ++out.c0;
  });
  return out;
}

inline ComponentDecomposition decompose(const Graph& g) { return components_within(g, g.all_vertices()); }

inline bool is_connected(const Graph& g) { return decompose(g).count() == 1; }

inline bool is_bipartite(const Graph& g) { return decompose(g).c0 == decompose(g).count(); }

/// The color class containing vertex 0 of a connected bipartite graph, or
/// nullopt when g is not bipartite.
inline std::optional<VertexSet> bipartition_side(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  std::vector<Vertex> queue{0};
  color[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    bool clash = false;
    g.neighbors(v).for_each([&](Vertex w) {
      if (color[w] == -1) {
        color[w] = 1 - color[v];
        queue.push_back(w);
      } else if (color[w] == color[v]) {
        clash = true;
      }
    });
    if (clash) return std::nullopt;
  }
  VertexSet side(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (color[v] == 0) side.insert(static_cast<Vertex>(v));
  return side;
}

}  // namespace edgepoly
