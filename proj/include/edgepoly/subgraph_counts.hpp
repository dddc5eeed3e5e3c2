#pragma once

#include <cstdint>

#include "edgepoly/graph.hpp"

namespace edgepoly {

/// Number of 4-cycle subgraphs. Each 4-cycle has two diagonals, and a pair
/// {u,v} with m common neighbors is the diagonal of C(m,2) of them.
inline std::uint64_t count_c4(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::uint64_t twice = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t m = (g.neighbors(u) & g.neighbors(v)).size();
      if (m >= 2) twice += m * (m - 1) / 2;
    }
  return twice / 2;
}

/// Number of 4-cliques, each counted once via its lexicographically first edge.
inline std::uint64_t count_k4(const Graph& g) {
  std::uint64_t count = 0;
  for (const Edge& e : g.edges()) {
    VertexSet common = g.neighbors(e.u) & g.neighbors(e.v);
    common.erase_below(e.v + 1);
    common.for_each([&](Vertex w) {
      VertexSet later = common & g.neighbors(w);
      later.erase_below(w + 1);
      count += later.size();
    });
  }
  return count;
}

}  // namespace edgepoly
