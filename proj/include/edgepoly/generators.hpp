#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgepoly/errors.hpp"
#include "edgepoly/graph.hpp"
#include "edgepoly/random.hpp"

namespace edgepoly::gen {

using PairList = std::vector<std::pair<Vertex, Vertex>>;

inline Graph complete(std::size_t n) {
  if (n < 2) throw ValidationError("complete graph needs n >= 2");
  PairList pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return Graph(n, pairs);
}

/// K_{a,b}; the first part is {0..a-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw ValidationError("complete bipartite graph needs both parts non-empty");
  PairList pairs;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) pairs.emplace_back(i, a + j);
  return Graph(a + b, pairs);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw ValidationError("cycle needs n >= 3");
  PairList pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph(n, pairs);
}

inline Graph path(std::size_t n) {
  if (n < 2) throw ValidationError("path needs n >= 2");
  PairList pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph(n, pairs);
}

/// W(4,k): k triangles {3i,3i+1,3i+2} plus a hub 3k joined to everything.
inline Graph windmill(std::size_t k) {
  if (k < 1) throw ValidationError("windmill needs k >= 1");
  const auto hub = static_cast<Vertex>(3 * k);
  PairList pairs;
  for (Vertex j = 0; j < hub; ++j) pairs.emplace_back(j, hub);
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = static_cast<Vertex>(3 * i);
    pairs.emplace_back(a, a + 1);
    pairs.emplace_back(a, a + 2);
    pairs.emplace_back(a + 1, a + 2);
  }
  return Graph(3 * k + 1, pairs);
}

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph petersen() {
  PairList pairs;
  for (Vertex i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, pairs);
}

/// Heawood graph, LCF notation [5,-5]^7 on the Hamiltonian cycle 0..13.
inline Graph heawood() {
  PairList pairs;
  for (Vertex i = 0; i < 14; ++i) {
    pairs.emplace_back(i, (i + 1) % 14);
    if (i % 2 == 0) pairs.emplace_back(i, (i + 5) % 14);
  }
  return Graph(14, pairs);
}

/// G(n,p): pair {i,j} (lexicographic order) is kept iff the next uniform draw
/// from CounterRng(seed) is below p. Same seed, same graph.
inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw ValidationError("gnp needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("gnp needs 0 <= p <= 1");
  CounterRng rng(seed);
  PairList pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.uniform() < p) pairs.emplace_back(i, j);
  return Graph(n, pairs);
}

}  // namespace edgepoly::gen
