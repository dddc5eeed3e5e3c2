#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "edgepoly/facets.hpp"
#include "edgepoly/generators.hpp"
#include "edgepoly/oracle.hpp"

namespace edgepoly {

/// One row of the windmill facet experiment.
struct WindmillRow {
  std::size_t k = 0;
  std::size_t dim = 0;
  std::size_t facets = 0;          ///< from enumerate_facets
  std::uint64_t published = 0;     ///< 4^k + 3k - 1, the count claimed in the literature
  std::uint64_t lower = 0;         ///< 4^floor(dim/3)
  std::uint64_t upper = 0;         ///< 2^dim + dim
  std::optional<std::size_t> oracle_facets;
  std::optional<bool> oracle_match;  ///< same set of tight vertex sets

  bool lower_ok() const { return facets > lower; }
  bool upper_ok() const { return facets <= upper; }
};

/// Facet counts of W(4,k) for k = 1..k_max; oracle cross-check for k <= oracle_k_max.
inline std::vector<WindmillRow> windmill_experiment(std::size_t k_max, std::size_t oracle_k_max) {
  std::vector<WindmillRow> rows;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const Graph g = gen::windmill(k);
    const FacetList list = enumerate_facets(g);
    WindmillRow r;
    r.k = k;
    r.dim = dimension(g);
    r.facets = list.facets.size();
    r.published = (std::uint64_t{1} << (2 * k)) + 3 * k - 1;
    r.lower = std::uint64_t{1} << (2 * (r.dim / 3));
    r.upper = (std::uint64_t{1} << r.dim) + r.dim;
    if (k <= oracle_k_max) {
      const auto brute = oracle::tight_sets(oracle::brute_facets(g));
      std::set<std::vector<std::size_t>> ours;
      for (const auto& f : list.facets) ours.insert(f.facet_vertices);
      r.oracle_facets = brute.size();
      r.oracle_match = brute == ours;
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace edgepoly
