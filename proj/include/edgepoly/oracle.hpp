#pragma once

// Exact-geometry ground truth for edge polytopes. Everything here works on
// explicit vertex coordinates with GMP rationals and never consults the
// combinatorial formulas it is used to check.

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "edgepoly/errors.hpp"
#include "edgepoly/graph.hpp"
#include "edgepoly/oracle/linear_algebra.hpp"
#include "edgepoly/oracle/simplex.hpp"

namespace edgepoly::oracle {

using Rational = mpq_class;

struct RationalPoint {
  std::vector<Rational> coords;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// normal . x >= offset for every input point, with equality exactly on tight_set.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;
  std::vector<std::size_t> tight_set;
};

struct BruteFacetOptions {
  std::size_t max_points = 16;
  std::size_t max_dim = 8;
  bool override_caps = false;
};

/// Outcome of the face test for a vertex subset U.
struct FaceTest {
  bool is_face = true;
  /// When U is not a face: a point of aff(U) ∩ conv(V \ U), with the convex
  /// weights on V \ U and the affine weights on U that produce it.
  std::vector<Rational> witness_point;
  std::vector<Rational> convex_weights;
  std::vector<Rational> affine_weights;
  std::size_t pivots = 0;
};

/// e_i + e_j for every edge {i,j}, in edge order.
inline std::vector<RationalPoint> polytope_vertices(const Graph& g) {
  require_no_isolated(g, "polytope_vertices");
  std::vector<RationalPoint> pts;
  pts.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    RationalPoint p{std::vector<Rational>(g.vertex_count(), 0)};
    p.coords[e.u] = 1;
    p.coords[e.v] = 1;
    pts.push_back(std::move(p));
  }
  return pts;
}

/// Dimension of the affine hull, by elimination on differences to the first point.
inline std::size_t affine_dim(std::span<const RationalPoint> points) {
  if (points.empty()) throw ValidationError("affine_dim: empty point list");
  Matrix<Rational> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row(points[i].coords.size());
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = points[i].coords[c] - points[0].coords[c];
    diffs.push_back(std::move(row));
  }
  return rank(std::move(diffs));
}

inline std::size_t affine_dim(std::span<const RationalPoint> points, std::span<const std::size_t> subset) {
  std::vector<RationalPoint> chosen;
  chosen.reserve(subset.size());
  for (auto i : subset) chosen.push_back(points[i]);
  return affine_dim(chosen);
}

/// U is the vertex set of a face iff aff(U) ∩ conv(V \ U) = ∅.
///
/// Decided as infeasibility of: λ ≥ 0 on V \ U with Σλ = 1, μ = μ⁺ − μ⁻ on U
/// with Σμ = 1, and Σ λ_v v = Σ μ_u u.
inline FaceTest face_test(std::span<const RationalPoint> points, std::span<const std::size_t> subset) {
  if (subset.empty()) throw ValidationError("face_test: U must be non-empty");
  std::vector<bool> in_u(points.size(), false);
  for (auto i : subset) {
    if (i >= points.size()) throw ValidationError("face_test: index out of range");
    in_u[i] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!in_u[i]) rest.push_back(i);
  std::vector<std::size_t> u(subset.begin(), subset.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());

  FaceTest out;
  if (rest.empty()) return out;

  const std::size_t dim = points[0].coords.size();
  const std::size_t cols = rest.size() + 2 * u.size();
  Matrix<Rational> a(dim + 2, std::vector<Rational>(cols, 0));
  std::vector<Rational> b(dim + 2, 0);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t j = 0; j < rest.size(); ++j) a[r][j] = points[rest[j]].coords[r];
    for (std::size_t j = 0; j < u.size(); ++j) {
      a[r][rest.size() + 2 * j] = -points[u[j]].coords[r];
      a[r][rest.size() + 2 * j + 1] = points[u[j]].coords[r];
    }
  }
  for (std::size_t j = 0; j < rest.size(); ++j) a[dim][j] = 1;
  for (std::size_t j = 0; j < u.size(); ++j) {
    a[dim + 1][rest.size() + 2 * j] = 1;
    a[dim + 1][rest.size() + 2 * j + 1] = -1;
  }
  b[dim] = 1;
  b[dim + 1] = 1;

  auto lp = find_nonnegative_solution(std::move(a), std::move(b));
  out.pivots = lp.pivots;
  out.is_face = !lp.feasible;
  if (lp.feasible) {
    out.convex_weights.assign(lp.solution.begin(), lp.solution.begin() + static_cast<std::ptrdiff_t>(rest.size()));
    out.witness_point.assign(dim, 0);
    for (std::size_t j = 0; j < rest.size(); ++j)
      for (std::size_t r = 0; r < dim; ++r) out.witness_point[r] += out.convex_weights[j] * points[rest[j]].coords[r];
    for (std::size_t j = 0; j < u.size(); ++j)
      out.affine_weights.push_back(lp.solution[rest.size() + 2 * j] - lp.solution[rest.size() + 2 * j + 1]);
  }
  return out;
}

/// Face test on a set of graph edges (the polytope vertices they index).
inline bool is_face(const Graph& g, std::span<const Edge> edges) {
  std::vector<std::size_t> idx;
  for (const Edge& e : edges) {
    auto i = g.edge_index(e.u, e.v);
    if (!i) throw ValidationError("is_face: {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "} is not an edge");
    idx.push_back(*i);
  }
  const auto pts = polytope_vertices(g);
  return face_test(pts, idx).is_face;
}

namespace detail {

/// Scales to a primitive integer vector (sign preserved).
inline void make_primitive(std::vector<Rational>& v, Rational& offset) {
  mpz_class lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), offset.get_den_mpz_t());
  mpz_class gcd = 0;
  for (auto& x : v) {
    x *= lcm;
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_num_mpz_t());
  }
  offset *= lcm;
  mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), offset.get_num_mpz_t());
  if (gcd == 0) return;
  for (auto& x : v) x /= gcd;
  offset /= gcd;
}

/// Advances `idx` to the next k-combination of {0..n-1}; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace detail

/// All facets by brute force over d-subsets of the points.
///
/// Works inside the affine hull: the points are projected onto d coordinates
/// that form a basis of the difference space, where the polytope is
/// full-dimensional. Each affinely independent d-subset spans a candidate
/// hyperplane, kept when every point lies weakly on one side.
inline std::vector<Hyperplane> brute_facets(std::span<const RationalPoint> points, const BruteFacetOptions& opts = {}) {
  if (points.empty()) throw ValidationError("brute_facets: empty point list");
  const std::size_t n_pts = points.size();
  const std::size_t ambient = points[0].coords.size();

  Matrix<Rational> diffs;
  for (std::size_t i = 1; i < n_pts; ++i) {
    std::vector<Rational> row(ambient);
    for (std::size_t c = 0; c < ambient; ++c) row[c] = points[i].coords[c] - points[0].coords[c];
    diffs.push_back(std::move(row));
  }
  const std::vector<std::size_t> basis_coords = row_reduce(diffs);
  const std::size_t d = basis_coords.size();

  if (!opts.override_caps && (n_pts > opts.max_points || d > opts.max_dim))
    throw ResourceError("brute_facets: " + std::to_string(n_pts) + " points in dimension " + std::to_string(d) +
                        " exceed the caps (" + std::to_string(opts.max_points) + " points, dimension " +
                        std::to_string(opts.max_dim) + ")");
  if (d == 0) return {};

  std::vector<std::vector<Rational>> proj(n_pts, std::vector<Rational>(d));
  for (std::size_t i = 0; i < n_pts; ++i)
    for (std::size_t c = 0; c < d; ++c) proj[i][c] = points[i].coords[basis_coords[c]];

  std::vector<Hyperplane> facets;
  std::vector<std::vector<bool>> tight_masks;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  do {
    // A d-subset inside a known facet spans that facet's hyperplane again.
    bool covered = false;
    for (const auto& mask : tight_masks) {
      covered = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return mask[i]; });
      if (covered) break;
    }
    if (covered) continue;

    Matrix<Rational> sys(d, std::vector<Rational>(d + 1));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) sys[r][c] = proj[idx[r]][c];
      sys[r][d] = 1;
    }
    auto ker = kernel(std::move(sys), d + 1);
    if (ker.size() != 1) continue;  // affinely dependent subset
    std::vector<Rational> a(ker[0].begin(), ker[0].begin() + static_cast<std::ptrdiff_t>(d));
    const Rational c = ker[0][d];

    int sign = 0;
    bool valid = true;
    std::vector<Rational> values(n_pts);
    for (std::size_t i = 0; i < n_pts && valid; ++i) {
      values[i] = c;
      for (std::size_t k = 0; k < d; ++k) values[i] += a[k] * proj[i][k];
      const int s = sgn(values[i]);
      if (s != 0) {
        if (sign == 0) sign = s;
        else if (s != sign) valid = false;
      }
    }
    if (!valid || sign == 0) continue;

    Hyperplane h;
    h.normal.assign(ambient, 0);
    for (std::size_t k = 0; k < d; ++k) h.normal[basis_coords[k]] = sign * a[k];
    h.offset = -sign * c;
    detail::make_primitive(h.normal, h.offset);
    std::vector<bool> mask(n_pts, false);
    for (std::size_t i = 0; i < n_pts; ++i)
      if (values[i] == 0) {
        h.tight_set.push_back(i);
        mask[i] = true;
      }
    tight_masks.push_back(std::move(mask));
    facets.push_back(std::move(h));
  } while (detail::next_combination(idx, n_pts));

  std::sort(facets.begin(), facets.end(),
            [](const Hyperplane& x, const Hyperplane& y) { return x.tight_set < y.tight_set; });
  return facets;
}

inline std::vector<Hyperplane> brute_facets(const Graph& g, const BruteFacetOptions& opts = {}) {
  const auto pts = polytope_vertices(g);
  return brute_facets(pts, opts);
}

/// Tight sets of a facet list, for set comparisons.
inline std::set<std::vector<std::size_t>> tight_sets(const std::vector<Hyperplane>& facets) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& h : facets) out.insert(h.tight_set);
  return out;
}

}  // namespace edgepoly::oracle
