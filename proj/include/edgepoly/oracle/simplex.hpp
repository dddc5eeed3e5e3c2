#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "edgepoly/oracle/linear_algebra.hpp"

namespace edgepoly::oracle {

template <class T>
struct Feasibility {
  bool feasible = false;
  std::vector<T> solution;  ///< a point of {A x = b, x >= 0} when feasible
  std::size_t pivots = 0;
};

/// Phase-1 simplex for {A x = b, x >= 0} with Bland's rule, exact arithmetic.
///
/// One artificial variable per row starts in the basis; artificial columns
/// are not stored because once an artificial leaves it never re-enters. The
/// system is feasible iff the artificial objective reaches zero.
template <class T>
Feasibility<T> find_nonnegative_solution(Matrix<T> a, std::vector<T> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Feasibility<T> out;

  for (std::size_t i = 0; i < rows; ++i)
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }

  // basis[i] >= cols marks the artificial of row i.
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  // Artificial objective z = objective + cost . x_N over nonbasic columns;
  // initially every structural column is nonbasic and cost = -(sum of rows).
  std::vector<T> cost(cols, T(0));
  T objective = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) cost[j] -= a[i][j];
    objective += b[i];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = rows;
    T best_ratio = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (a[i][enter] <= 0) continue;
      T ratio = b[i] / a[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    // Phase 1 is bounded below by zero, so some row always qualifies.
    if (leave == rows) break;

    const T inv = T(1) / a[leave][enter];
    for (auto& x : a[leave]) x *= inv;
    b[leave] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || a[i][enter] == 0) continue;
      const T f = a[i][enter];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[leave][j];
      b[i] -= f * b[leave];
    }
    const T f = cost[enter];
    for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * a[leave][j];
    objective += f * b[leave];
    basis[leave] = enter;
    ++out.pivots;
  }

  out.feasible = objective == 0;
  if (out.feasible) {
    out.solution.assign(cols, T(0));
    for (std::size_t i = 0; i < rows; ++i)
      if (basis[i] < cols) out.solution[basis[i]] = b[i];
  }
  return out;
}

}  // namespace edgepoly::oracle
