#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "edgepoly/errors.hpp"
#include "edgepoly/generators.hpp"
#include "edgepoly/parallel.hpp"
#include "edgepoly/polyskeleton.hpp"
#include "edgepoly/random.hpp"

namespace edgepoly {

/// Monte-Carlo estimate of E f1(P(G(n,p))) against the closed form.
struct ExperimentReport {
  std::size_t n = 0;
  double p = 0.0;  ///< the probability actually sampled (a double approximation when irrational)
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  mpq_class mean_f1;  ///< exact sample mean
  double stderr_f1 = 0.0;
  double expected_f1 = 0.0;
  std::optional<double> z_score;  ///< (mean - expected) / stderr; 0 when both are exact and equal, empty if undefined
};

namespace detail {

inline void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("probability must lie in [0, 1]");
}

inline mpq_class binom2(std::size_t n) { return n < 2 ? mpq_class(0) : mpq_class(n * (n - 1) / 2); }

}  // namespace detail

/// E f1 = n C(n-1,2) p^2 + (1/2) C(n,2) C(n-2,2) p^2 (1-p^2)^2, exactly.
///
/// The first term counts pairs of edges with a common endpoint, which always
/// span a polytope edge; the second counts disjoint pairs, which do unless
/// both of their cross matchings are present.
inline mpq_class expected_f1_exact(std::size_t n, const mpq_class& p) {
  if (n < 2) throw ValidationError("expected_f1_exact: n must be at least 2");
  if (p < 0 || p > 1) throw ValidationError("expected_f1_exact: p must lie in [0, 1]");
  const mpq_class p2 = p * p;
  const mpq_class q = 1 - p2;
  return mpq_class(n) * detail::binom2(n - 1) * p2 + detail::binom2(n) * detail::binom2(n - 2) * p2 * q * q / 2;
}

inline double expected_f1(std::size_t n, double p) {
  if (n < 2) throw ValidationError("expected_f1: n must be at least 2");
  detail::check_probability(p);
  const double nn = static_cast<double>(n);
  const double p2 = p * p;
  const double q = 1.0 - p2;
  return nn * ((nn - 1) * (nn - 2) / 2) * p2 + 0.5 * (nn * (nn - 1) / 2) * ((nn - 2) * (nn - 3) / 2) * p2 * q * q;
}

/// E f1 at p = 1/sqrt(3), where p^2 = 1/3 is rational:
/// n(n-1)(n-2)(n+6)/54 = n^4/54 + n^3/18 - 8n^2/27 + 2n/9.
inline mpq_class expected_f1_inv_sqrt3(std::size_t n) {
  const mpq_class x(n);
  return x * x * x * x / 54 + x * x * x / 18 - 8 * x * x / 27 + 2 * x / 9;
}

/// f1 of P(G) for a sampled graph, ignoring isolated vertices.
inline std::uint64_t sampled_f1(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  return f_counts(drop_isolated(g)).f1;
}

/// Seed of trial i, derived from (seed, i) alone.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) { return CounterRng(seed).split(trial).key(); }

inline ExperimentReport estimate_f1_mc(std::size_t n, double p, std::size_t trials, std::uint64_t seed,
                                       unsigned threads = 1) {
  if (n < 2) throw ValidationError("estimate_f1_mc: n must be at least 2");
  if (trials < 1) throw ValidationError("estimate_f1_mc: trials must be at least 1");
  detail::check_probability(p);

  std::vector<std::uint64_t> f1(trials);
  parallel_for(trials, threads, [&](std::size_t i) { f1[i] = sampled_f1(gen::gnp(n, p, trial_seed(seed, i))); });

  mpz_class sum = 0;
  mpz_class sum_sq = 0;
  for (auto v : f1) {
    const mpz_class x(static_cast<unsigned long>(v));
    sum += x;
    sum_sq += x * x;
  }

  ExperimentReport r;
  r.n = n;
  r.p = p;
  r.trials = trials;
  r.seed = seed;
  r.mean_f1 = mpq_class(sum, static_cast<unsigned long>(trials));
  r.mean_f1.canonicalize();
  if (trials > 1) {
    const mpz_class t(static_cast<unsigned long>(trials));
    mpq_class var(sum_sq * t - sum * sum, t * (t - 1));
    var.canonicalize();
    r.stderr_f1 = std::sqrt(var.get_d() / static_cast<double>(trials));
  }
  r.expected_f1 = expected_f1(n, p);
  const double diff = r.mean_f1.get_d() - r.expected_f1;
  if (r.stderr_f1 > 0) r.z_score = diff / r.stderr_f1;
  else if (diff == 0) r.z_score = 0.0;
  return r;
}

}  // namespace edgepoly
