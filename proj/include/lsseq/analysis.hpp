#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lsseq/cfrac.hpp"
#include "lsseq/quad.hpp"

namespace lsseq {

// Extreme discrepancy D_N by the sorted-points identity
//   D_N = 1/N + max_i (i/N - x_(i)) - min_i (i/N - x_(i)),
// exact over Q(beta).  Throws std::domain_error for points outside [0,1).
QuadElem discrepancy_exact(std::span<const QuadElem> points);

// Star discrepancy D*_N = 1/(2N) + max_i |x_(i) - (2i-1)/(2N)|, exact.
QuadElem star_discrepancy(std::span<const QuadElem> points);

// Floating-point variants for float-mode sequences.
double discrepancy_float(std::span<const double> points);
double star_discrepancy_float(std::span<const double> points);

// Brute-force extreme-discrepancy oracle: maximizes |A(B)/N - lambda(B)|
// over all intervals with endpoints drawn from {0, 1, x_1..x_N}, taking
// one-sided limits at every endpoint (each boundary point included or
// excluded).  Quadratic in N; guarded at N <= 2048.  Exact.
QuadElem discrepancy_oracle(std::span<const QuadElem> points);

// Constants of the recurrence-based discrepancy bound
//   D_N <= delta * log(N)/N + gamma/N   for L >= S >= 1,
// with gamma = B + 2 and delta = B/|log beta|.
struct IzBoundConstants {
  long L, S;
  double tau1, lambda1, R, B;
  double gamma, delta;
};

IzBoundConstants iz_bound(long L, long S);

// Constants of the continued-fraction block bound for S = 1:
//   D_N <= 3/N + (1/log(alpha) + L/log(L+1)) * log(N)/N,
// alpha the golden ratio.  `published_delta` carries the reference value
// reported alongside the formula for L = 1 and L = 10; those numbers do not
// match the formula as printed and are flagged unreconciled rather than
// substituted.
struct Cor2BoundConstants {
  long L;
  double alpha, gamma, delta;
  std::optional<double> published_delta;
  bool published_matches = false;
};

Cor2BoundConstants cor2_bound(long L);

// delta(L) * log(L) / L for the S = 1 slope; tends to 1 as L grows.
double asymptotic_ratio(long long L);

// One row of a discrepancy curve: exact discrepancies for a point prefix
// next to the two bound evaluations at the same N.
struct DiscrepancyReport {
  unsigned long long N = 0;
  double d_extreme = 0.0;
  double d_star = 0.0;
  double n_d_over_log_n = 0.0;  // meaningful only when has_ratio
  bool has_ratio = false;       // false at N = 1
  double iz_value = 0.0;
  double cor2_value = 0.0;
  bool has_cor2 = false;
};

DiscrepancyReport discrepancy_report(std::span<const QuadElem> points,
                                     const IzBoundConstants& iz,
                                     const std::optional<Cor2BoundConstants>& cor2);

// Decomposes the first N LS points (S = 1) into c_i consecutive blocks of
// length q_i, most-significant digits first, and checks each block's exact
// discrepancy against the strict bound 1/q_{i-1} + 1/q_i (blocks at i = 1
// pass vacuously since q_0 = 0).
struct BlockDiscrepancy {
  long index;             // convergent index i
  BigInt q;               // block length q_i
  std::size_t offset;     // start position within the prefix (0-based)
  double discrepancy;     // approximation of the exact block discrepancy
  bool pass;              // exact strict comparison
};

struct BlockDiscrepancyReport {
  long L = 0;
  BigInt N;
  std::vector<BlockDiscrepancy> blocks;
  bool all_pass = true;
};

BlockDiscrepancyReport block_discrepancy_check(long L, std::size_t N);

}  // namespace lsseq
