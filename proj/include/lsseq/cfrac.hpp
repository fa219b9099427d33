#pragma once

#include <vector>

#include "lsseq/quad.hpp"
#include "lsseq/rational.hpp"

namespace lsseq {

// Continued fraction expansion of beta.  `finite_rational` is set when beta
// is rational (perfect-square discriminant) and the expansion terminates
// before the requested depth.
struct CfExpansion {
  std::vector<BigInt> coeffs;  // a_0, a_1, ...
  bool finite_rational = false;
};

// Coefficients a_0 .. a_depth of the expansion of beta, computed by the
// standard surd algorithm over exact integers.  For S = 1 this yields
// a_0 = 0 and a_i = L throughout.
CfExpansion cf_of_beta(long L, long S, int depth);

// Convergent numerators/denominators under the convention
//   p_{-1} = 0, p_0 = 1, q_{-1} = 1, q_0 = 0,
//   p_i = a_i p_{i-1} + p_{i-2},  q_i = a_i q_{i-1} + q_{i-2}  (i >= 1),
// which makes q_i the Fibonacci numbers when all a_i = 1.
struct ConvergentTable {
  std::vector<BigInt> coeffs;  // a_0 .. a_d
  std::vector<BigInt> p, q;    // stored from index -1: p[0] = p_{-1}

  long max_index() const { return static_cast<long>(coeffs.size()) - 1; }
  const BigInt& p_at(long i) const { return p.at(static_cast<std::size_t>(i + 1)); }
  const BigInt& q_at(long i) const { return q.at(static_cast<std::size_t>(i + 1)); }
};

ConvergentTable convergents(std::vector<BigInt> coeffs);

// Convergent table of beta for S = 1 with enough depth that q_max > bound.
ConvergentTable beta_convergents_exceeding(long L, const BigInt& bound);

// Greedy digit expansion N = sum c_i q_i with 0 <= c_i <= L and
// q_{l(N)} <= N < q_{l(N)+1}; c_0 is always 0 since q_0 = 0.
struct OstrowskiDigits {
  BigInt N;
  std::vector<BigInt> digits;  // c_0 .. c_{top_index}
  long top_index = 0;          // l(N)
};

OstrowskiDigits ostrowski(const BigInt& N, const ConvergentTable& table, long L);

// Convenience: builds its own table of sufficient depth.
OstrowskiDigits ostrowski_digits(const BigInt& N, long L);

// Exact checks of the two power-basis identities for S = 1:
//   (i)  beta^(2n+1) + q_{2n}   = q_{2n+1} * beta
//   (ii) beta^(2n)   - q_{2n-1} = -q_{2n}  * beta
struct PowerIdentityCheck {
  bool odd_identity = false;
  bool even_identity = false;
  bool both() const { return odd_identity && even_identity; }
};

PowerIdentityCheck beta_power_identities(long L, unsigned n);

}  // namespace lsseq
