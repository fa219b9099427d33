#include "lsseq/cfrac.hpp"

#include <stdexcept>
#include <utility>

namespace lsseq {

CfExpansion cf_of_beta(long L, long S, int depth) {
  if (S < 1) throw std::domain_error("cf_of_beta: requires S >= 1");
  if (depth < 1) throw std::invalid_argument("cf_of_beta: depth must be >= 1");

  CfExpansion out;
  const BigInt D = BigInt(L) * L + 4 * BigInt(S);

  if (is_perfect_square(D)) {
    // beta = (sqrt(D) - L) / (2S) is rational: plain Euclidean expansion
    out.finite_rational = true;
    const Rational b(floor_sqrt(D) - L, 2 * BigInt(S));
    BigInt n = b.num(), d = b.den();
    while (d != 0 && static_cast<int>(out.coeffs.size()) <= depth) {
      BigInt a, r;
      mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      out.coeffs.push_back(a);
      n = d;
      d = r;
    }
    return out;
  }

  // surd algorithm for (P + sqrt(D))/Q; the invariant Q | D - P^2 holds
  // from the start since D - L^2 = 4S = 2 * (2S)
  const BigInt s0 = floor_sqrt(D);
  BigInt P = -L, Q = 2 * BigInt(S);
  for (int i = 0; i <= depth; ++i) {
    BigInt a;
    const BigInt num = P + s0;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
    out.coeffs.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
  return out;
}

ConvergentTable convergents(std::vector<BigInt> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("convergents: empty coefficient list");
  ConvergentTable t;
  t.coeffs = std::move(coeffs);
  t.p = {BigInt(0), BigInt(1)};  // p_{-1}, p_0
  t.q = {BigInt(1), BigInt(0)};  // q_{-1}, q_0
  for (std::size_t i = 1; i < t.coeffs.size(); ++i) {
    t.p.push_back(t.coeffs[i] * t.p[i] + t.p[i - 1]);
    t.q.push_back(t.coeffs[i] * t.q[i] + t.q[i - 1]);
  }
  return t;
}

ConvergentTable beta_convergents_exceeding(long L, const BigInt& bound) {
  std::vector<BigInt> coeffs = {BigInt(0)};
  ConvergentTable t = convergents(coeffs);
  while (t.q.back() <= bound) {
    coeffs.push_back(BigInt(L));
    t = convergents(coeffs);
  }
  return t;
}

OstrowskiDigits ostrowski(const BigInt& N, const ConvergentTable& table, long L) {
  if (N < 1) throw std::invalid_argument("ostrowski: N must be >= 1");
  if (table.q.back() <= N) {
    throw std::invalid_argument("ostrowski: convergent table too shallow for N");
  }
  // l(N): largest index with q_l <= N (greedy resolves the q_1 = q_2 tie
  // for L = 1 in favour of the higher index)
  long l = 1;
  for (long i = table.max_index(); i >= 1; --i) {
    if (table.q_at(i) <= N) {
      l = i;
      break;
    }
  }
  OstrowskiDigits out;
  out.N = N;
  out.top_index = l;
  out.digits.assign(static_cast<std::size_t>(l) + 1, BigInt(0));
  BigInt rem = N;
  for (long i = l; i >= 1; --i) {
    BigInt c;
    mpz_fdiv_q(c.get_mpz_t(), rem.get_mpz_t(), table.q_at(i).get_mpz_t());
    out.digits[static_cast<std::size_t>(i)] = c;
    rem -= c * table.q_at(i);
  }
  if (rem != 0) throw std::logic_error("ostrowski: nonzero remainder");
  (void)L;
  return out;
}

OstrowskiDigits ostrowski_digits(const BigInt& N, long L) {
  return ostrowski(N, beta_convergents_exceeding(L, N), L);
}

PowerIdentityCheck beta_power_identities(long L, unsigned n) {
  const auto ctx = FieldContext::create(L, 1);
  const auto table = convergents(cf_of_beta(L, 1, static_cast<int>(2 * n + 1)).coeffs);

  PowerIdentityCheck check;
  const long m = static_cast<long>(n);
  const QuadElem odd = beta_power(ctx, 2 * n + 1);
  check.odd_identity = odd.x() == Rational(-table.q_at(2 * m)) &&
                       odd.y() == Rational(table.q_at(2 * m + 1));
  const QuadElem even = beta_power(ctx, 2 * n);
  check.even_identity = even.x() == Rational(table.q_at(2 * m - 1)) &&
                        even.y() == Rational(-table.q_at(2 * m));
  return check;
}

}  // namespace lsseq
