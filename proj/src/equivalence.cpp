#include "lsseq/equivalence.hpp"

#include <algorithm>

#include "lsseq/cfrac.hpp"
#include "lsseq/partitions.hpp"
#include "lsseq/sequences.hpp"

namespace lsseq {

IndexMap kronecker_indices(long L, std::size_t count) {
  const auto ctx = FieldContext::create(L, 1);
  const auto pts = ls_points(L, 1, count);
  const QuadElem one = QuadElem::one(ctx);

  IndexMap map;
  map.L = L;
  map.indices.reserve(count);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const QuadElem& p = pts[k];
    if (!p.x().is_integer() || !p.y().is_integer()) {
      throw StructuralError("kronecker_indices: non-integer coordinates at position " +
                            std::to_string(k + 1));
    }
    if (p.sign() < 0 || p.compare(one) >= 0) {
      throw StructuralError("kronecker_indices: point outside [0,1) at position " +
                            std::to_string(k + 1));
    }
    // p = x + y*beta in [0,1) forces x = -floor(y*beta), i.e. p = {y*beta}
    const BigInt y = p.y().num();
    const BigInt expected_x = -QuadElem(0, Rational(y), ctx).floor();
    if (p.x().num() != expected_x) {
      throw StructuralError("kronecker_indices: x != -floor(y*beta) at position " +
                            std::to_string(k + 1));
    }
    map.indices.push_back(y);
  }
  return map;
}

std::vector<BlockReport> verify_block_index_ranges(long L, unsigned max_level) {
  std::vector<BlockReport> reports;
  if (max_level == 0) return reports;

  // block n ends at prefix position t_{n-1}
  const BigInt t_last = ls_counts(L, 1, max_level - 1).t;
  const std::size_t total = t_last.get_ui();
  const IndexMap map = kronecker_indices(L, total);
  std::vector<BigInt> coeffs(max_level + 1, BigInt(L));
  coeffs[0] = 0;
  const auto table = convergents(std::move(coeffs));

  auto range_pass = [](const std::vector<BigInt>& observed, const BigInt& lo, const BigInt& hi) {
    std::vector<BigInt> s = observed;
    std::sort(s.begin(), s.end());
    if (s.empty() || s.front() != lo || s.back() != hi) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] != s[i - 1] + 1) return false;
    }
    return true;
  };

  for (unsigned n = 1; n <= max_level; ++n) {
    BlockReport r;
    r.block_index = n;
    std::size_t begin, end;  // 0-based position range [begin, end)
    if (n == 1) {
      begin = 0;
      end = 1;
      r.expected_lo = 0;
      r.expected_hi = 0;
    } else {
      begin = ls_counts(L, 1, n - 2).t.get_ui();
      end = ls_counts(L, 1, n - 1).t.get_ui();
      if (n % 2 == 0) {
        r.expected_lo = table.q_at(static_cast<long>(n) - 2) + 1;
        r.expected_hi = table.q_at(static_cast<long>(n));
      } else {
        r.expected_lo = -(table.q_at(static_cast<long>(n)) - 1);
        r.expected_hi = -table.q_at(static_cast<long>(n) - 2);
      }
    }
    r.observed.assign(map.indices.begin() + static_cast<long>(begin),
                      map.indices.begin() + static_cast<long>(end));
    r.pass = range_pass(r.observed, r.expected_lo, r.expected_hi);
    reports.push_back(std::move(r));
  }
  return reports;
}

bool verify_index_contiguity(long L, unsigned max_level) {
  const BigInt t_last = ls_counts(L, 1, max_level).t;
  const IndexMap map = kronecker_indices(L, t_last.get_ui());

  for (unsigned n = 0; n <= max_level; ++n) {
    const std::size_t tn = ls_counts(L, 1, n).t.get_ui();
    std::vector<BigInt> prefix(map.indices.begin(), map.indices.begin() + static_cast<long>(tn));
    std::sort(prefix.begin(), prefix.end());
    if (prefix.front() > 0 || prefix.back() < 0) return false;
    for (std::size_t i = 1; i < prefix.size(); ++i) {
      if (prefix[i] != prefix[i - 1] + 1) return false;
    }
  }
  return true;
}

bool verify_vdc(long base, std::size_t count) {
  const auto pts = ls_points(base, 0, count);
  const auto ref = van_der_corput(static_cast<unsigned>(base), count);
  for (std::size_t i = 0; i < count; ++i) {
    if (pts[i].y().sign() != 0 || pts[i].x() != ref[i]) return false;
  }
  return true;
}

DenominatorProbe denominator_probe(long L, long S, unsigned k_max) {
  if (S < 2) throw std::domain_error("denominator_probe: requires S >= 2");
  const auto ctx = FieldContext::create(L, S);
  if (ctx->beta_rational()) {
    throw std::domain_error("denominator_probe: beta is rational for (L,S) = (" +
                            std::to_string(L) + "," + std::to_string(S) +
                            "): discriminant is a perfect square, no growth to probe");
  }
  DenominatorProbe probe;
  probe.L = L;
  probe.S = S;
  probe.max_denominator = 1;
  BigInt prev = 1;
  for (unsigned k = 0; k <= k_max; ++k) {
    BigInt d = beta_power(ctx, k).denominator();
    if (d < prev) probe.nondecreasing = false;
    if (d > probe.max_denominator) probe.max_denominator = d;
    probe.denominators.emplace_back(k, d);
    prev = std::move(d);
  }
  return probe;
}

}  // namespace lsseq
