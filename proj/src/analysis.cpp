#include "lsseq/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lsseq/sequences.hpp"

namespace lsseq {

namespace {

void check_unit_range(std::span<const QuadElem> points) {
  if (points.empty()) throw std::invalid_argument("discrepancy: empty point set");
  const QuadElem one = QuadElem::one(points[0].context());
  for (const QuadElem& p : points) {
    if (p.sign() < 0 || p.compare(one) >= 0) {
      throw std::domain_error("discrepancy: point outside [0,1)");
    }
  }
}

std::vector<QuadElem> sorted_copy(std::span<const QuadElem> points) {
  std::vector<QuadElem> s(points.begin(), points.end());
  std::sort(s.begin(), s.end(), [](const QuadElem& a, const QuadElem& b) {
    return a.compare(b) < 0;
  });
  return s;
}

}  // namespace

QuadElem discrepancy_exact(std::span<const QuadElem> points) {
  check_unit_range(points);
  const auto s = sorted_copy(points);
  const ContextPtr& ctx = s[0].context();
  const BigInt N(static_cast<unsigned long>(s.size()));

  // D_N = 1/N + max_i (i/N - x_(i)) - min_i (i/N - x_(i))
  QuadElem maxd = QuadElem::zero(ctx), mind = QuadElem::zero(ctx);
  for (std::size_t i = 1; i <= s.size(); ++i) {
    const QuadElem& p = s[i - 1];
    QuadElem d(Rational(BigInt(static_cast<unsigned long>(i)), N) - p.x(), -p.y(), ctx);
    if (i == 1) {
      maxd = d;
      mind = d;
    } else if (d.compare(maxd) > 0) {
      maxd = std::move(d);
    } else if (d.compare(mind) < 0) {
      mind = std::move(d);
    }
  }
  return QuadElem::from_rational(Rational(BigInt(1), N), ctx) + maxd - mind;
}

QuadElem star_discrepancy(std::span<const QuadElem> points) {
  check_unit_range(points);
  const auto s = sorted_copy(points);
  const ContextPtr& ctx = s[0].context();
  const BigInt twoN = 2 * BigInt(static_cast<unsigned long>(s.size()));

  // D*_N = 1/(2N) + max_i |x_(i) - (2i-1)/(2N)|
  QuadElem best = QuadElem::zero(ctx);
  for (std::size_t i = 1; i <= s.size(); ++i) {
    QuadElem d = s[i - 1] - Rational(BigInt(2 * static_cast<unsigned long>(i)) - 1, twoN);
    if (d.sign() < 0) d = -d;
    if (d.compare(best) > 0) best = std::move(d);
  }
  return QuadElem::from_rational(Rational(BigInt(1), twoN), ctx) + best;
}

double discrepancy_float(std::span<const double> points) {
  if (points.empty()) throw std::invalid_argument("discrepancy: empty point set");
  std::vector<double> s(points.begin(), points.end());
  std::sort(s.begin(), s.end());
  if (s.front() < 0.0 || s.back() >= 1.0) {
    throw std::domain_error("discrepancy: point outside [0,1)");
  }
  const double n = static_cast<double>(s.size());
  double maxd = -2.0, mind = 2.0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    const double d = static_cast<double>(i) / n - s[i - 1];
    maxd = std::max(maxd, d);
    mind = std::min(mind, d);
  }
  return 1.0 / n + maxd - mind;
}

double star_discrepancy_float(std::span<const double> points) {
  if (points.empty()) throw std::invalid_argument("discrepancy: empty point set");
  std::vector<double> s(points.begin(), points.end());
  std::sort(s.begin(), s.end());
  if (s.front() < 0.0 || s.back() >= 1.0) {
    throw std::domain_error("discrepancy: point outside [0,1)");
  }
  const double n = static_cast<double>(s.size());
  double best = 0.0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    best = std::max(best, std::abs(s[i - 1] - (2.0 * static_cast<double>(i) - 1.0) / (2.0 * n)));
  }
  return 1.0 / (2.0 * n) + best;
}

namespace {

// sign of A + B*beta over scaled integer coordinates
int pair_sign(const BigInt& A, const BigInt& B, const FieldContext& ctx) {
  if (B == 0) return sgn(A);
  if (ctx.beta_rational()) {
    const Rational& b = ctx.beta_value();
    return sgn(A * b.den() + B * b.num());
  }
  const BigInt Ap = 2 * ctx.S() * A - ctx.L() * B;
  const int sa = sgn(Ap), sb = sgn(B);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const BigInt lhs = Ap * Ap, rhs = B * B * ctx.discriminant();
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

}  // namespace

QuadElem discrepancy_oracle(std::span<const QuadElem> points) {
  if (points.size() > 2048) {
    throw std::length_error("discrepancy_oracle: size guard (N <= 2048)");
  }
  check_unit_range(points);
  const auto s = sorted_copy(points);
  const ContextPtr& ctx = s[0].context();
  const long N = static_cast<long>(s.size());

  BigInt Qd = 1;
  for (const QuadElem& p : s) {
    Qd = big_lcm(Qd, p.x().den());
    Qd = big_lcm(Qd, p.y().den());
  }

  // scaled integer coordinates of the sorted points
  struct Pt {
    BigInt X, Y;
  };
  std::vector<Pt> pts;
  pts.reserve(s.size());
  for (const QuadElem& p : s) {
    pts.push_back({p.x().num() * (Qd / p.x().den()), p.y().num() * (Qd / p.y().den())});
  }

  // candidate endpoints: 0, the points, 1 (deduplicated)
  std::vector<Pt> cand;
  cand.push_back({BigInt(0), BigInt(0)});
  for (const Pt& p : pts) {
    if (!(p.X == cand.back().X && p.Y == cand.back().Y)) cand.push_back(p);
  }
  cand.push_back({Qd, BigInt(0)});

  // per candidate: #points strictly below / at most the candidate value
  const std::size_t M = cand.size();
  std::vector<long> lt(M), le(M);
  {
    std::size_t k = 0;
    for (std::size_t c = 0; c < M; ++c) {
      while (k < pts.size() &&
             pair_sign(pts[k].X - cand[c].X, pts[k].Y - cand[c].Y, *ctx) < 0) {
        ++k;
      }
      lt[c] = static_cast<long>(k);
      std::size_t k2 = k;
      while (k2 < pts.size() && pts[k2].X == cand[c].X && pts[k2].Y == cand[c].Y) ++k2;
      le[c] = static_cast<long>(k2);
    }
  }

  // score * (N * Qd) for count c over interval (a, b): |c*Qd - N*(b - a)|
  BigInt bestA = 0, bestB = 0;
  BigInt A, B;
  auto consider = [&](long c, const BigInt& dX, const BigInt& dY) {
    if (c < 0) return;  // empty limit interval of a degenerate pair
    A = c * Qd - N * dX;
    B = -N * dY;
    if (pair_sign(A, B, *ctx) < 0) {
      A = -A;
      B = -B;
    }
    if (pair_sign(A - bestA, B - bestB, *ctx) > 0) {
      bestA = A;
      bestB = B;
    }
  };

  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = i; j < M; ++j) {
      const BigInt dX = cand[j].X - cand[i].X;
      const BigInt dY = cand[j].Y - cand[i].Y;
      consider(lt[j] - lt[i], dX, dY);  // [a, b)
      consider(le[j] - lt[i], dX, dY);  // [a, b]
      consider(lt[j] - le[i], dX, dY);  // (a, b)
      consider(le[j] - le[i], dX, dY);  // (a, b]
    }
  }

  const BigInt scale = N * Qd;
  return QuadElem(Rational(bestA, scale), Rational(bestB, scale), ctx);
}

IzBoundConstants iz_bound(long L, long S) {
  if (!(L >= S && S >= 1)) throw std::domain_error("iz_bound: requires L >= S >= 1");
  const long double d = static_cast<long double>(L) * L + 4.0L * S;
  const long double sq = sqrtl(d);
  const long double tau1 = (-L - 2.0L * S + sq) / (2.0L * sq);
  const long double lam1 = (-L + sq) / (2.0L * sq);
  const long double R = std::max(fabsl(tau1), fabsl(tau1 + (L + S - 2) * lam1));
  const long double beta = (-L + sq) / (2.0L * S);
  const long double B = (2.0L * L + S - 2.0L) * (R / (1.0L - S * beta) + 1.0L);
  IzBoundConstants out;
  out.L = L;
  out.S = S;
  out.tau1 = static_cast<double>(tau1);
  out.lambda1 = static_cast<double>(lam1);
  out.R = static_cast<double>(R);
  out.B = static_cast<double>(B);
  out.gamma = static_cast<double>(B + 2.0L);
  out.delta = static_cast<double>(B / fabsl(logl(beta)));
  return out;
}

Cor2BoundConstants cor2_bound(long L) {
  if (L < 1) throw std::domain_error("cor2_bound: requires L >= 1");
  const long double alpha = (1.0L + sqrtl(5.0L)) / 2.0L;
  Cor2BoundConstants out;
  out.L = L;
  out.alpha = static_cast<double>(alpha);
  out.gamma = 3.0;
  out.delta = static_cast<double>(1.0L / logl(alpha) +
                                  static_cast<long double>(L) / logl(static_cast<long double>(L) + 1.0L));
  if (L == 1) out.published_delta = 2.776;
  if (L == 10) out.published_delta = 5.51;
  if (out.published_delta) {
    out.published_matches = std::abs(*out.published_delta - out.delta) < 5e-3;
  }
  return out;
}

double asymptotic_ratio(long long L) {
  if (L < 2) throw std::domain_error("asymptotic_ratio: requires L >= 2");
  const long double alpha = (1.0L + sqrtl(5.0L)) / 2.0L;
  const long double lf = static_cast<long double>(L);
  const long double delta = 1.0L / logl(alpha) + lf / logl(lf + 1.0L);
  return static_cast<double>(delta * logl(lf) / lf);
}

DiscrepancyReport discrepancy_report(std::span<const QuadElem> points,
                                     const IzBoundConstants& iz,
                                     const std::optional<Cor2BoundConstants>& cor2) {
  DiscrepancyReport r;
  r.N = points.size();
  r.d_extreme = discrepancy_exact(points).approx(15);
  r.d_star = star_discrepancy(points).approx(15);
  const double n = static_cast<double>(r.N);
  if (r.N >= 2) {
    r.has_ratio = true;
    r.n_d_over_log_n = n * r.d_extreme / std::log(n);
  }
  r.iz_value = iz.delta * std::log(n) / n + iz.gamma / n;
  if (cor2) {
    r.has_cor2 = true;
    r.cor2_value = cor2->delta * std::log(n) / n + cor2->gamma / n;
  }
  return r;
}

BlockDiscrepancyReport block_discrepancy_check(long L, std::size_t N) {
  BlockDiscrepancyReport report;
  report.L = L;
  report.N = BigInt(static_cast<unsigned long>(N));

  const auto pts = ls_points(L, 1, N);
  const auto table = beta_convergents_exceeding(L, report.N);
  const auto digits = ostrowski(report.N, table, L);

  std::size_t offset = 0;
  for (long i = digits.top_index; i >= 1; --i) {
    const BigInt& qi = table.q_at(i);
    const std::size_t len = qi.get_ui();
    const BigInt& qprev = table.q_at(i - 1);
    const long reps = digits.digits[static_cast<std::size_t>(i)].get_si();
    for (long rep = 0; rep < reps; ++rep) {
      std::span<const QuadElem> block(pts.data() + offset, len);
      const QuadElem d = discrepancy_exact(block);
      BlockDiscrepancy b;
      b.index = i;
      b.q = qi;
      b.offset = offset;
      b.discrepancy = d.approx(15);
      if (qprev == 0) {
        b.pass = true;  // bound 1/q_0 is vacuous
      } else {
        const Rational bound = Rational(BigInt(1), qprev) + Rational(BigInt(1), qi);
        b.pass = (QuadElem::from_rational(bound, pts[0].context()) - d).sign() > 0;
      }
      report.all_pass = report.all_pass && b.pass;
      report.blocks.push_back(std::move(b));
      offset += len;
    }
  }
  if (offset != N) throw std::logic_error("block_discrepancy_check: blocks do not cover prefix");
  return report;
}

}  // namespace lsseq
