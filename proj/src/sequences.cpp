#include "lsseq/sequences.hpp"

#include <cmath>
#include <stdexcept>

namespace lsseq {

LsPointStream::LsPointStream(ContextPtr ctx, std::size_t cap)
    : ctx_(std::move(ctx)), cap_(cap) {
  const long L = ctx_->L(), S = ctx_->S();
  if (L == 1 && S == 0) {
    throw std::invalid_argument("LS points: (L,S) = (1,0) is degenerate (beta = 1)");
  }
  // Lambda^1: left endpoints of the first refinement, already ascending
  const QuadElem b1 = beta_power(ctx_, 1);
  const QuadElem b2 = beta_power(ctx_, 2);
  QuadElem pos = QuadElem::zero(ctx_);
  for (long i = 0; i < L; ++i) {
    points_.push_back(pos);
    pos += b1;
  }
  for (long j = 0; j < S; ++j) {
    points_.push_back(pos);
    pos += b2;
  }
  level_l_ = static_cast<std::size_t>(L);
  level_s_ = static_cast<std::size_t>(S);
}

void LsPointStream::extend_level() {
  const long L = ctx_->L(), S = ctx_->S();
  const std::size_t l_n = level_l_;
  const std::size_t appended = (S >= 1 ? static_cast<std::size_t>(L + S - 1)
                                       : static_cast<std::size_t>(L - 1)) * l_n;
  if (points_.size() + appended > cap_) {
    throw std::length_error("LS points: materialization cap exceeded");
  }
  points_.reserve(points_.size() + appended);

  const QuadElem b1 = beta_power(ctx_, level_ + 1);
  const QuadElem b2 = beta_power(ctx_, level_ + 2);
  const long i_max = S >= 1 ? L : L - 1;
  QuadElem offset = b1;
  for (long i = 1; i <= i_max; ++i) {
    for (std::size_t m = 0; m < l_n; ++m) points_.push_back(points_[m] + offset);
    if (i < i_max) offset += b1;
  }
  if (S >= 2) {
    QuadElem base = b1 * Rational(BigInt(L));
    for (long j = 1; j <= S - 1; ++j) {
      base += b2;
      for (std::size_t m = 0; m < l_n; ++m) points_.push_back(points_[m] + base);
    }
  }
  ++level_;
  const std::size_t next_l = static_cast<std::size_t>(L) * level_l_ + level_s_;
  level_s_ = static_cast<std::size_t>(S) * level_l_;
  level_l_ = next_l;
}

const QuadElem& LsPointStream::next() {
  if (cursor_ >= cap_) throw std::length_error("LS points: materialization cap exceeded");
  while (cursor_ >= points_.size()) extend_level();
  return points_[cursor_++];
}

std::vector<QuadElem> ls_points(long L, long S, std::size_t count, std::size_t cap) {
  if (count < 1) throw std::invalid_argument("ls_points: count must be >= 1");
  if (count > cap) throw std::length_error("ls_points: count exceeds memory cap");
  LsPointStream stream(FieldContext::create(L, S), cap);
  std::vector<QuadElem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

std::vector<Rational> van_der_corput(unsigned base, std::size_t count) {
  if (base < 2) throw std::invalid_argument("van_der_corput: base must be >= 2");
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    // digit reversal: n = sum d_i b^i  ->  sum d_i b^-(i+1)
    BigInt rev = 0, scale = 1;
    std::size_t m = n;
    while (m > 0) {
      rev = rev * base + static_cast<unsigned long>(m % base);
      scale *= base;
      m /= base;
    }
    out.emplace_back(rev, scale);
  }
  return out;
}

namespace {

// fractional part of e + z assuming 0 <= e < 1 and 0 <= z < 1
QuadElem step_frac(const QuadElem& e, const QuadElem& z, const QuadElem& one) {
  QuadElem s = e + z;
  if (s.compare(one) >= 0) s -= one;
  return s;
}

}  // namespace

std::vector<QuadElem> kronecker(const QuadElem& z, std::size_t count) {
  const auto& ctx = z.context();
  const QuadElem one = QuadElem::one(ctx);
  const QuadElem zf = z.fractional();
  std::vector<QuadElem> out;
  out.reserve(count);
  QuadElem cur = QuadElem::zero(ctx);
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(cur);
    cur = step_frac(cur, zf, one);
  }
  return out;
}

std::vector<double> kronecker(double z, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    long double v = std::fmod(static_cast<long double>(n) * z, 1.0L);
    if (v < 0) v += 1.0L;
    out.push_back(static_cast<double>(v));
  }
  return out;
}

std::vector<QuadElem> symmetrized_kronecker(const QuadElem& z, std::size_t count) {
  const auto& ctx = z.context();
  const QuadElem one = QuadElem::one(ctx);
  const QuadElem zf = z.fractional();
  std::vector<QuadElem> out;
  out.reserve(count);
  QuadElem pos = QuadElem::zero(ctx);  // {m z}
  for (std::size_t k = 0; k < count; ++k) {
    if (k == 0) {
      out.push_back(pos);
      continue;
    }
    if (k % 2 == 1) {
      pos = step_frac(pos, zf, one);  // advance to m = (k+1)/2
      out.push_back(pos);
    } else {
      // {-m z} = 1 - {m z} unless {m z} = 0
      out.push_back(pos.is_zero() ? pos : one - pos);
    }
  }
  return out;
}

std::vector<double> symmetrized_kronecker(double z, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const long long m = k % 2 == 1 ? (static_cast<long long>(k) + 1) / 2
                                   : -(static_cast<long long>(k) / 2);
    long double v = std::fmod(static_cast<long double>(m) * z, 1.0L);
    if (v < 0) v += 1.0L;
    out.push_back(static_cast<double>(v));
  }
  return out;
}

}  // namespace lsseq
