#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "lsseq/rational.hpp"

namespace lsseq {

class FieldContext;
using ContextPtr = std::shared_ptr<const FieldContext>;

// Parameters (L, S) with L >= 1, S >= 0 and beta the positive solution of
// L*beta + S*beta^2 = 1.  For S = 0, and for S >= 1 when the discriminant
// L^2 + 4S is a perfect square, beta is rational; the context records which
// case holds and elements then collapse to their rational part.
class FieldContext {
 public:
  static ContextPtr create(long L, long S);

  long L() const { return L_; }
  long S() const { return S_; }
  const BigInt& discriminant() const { return disc_; }  // L^2 + 4S
  bool beta_rational() const { return beta_rational_; }
  const Rational& beta_value() const;  // only valid in the rational case

  // Rational bracket lo < beta < hi with hi - lo = 1/(S * 2^(bits+1)).
  // Only valid in the irrational case.
  std::pair<Rational, Rational> beta_bracket(unsigned bits) const;

  // beta^2 written on the power basis {1, beta}: (1 - L*beta)/S.
  const Rational& beta_sq_x() const { return beta_sq_x_; }
  const Rational& beta_sq_y() const { return beta_sq_y_; }

 private:
  FieldContext(long L, long S);

  long L_, S_;
  BigInt disc_;
  bool beta_rational_ = false;
  Rational beta_rat_;   // 1/L for S = 0, (-L + sqrt(disc))/(2S) for square disc
  Rational beta_sq_x_, beta_sq_y_;
};

inline bool same_field(const FieldContext& a, const FieldContext& b) {
  return a.L() == b.L() && a.S() == b.S();
}

// Element x + y*beta of Q(beta) with exact rational coordinates.  The
// representation is canonical: products are reduced through
// beta^2 = (1 - L*beta)/S so no beta^2 term survives, and in rational-beta
// contexts y is identically zero.
class QuadElem {
 public:
  QuadElem(Rational x, Rational y, ContextPtr ctx);

  static QuadElem zero(ContextPtr ctx) { return QuadElem(0, 0, std::move(ctx)); }
  static QuadElem one(ContextPtr ctx) { return QuadElem(1, 0, std::move(ctx)); }
  static QuadElem beta(ContextPtr ctx) { return QuadElem(0, 1, std::move(ctx)); }
  static QuadElem from_rational(Rational r, ContextPtr ctx) {
    return QuadElem(std::move(r), 0, std::move(ctx));
  }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const ContextPtr& context() const { return ctx_; }

  bool is_zero() const { return x_.sign() == 0 && y_.sign() == 0; }

  // Exact sign by integer case analysis: with A = 2Sx - Ly and B = y,
  // 2S*(x + y*beta) = A + B*sqrt(L^2+4S); the radical term is compared by
  // squaring.  Never touches floating point.
  int sign() const;

  // sign(*this - o) without building the difference element
  int compare(const QuadElem& o) const;

  BigInt floor() const;
  // (floor, fractional part); the parts reconstruct *this exactly
  std::pair<BigInt, QuadElem> split_floor() const;
  QuadElem fractional() const { return split_floor().second; }

  // lcm of the reduced coordinate denominators
  BigInt denominator() const { return big_lcm(x_.den(), y_.den()); }

  // Decimal approximation correct to within one unit in the last requested
  // digit, via outward-rounded bracketing of sqrt(L^2+4S).  The double
  // return type caps the useful precision near 15 digits.
  double approx(int digits) const;

  // Canonical text form "x + y*beta" (or "x - y*beta" for negative y),
  // coordinates as reduced "p/q"; round-trips bit-exactly through parse().
  std::string str() const;
  static QuadElem parse(std::string_view text, ContextPtr ctx);

  QuadElem operator-() const { return QuadElem(-x_, -y_, ctx_); }
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);

  friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
  friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
  friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }

  // rational scalars
  QuadElem& operator+=(const Rational& r) { x_ += r; return *this; }
  QuadElem& operator-=(const Rational& r) { x_ -= r; return *this; }
  QuadElem& operator*=(const Rational& r) { x_ *= r; y_ *= r; return *this; }
  friend QuadElem operator+(QuadElem a, const Rational& r) { return a += r; }
  friend QuadElem operator-(QuadElem a, const Rational& r) { return a -= r; }
  friend QuadElem operator*(QuadElem a, const Rational& r) { return a *= r; }
  friend QuadElem operator*(const Rational& r, QuadElem a) { return a *= r; }

  friend bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;  // canonical coordinates
  }
  friend bool operator!=(const QuadElem& a, const QuadElem& b) { return !(a == b); }
  friend bool operator<(const QuadElem& a, const QuadElem& b) { return a.compare(b) < 0; }
  friend bool operator<=(const QuadElem& a, const QuadElem& b) { return a.compare(b) <= 0; }
  friend bool operator>(const QuadElem& a, const QuadElem& b) { return a.compare(b) > 0; }
  friend bool operator>=(const QuadElem& a, const QuadElem& b) { return a.compare(b) >= 0; }

 private:
  Rational x_, y_;
  ContextPtr ctx_;
};

// beta^k reduced to the power basis {1, beta}.  Uses the coefficient
// recurrence (x, y) -> (y/S, x - L*y/S) for irrational beta and plain
// rational powers otherwise.
QuadElem beta_power(const ContextPtr& ctx, unsigned k);

std::ostream& operator<<(std::ostream& os, const QuadElem& e);

}  // namespace lsseq
