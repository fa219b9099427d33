#include "lsseq/quad.hpp"

#include <stdexcept>

namespace lsseq {

namespace {

void require_same_field(const FieldContext& a, const FieldContext& b) {
  if (!same_field(a, b)) {
    throw std::invalid_argument("QuadElem: mixed field contexts (L=" +
                                std::to_string(a.L()) + ",S=" + std::to_string(a.S()) +
                                " vs L=" + std::to_string(b.L()) +
                                ",S=" + std::to_string(b.S()) + ")");
  }
}

// sign of A + B*sqrt(D) for rational A, B and non-square D > 0
int radical_sign(const Rational& A, const Rational& B, const BigInt& D) {
  const int sa = A.sign(), sb = B.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: the larger square decides
  const Rational a2 = A * A;
  const Rational b2d = B * B * Rational(D);
  if (a2 == b2d) return 0;  // unreachable for irrational sqrt(D)
  return a2 > b2d ? sa : sb;
}

}  // namespace

FieldContext::FieldContext(long L, long S) : L_(L), S_(S) {
  disc_ = BigInt(L) * L + 4 * BigInt(S);
  if (S == 0) {
    beta_rational_ = true;
    beta_rat_ = Rational(BigInt(1), BigInt(L));
  } else if (is_perfect_square(disc_)) {
    beta_rational_ = true;
    beta_rat_ = Rational(floor_sqrt(disc_) - L, 2 * BigInt(S));
  } else {
    beta_sq_x_ = Rational(BigInt(1), BigInt(S));
    beta_sq_y_ = Rational(BigInt(-L), BigInt(S));
  }
}

ContextPtr FieldContext::create(long L, long S) {
  if (L < 1) throw std::invalid_argument("FieldContext: L must be >= 1");
  if (S < 0) throw std::invalid_argument("FieldContext: S must be >= 0");
  return ContextPtr(new FieldContext(L, S));
}

const Rational& FieldContext::beta_value() const {
  if (!beta_rational_) throw std::logic_error("FieldContext: beta is irrational");
  return beta_rat_;
}

std::pair<Rational, Rational> FieldContext::beta_bracket(unsigned bits) const {
  if (beta_rational_) throw std::logic_error("FieldContext: beta is rational");
  // s = floor(sqrt(D * 4^bits)) gives s/2^bits <= sqrt(D) < (s+1)/2^bits
  const BigInt s = floor_sqrt(disc_ << (2 * bits));
  const BigInt scale = BigInt(1) << bits;
  const BigInt den = 2 * BigInt(S_) * scale;
  return {Rational(s - L_ * scale, den), Rational(s + 1 - L_ * scale, den)};
}

QuadElem::QuadElem(Rational x, Rational y, ContextPtr ctx)
    : x_(std::move(x)), y_(std::move(y)), ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("QuadElem: null context");
  if (ctx_->beta_rational() && y_.sign() != 0) {
    x_ += y_ * ctx_->beta_value();
    y_ = Rational(0);
  }
}

int QuadElem::sign() const {
  if (y_.sign() == 0) return x_.sign();
  // 2S*(x + y*beta) = (2Sx - Ly) + y*sqrt(D)
  const Rational A = Rational(2 * BigInt(ctx_->S())) * x_ - Rational(BigInt(ctx_->L())) * y_;
  return radical_sign(A, y_, ctx_->discriminant());
}

int QuadElem::compare(const QuadElem& o) const {
  require_same_field(*ctx_, *o.ctx_);
  const Rational dy = y_ - o.y_;
  if (dy.sign() == 0) {
    const Rational dx = x_ - o.x_;
    return dx.sign();
  }
  const Rational dx = x_ - o.x_;
  const Rational A = Rational(2 * BigInt(ctx_->S())) * dx - Rational(BigInt(ctx_->L())) * dy;
  return radical_sign(A, dy, ctx_->discriminant());
}

BigInt QuadElem::floor() const {
  if (y_.sign() == 0) return x_.floor();
  const bool up = y_.sign() > 0;
  for (unsigned bits = 32;; bits *= 2) {
    auto [lo, hi] = ctx_->beta_bracket(bits);
    const Rational a = x_ + y_ * (up ? lo : hi);
    const Rational b = x_ + y_ * (up ? hi : lo);
    BigInt fa = a.floor();
    if (fa == b.floor()) return fa;
    if (bits > (1u << 24)) throw std::logic_error("QuadElem::floor: bracket failed to separate");
  }
}

std::pair<BigInt, QuadElem> QuadElem::split_floor() const {
  BigInt f = floor();
  return {f, QuadElem(x_ - Rational(f), y_, ctx_)};
}

double QuadElem::approx(int digits) const {
  if (digits < 1) throw std::invalid_argument("QuadElem::approx: precision must be >= 1");
  if (y_.sign() == 0) return x_.to_double();
  // want bracket width |y| / (S * 2^(bits+1)) < 10^-digits / 2
  const unsigned ybits = static_cast<unsigned>(mpz_sizeinbase(y_.num().get_mpz_t(), 2));
  const unsigned bits = ybits + static_cast<unsigned>(3.33 * digits) + 4;
  auto [lo, hi] = ctx_->beta_bracket(bits);
  const Rational mid = x_ + y_ * ((lo + hi) / Rational(2));
  return mid.to_double();
}

std::string QuadElem::str() const {
  if (y_.sign() < 0) return x_.str() + " - " + (-y_).str() + "*beta";
  return x_.str() + " + " + y_.str() + "*beta";
}

QuadElem QuadElem::parse(std::string_view text, ContextPtr ctx) {
  auto bad = [&] {
    throw std::invalid_argument("QuadElem: cannot parse '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
  auto scan_rational = [&]() -> Rational {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    while (i < text.size() && ((text[i] >= '0' && text[i] <= '9') || text[i] == '/')) ++i;
    if (i == start) bad();
    return Rational::parse(text.substr(start, i - start));
  };

  skip_ws();
  Rational first = scan_rational();
  skip_ws();
  if (i == text.size()) return QuadElem(first, 0, std::move(ctx));

  if (text[i] == '*') {  // "y*beta" with no rational part
    ++i;
    skip_ws();
    if (text.substr(i, 4) != "beta") bad();
    i += 4;
    skip_ws();
    if (i != text.size()) bad();
    return QuadElem(0, first, std::move(ctx));
  }

  if (text[i] != '+' && text[i] != '-') bad();
  const bool negate = text[i] == '-';
  ++i;
  skip_ws();
  Rational second = scan_rational();
  skip_ws();
  if (i >= text.size() || text[i] != '*') bad();
  ++i;
  skip_ws();
  if (text.substr(i, 4) != "beta") bad();
  i += 4;
  skip_ws();
  if (i != text.size()) bad();
  return QuadElem(first, negate ? -second : second, std::move(ctx));
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  require_same_field(*ctx_, *o.ctx_);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  require_same_field(*ctx_, *o.ctx_);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  require_same_field(*ctx_, *o.ctx_);
  if (ctx_->beta_rational()) {  // y parts are identically zero
    x_ *= o.x_;
    return *this;
  }
  // (ax + ay*b)(bx + by*b) = ax*bx + (ax*by + ay*bx)*b + ay*by*b^2,
  // then b^2 = (1 - L*b)/S exactly once
  const Rational cross = x_ * o.y_ + y_ * o.x_;
  const Rational sq = y_ * o.y_;
  x_ = x_ * o.x_ + sq * ctx_->beta_sq_x();
  y_ = cross + sq * ctx_->beta_sq_y();
  return *this;
}

QuadElem beta_power(const ContextPtr& ctx, unsigned k) {
  if (!ctx) throw std::invalid_argument("beta_power: null context");
  if (ctx->beta_rational()) {
    const Rational& b = ctx->beta_value();
    return QuadElem(Rational(big_pow(b.num(), k), big_pow(b.den(), k)), 0, ctx);
  }
  Rational x = 1, y = 0;
  const Rational invS(BigInt(1), BigInt(ctx->S()));
  const Rational L(BigInt(ctx->L()));
  for (unsigned i = 0; i < k; ++i) {
    const Rational t = y * invS;  // beta * (x + y*beta) = y/S + (x - L*y/S)*beta
    y = x - L * t;
    x = t;
  }
  return QuadElem(std::move(x), std::move(y), ctx);
}

std::ostream& operator<<(std::ostream& os, const QuadElem& e) { return os << e.str(); }

}  // namespace lsseq
