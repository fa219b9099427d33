#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lsseq/quad.hpp"
#include "lsseq/rational.hpp"

using namespace lsseq;

namespace {

QuadElem make(long xn, long xd, long yn, long yd, const ContextPtr& ctx) {
  return QuadElem(Rational(BigInt(xn), BigInt(xd)), Rational(BigInt(yn), BigInt(yd)), ctx);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST_CASE("rational basics") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational::parse("-3/2") == r);
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(BigInt(-7), BigInt(2)).floor() == -4);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("multiplication reduces the beta^2 term") {
  auto ctx = FieldContext::create(1, 1);
  const QuadElem b = QuadElem::beta(ctx);
  const QuadElem b2 = b * b;
  CHECK(b2.x() == Rational(1));
  CHECK(b2.y() == Rational(-1));  // beta^2 = 1 - beta

  auto ctx22 = FieldContext::create(2, 2);
  const QuadElem c2 = QuadElem::beta(ctx22) * QuadElem::beta(ctx22);
  CHECK(c2.x() == Rational(BigInt(1), BigInt(2)));
  CHECK(c2.y() == Rational(-1));  // beta^2 = (1 - 2 beta)/2
}

TEST_CASE("additive identity and context mismatch") {
  auto ctx = FieldContext::create(3, 2);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    QuadElem e(random_rational(rng), random_rational(rng), ctx);
    CHECK(e + QuadElem::zero(ctx) == e);
    CHECK(e * QuadElem::one(ctx) == e);
  }
  auto other = FieldContext::create(2, 1);
  CHECK_THROWS_AS(QuadElem::beta(ctx) + QuadElem::beta(other), std::invalid_argument);
  CHECK_THROWS_AS(QuadElem::beta(ctx) * QuadElem::beta(other), std::invalid_argument);
}

TEST_CASE("exact sign") {
  auto ctx = FieldContext::create(1, 1);
  CHECK(make(-1, 1, 2, 1, ctx).sign() == 1);   // 2*beta - 1 > 0
  CHECK(make(-2, 1, 3, 1, ctx).sign() == -1);  // 3*beta - 2 < 0
  CHECK(QuadElem::zero(ctx).sign() == 0);
  CHECK(QuadElem::beta(ctx).sign() == 1);
  CHECK((-QuadElem::beta(ctx)).sign() == -1);
}

TEST_CASE("floor and fractional part") {
  auto ctx = FieldContext::create(1, 1);
  const QuadElem three_beta = make(0, 1, 3, 1, ctx);
  auto [f, frac] = three_beta.split_floor();
  CHECK(f == 1);
  CHECK(frac == make(-1, 1, 3, 1, ctx));

  auto [f0, frac0] = QuadElem::zero(ctx).split_floor();
  CHECK(f0 == 0);
  CHECK(frac0.is_zero());

  auto [fm, fracm] = (-QuadElem::beta(ctx)).split_floor();
  CHECK(fm == -1);
  CHECK(fracm == make(1, 1, -1, 1, ctx));  // 1 - beta
}

TEST_CASE("beta powers on the power basis") {
  auto ctx = FieldContext::create(1, 1);
  CHECK(beta_power(ctx, 0) == QuadElem::one(ctx));
  CHECK(beta_power(ctx, 2) == make(1, 1, -1, 1, ctx));

  auto ctx22 = FieldContext::create(2, 2);
  CHECK(beta_power(ctx22, 3) == make(-1, 2, 3, 2, ctx22));  // (3 beta - 1)/2
}

TEST_CASE("coordinate denominators") {
  auto ctx = FieldContext::create(1, 1);
  for (unsigned k = 0; k <= 30; ++k) {
    CHECK(beta_power(ctx, k).denominator() == 1);  // S = 1 keeps powers integral
  }
  CHECK(QuadElem::one(ctx).denominator() == 1);

  auto ctx22 = FieldContext::create(2, 2);
  CHECK(beta_power(ctx22, 6).denominator() == 8);  // (11 - 30 beta)/8
}

TEST_CASE("decimal approximation") {
  auto ctx = FieldContext::create(1, 1);
  CHECK(std::abs(QuadElem::beta(ctx).approx(10) - 0.6180339887) <= 1e-10);
  CHECK(QuadElem::zero(ctx).approx(5) == 0.0);
  auto ctx10 = FieldContext::create(10, 1);
  CHECK(std::abs(QuadElem::beta(ctx10).approx(10) - 0.0990195136) <= 1e-10);
  CHECK_THROWS_AS(QuadElem::beta(ctx).approx(0), std::invalid_argument);
}

TEST_CASE("power recurrence consistency across the grid") {
  for (long L = 1; L <= 5; ++L) {
    for (long S = 1; S <= L; ++S) {
      auto ctx = FieldContext::create(L, S);
      const QuadElem b = QuadElem::beta(ctx);
      // beta^(k+1) = beta^k * beta, exactly
      for (unsigned k = 0; k < 30; ++k) {
        CHECK(beta_power(ctx, k + 1) == beta_power(ctx, k) * b);
      }
      // S*beta^2 + L*beta - 1 = 0
      QuadElem rel = beta_power(ctx, 2) * Rational(BigInt(S)) + b * Rational(BigInt(L)) -
                     QuadElem::one(ctx);
      CHECK(rel.is_zero());
    }
  }
}

TEST_CASE("sign properties against negation and approximation") {
  std::mt19937_64 rng(11);
  for (long L : {1L, 2L, 5L}) {
    for (long S : {1L, 2L}) {
      if (S > L) continue;
      auto ctx = FieldContext::create(L, S);
      for (int i = 0; i < 50; ++i) {
        QuadElem e(random_rational(rng), random_rational(rng), ctx);
        if (!e.is_zero()) CHECK(e.sign() == -(-e).sign());
        const double a = e.approx(30);
        if (std::abs(a) > 1e-20) {
          CHECK(e.sign() == (a > 0 ? 1 : -1));
        }
        // floor/fractional reconstruction and range
        auto [f, frac] = e.split_floor();
        CHECK(frac.sign() >= 0);
        CHECK((frac - QuadElem::one(ctx)).sign() < 0);
        CHECK(frac + Rational(f) == e);
      }
    }
  }
}

TEST_CASE("rational-beta contexts collapse the beta coordinate") {
  auto ctx20 = FieldContext::create(2, 0);  // beta = 1/2
  CHECK(ctx20->beta_rational());
  QuadElem e(Rational(1), Rational(1), ctx20);
  CHECK(e.y().sign() == 0);
  CHECK(e.x() == Rational(BigInt(3), BigInt(2)));

  auto ctx12 = FieldContext::create(1, 2);  // discriminant 9, beta = 1/2
  CHECK(ctx12->beta_rational());
  CHECK(ctx12->beta_value() == Rational(BigInt(1), BigInt(2)));
  const QuadElem b = QuadElem::beta(ctx12);
  CHECK(b.y().sign() == 0);
  CHECK(b.sign() == 1);
  CHECK((b + b).floor() == 1);
  CHECK(beta_power(ctx12, 3) == QuadElem(Rational(BigInt(1), BigInt(8)), 0, ctx12));
}

TEST_CASE("canonical text form round-trips bit-exactly") {
  auto ctx = FieldContext::create(2, 2);
  const QuadElem e = make(-1, 2, 3, 2, ctx);
  CHECK(e.str() == "-1/2 + 3/2*beta");
  CHECK(QuadElem::parse("-1/2 + 3/2*beta", ctx) == e);
  CHECK(QuadElem::parse("2 - 3*beta", ctx) == make(2, 1, -3, 1, ctx));
  CHECK(QuadElem::parse("5/3", ctx) == make(5, 3, 0, 1, ctx));
  CHECK(QuadElem::parse("2*beta", ctx) == make(0, 1, 2, 1, ctx));
  CHECK(make(2, 1, -3, 1, ctx).str() == "2 - 3*beta");
  CHECK(QuadElem::zero(ctx).str() == "0 + 0*beta");

  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    QuadElem r(random_rational(rng), random_rational(rng), ctx);
    CHECK(QuadElem::parse(r.str(), ctx) == r);
  }
  CHECK_THROWS_AS(QuadElem::parse("1 + beta", ctx), std::invalid_argument);
  CHECK_THROWS_AS(QuadElem::parse("1 + 2*gamma", ctx), std::invalid_argument);
}
