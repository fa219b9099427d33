#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lsseq/analysis.hpp"
#include "lsseq/sequences.hpp"

using namespace lsseq;

namespace {

ContextPtr rational_ctx() { return FieldContext::create(2, 0); }

std::vector<QuadElem> from_rationals(std::initializer_list<Rational> rs, const ContextPtr& ctx) {
  std::vector<QuadElem> out;
  for (const Rational& r : rs) out.push_back(QuadElem::from_rational(r, ctx));
  return out;
}

Rational half() { return Rational(BigInt(1), BigInt(2)); }
Rational quarter() { return Rational(BigInt(1), BigInt(4)); }

}  // namespace

TEST_CASE("extreme discrepancy by the sorted-points identity") {
  auto ctx = rational_ctx();
  CHECK(discrepancy_exact(from_rationals({half()}, ctx)) == QuadElem::one(ctx));
  CHECK(discrepancy_exact(from_rationals({Rational(0), half()}, ctx)) ==
        QuadElem::from_rational(half(), ctx));
  CHECK(discrepancy_exact(from_rationals({quarter(), Rational(BigInt(3), BigInt(4))}, ctx)) ==
        QuadElem::from_rational(half(), ctx));

  // equally spaced i/N has discrepancy exactly 1/N
  std::vector<QuadElem> grid;
  for (long i = 0; i < 10; ++i) {
    grid.push_back(QuadElem::from_rational(Rational(BigInt(i), BigInt(10)), ctx));
  }
  CHECK(discrepancy_exact(grid) ==
        QuadElem::from_rational(Rational(BigInt(1), BigInt(10)), ctx));

  CHECK_THROWS_AS(discrepancy_exact(from_rationals({Rational(1)}, ctx)), std::domain_error);
  CHECK_THROWS_AS(discrepancy_exact(from_rationals({Rational(-1)}, ctx)), std::domain_error);
  CHECK_THROWS_AS(discrepancy_exact(std::span<const QuadElem>{}), std::invalid_argument);
}

TEST_CASE("star discrepancy") {
  auto ctx = rational_ctx();
  CHECK(star_discrepancy(from_rationals({half()}, ctx)) ==
        QuadElem::from_rational(half(), ctx));
  CHECK(star_discrepancy(from_rationals({quarter(), Rational(BigInt(3), BigInt(4))}, ctx)) ==
        QuadElem::from_rational(quarter(), ctx));

  // centered set (2i-1)/(2N) minimizes the formula at 1/(2N)
  std::vector<QuadElem> centered;
  for (long i = 1; i <= 8; ++i) {
    centered.push_back(QuadElem::from_rational(Rational(BigInt(2 * i - 1), BigInt(16)), ctx));
  }
  CHECK(star_discrepancy(centered) ==
        QuadElem::from_rational(Rational(BigInt(1), BigInt(16)), ctx));
}

TEST_CASE("float variants agree with exact on rational input") {
  auto ctx = rational_ctx();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(0, (1 << 20) - 1);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<QuadElem> pts;
    std::vector<double> fpts;
    for (int i = 0; i < 64; ++i) {
      Rational r(BigInt(num(rng)), BigInt(1) << 20);
      pts.push_back(QuadElem::from_rational(r, ctx));
      fpts.push_back(r.to_double());
    }
    CHECK(std::abs(discrepancy_exact(pts).approx(15) - discrepancy_float(fpts)) < 1e-12);
    CHECK(std::abs(star_discrepancy(pts).approx(15) - star_discrepancy_float(fpts)) < 1e-12);
  }
}

TEST_CASE("oracle equivalence and sandwich on random rational sets") {
  auto ctx = rational_ctx();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> size(1, 128);
  std::uniform_int_distribution<long> num(0, (1 << 16) - 1);
  for (int rep = 0; rep < 60; ++rep) {
    std::vector<QuadElem> pts;
    const long n = size(rng);
    for (long i = 0; i < n; ++i) {
      pts.push_back(
          QuadElem::from_rational(Rational(BigInt(num(rng)), BigInt(1) << 16), ctx));
    }
    const QuadElem d = discrepancy_exact(pts);
    REQUIRE(d == discrepancy_oracle(pts));
    const QuadElem star = star_discrepancy(pts);
    REQUIRE(star.compare(d) <= 0);
    REQUIRE(d.compare(star * Rational(2)) <= 0);
  }

  CHECK(discrepancy_oracle(from_rationals({half()}, ctx)) == QuadElem::one(ctx));
  std::vector<QuadElem> big(3000, QuadElem::zero(ctx));
  CHECK_THROWS_AS(discrepancy_oracle(big), std::length_error);
}

TEST_CASE("oracle equivalence on LS prefixes") {
  for (long L : {1L, 2L}) {
    const auto c3 = ls_counts(L, 1, 3).t;
    const auto c6 = ls_counts(L, 1, 6).t;
    for (BigInt n : {c3, c6}) {
      const auto pts = ls_points(L, 1, n.get_ui());
      CHECK(discrepancy_exact(pts) == discrepancy_oracle(pts));
    }
  }
}

TEST_CASE("recurrence-bound constants") {
  const auto b11 = iz_bound(1, 1);
  CHECK(b11.gamma == doctest::Approx(3.4472135955).epsilon(1e-9));
  CHECK(b11.delta == doctest::Approx(3.0074356450).epsilon(1e-9));
  CHECK(b11.R == doctest::Approx(0.1708203932).epsilon(1e-9));

  const auto b101 = iz_bound(10, 1);
  CHECK(b101.gamma == doctest::Approx(22.8631032838).epsilon(1e-9));
  CHECK(b101.delta == doctest::Approx(9.0221230601).epsilon(1e-9));

  const auto b21 = iz_bound(2, 1);
  CHECK(b21.gamma == doctest::Approx(6.0606601718).epsilon(1e-9));
  CHECK(b21.delta == doctest::Approx(4.6071952139).epsilon(1e-9));

  CHECK_THROWS_AS(iz_bound(1, 2), std::domain_error);
  CHECK_THROWS_AS(iz_bound(1, 0), std::domain_error);
}

TEST_CASE("block-bound constants evaluate the printed formula") {
  const auto c1 = cor2_bound(1);
  CHECK(c1.gamma == 3.0);
  CHECK(c1.delta == doctest::Approx(3.5207819621).epsilon(1e-9));
  REQUIRE(c1.published_delta.has_value());
  CHECK(*c1.published_delta == 2.776);
  CHECK_FALSE(c1.published_matches);  // printed value unreconciled with the formula

  const auto c10 = cor2_bound(10);
  CHECK(c10.delta == doctest::Approx(6.2484108355).epsilon(1e-9));
  REQUIRE(c10.published_delta.has_value());
  CHECK(*c10.published_delta == 5.51);
  CHECK_FALSE(c10.published_matches);

  CHECK_FALSE(cor2_bound(2).published_delta.has_value());
  CHECK(cor2_bound(2).delta == doctest::Approx(3.8985653745).epsilon(1e-9));
}

TEST_CASE("asymptotic slope ratio tends to one") {
  CHECK(asymptotic_ratio(2) > 0.0);
  const double r3 = asymptotic_ratio(1000);
  const double r6 = asymptotic_ratio(1000000);
  const double r9 = asymptotic_ratio(1000000000);
  CHECK(r6 > 0.9);
  CHECK(r6 < 1.1);
  CHECK(std::abs(r6 - 1.0) < std::abs(r3 - 1.0));
  CHECK(std::abs(r9 - 1.0) < std::abs(r6 - 1.0));
  CHECK_THROWS_AS(asymptotic_ratio(1), std::domain_error);
}

TEST_CASE("per-block discrepancy inequality") {
  const auto r100 = block_discrepancy_check(1, 100);
  CHECK(r100.all_pass);
  REQUIRE(r100.blocks.size() == 3);  // 100 = 89 + 8 + 3 over Fibonacci q
  CHECK(r100.blocks[0].q == 89);

  // N = q_k: a single block
  const auto single = block_discrepancy_check(1, 55);
  CHECK(single.all_pass);
  CHECK(single.blocks.size() == 1);

  CHECK(block_discrepancy_check(3, 500).all_pass);
}

TEST_CASE("prefix discrepancies stay under the recurrence bound") {
  const auto b = iz_bound(1, 1);
  for (unsigned n = 3; n <= 15; ++n) {
    const std::size_t N = ls_counts(1, 1, n).t.get_ui();
    const auto pts = ls_points(1, 1, N);
    const double d = discrepancy_exact(pts).approx(15);
    CHECK(static_cast<double>(N) * d <=
          b.delta * std::log(static_cast<double>(N)) + b.gamma + 1e-9);
  }
}

TEST_CASE("discrepancy report rows") {
  const auto iz = iz_bound(1, 1);
  const auto cor2 = cor2_bound(1);
  const auto pts = ls_points(1, 1, 13);
  const auto row = discrepancy_report(pts, iz, cor2);
  CHECK(row.N == 13);
  CHECK(row.has_ratio);
  CHECK(row.has_cor2);
  CHECK(row.d_star <= row.d_extreme);
  CHECK(row.d_extreme <= row.iz_value);

  const auto first = discrepancy_report({pts.data(), 1}, iz, std::nullopt);
  CHECK_FALSE(first.has_ratio);
  CHECK_FALSE(first.has_cor2);
  CHECK(first.d_extreme == 1.0);
}
