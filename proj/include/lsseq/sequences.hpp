#pragma once

#include <cstddef>
#include <vector>

#include "lsseq/partitions.hpp"
#include "lsseq/quad.hpp"
#include "lsseq/rational.hpp"

namespace lsseq {

// Deterministic generator of the LS points (xi_n): level 1 holds the first
// t_1 left endpoints ordered by magnitude, and level n+1 appends the images
//   xi_m + i*beta^(n+1)               for i = 1..L   (m = 1..l_n)
//   xi_m + L*beta^(n+1) + j*beta^(n+2) for j = 1..S-1 (m = 1..l_n)
// in exactly that order.  For S = 0 the i-loop stops at L-1 (the i = L
// image is the right edge of the split interval, not a new endpoint).
// Copying a stream at any cursor yields an independent stream emitting the
// identical continuation.
class LsPointStream {
 public:
  explicit LsPointStream(ContextPtr ctx, std::size_t cap = kDefaultCap);

  const QuadElem& next();
  std::size_t cursor() const { return cursor_; }  // number of points emitted

 private:
  void extend_level();

  ContextPtr ctx_;
  std::size_t cap_;
  std::vector<QuadElem> points_;
  std::size_t cursor_ = 0;
  unsigned level_ = 1;
  std::size_t level_l_ = 0;  // l_level: source prefix length for the next extension
  std::size_t level_s_ = 0;  // s_level
};

// First `count` LS points.  Throws std::length_error when serving the
// request would materialize a Lambda level beyond `cap` points.
std::vector<QuadElem> ls_points(long L, long S, std::size_t count,
                                std::size_t cap = kDefaultCap);

// Base-b radical inverses of 0..count-1 as exact rationals.
std::vector<Rational> van_der_corput(unsigned base, std::size_t count);

// {n z} for n = 0..count-1, exact.
std::vector<QuadElem> kronecker(const QuadElem& z, std::size_t count);
// Floating variant; each term is computed as one long-double product n*z.
std::vector<double> kronecker(double z, std::size_t count);

// Index order 0, +1, -1, +2, -2, ...: position k >= 1 holds
// {ceil(k/2) z} for odd k and {-(k/2) z} for even k.
std::vector<QuadElem> symmetrized_kronecker(const QuadElem& z, std::size_t count);
std::vector<double> symmetrized_kronecker(double z, std::size_t count);

}  // namespace lsseq
