#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lsseq/quad.hpp"

namespace lsseq {

// Raised when a generated point contradicts the expected Kronecker
// structure (non-integer coordinates for S = 1, or x != -floor(y*beta)).
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Kronecker index m of each LS point (S = 1): the point equals {m*beta}
// and m is read off the exact beta-coefficient.  indices[k] belongs to the
// (k+1)-th point of the sequence.
struct IndexMap {
  long L = 0;
  std::vector<BigInt> indices;
};

IndexMap kronecker_indices(long L, std::size_t count);

// Per-block comparison against the expected contiguous index ranges:
// block 1 is {0}; block n (n >= 2) spans sequence positions
// t_{n-2}+1 .. t_{n-1} and must cover [q_{n-2}+1, q_n] for even n and
// [-(q_n - 1), -q_{n-2}] for odd n.
struct BlockReport {
  unsigned block_index = 0;
  BigInt expected_lo, expected_hi;  // inclusive
  std::vector<BigInt> observed;     // in sequence order
  bool pass = false;
};

std::vector<BlockReport> verify_block_index_ranges(long L, unsigned max_level);

// After each full level prefix t_n (n <= max_level), the emitted index set
// must be a contiguous integer interval containing 0.
bool verify_index_contiguity(long L, unsigned max_level);

// S = 0: the LS points coincide with the base-L van der Corput sequence,
// term by term, as exact rationals.
bool verify_vdc(long base, std::size_t count);

// Reduced denominators of beta^k on the power basis, k = 0..k_max, for
// S >= 2.  Their growth is what rules out van der Corput and Kronecker
// reorderings; the probe records the observations without asserting a rate.
struct DenominatorProbe {
  long L = 0, S = 0;
  std::vector<std::pair<unsigned, BigInt>> denominators;
  BigInt max_denominator;
  bool nondecreasing = true;
};

DenominatorProbe denominator_probe(long L, long S, unsigned k_max);

}  // namespace lsseq
