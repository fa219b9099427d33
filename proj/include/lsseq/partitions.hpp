#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lsseq/quad.hpp"

namespace lsseq {

inline constexpr std::size_t kDefaultCap = 10'000'000;

// Half-open interval [left, left + beta^length_exponent).
struct Interval {
  QuadElem left;
  unsigned length_exponent;
};

struct LsCounts {
  BigInt t, l, s;  // total / long (beta^n) / short (beta^(n+1)) interval counts
};

// t_n, l_n, s_n from the linear recurrences with t_0 = 1, t_1 = L + S,
// l_0 = 1, l_1 = L, s_0 = 0, s_1 = S.
LsCounts ls_counts(long L, long S, unsigned n);

// Partition of [0,1) after `step` refinements: intervals of length
// beta^step and beta^(step+1) only, stored in ascending order of left
// endpoint.  Lengths are kept as exponents; only left endpoints carry
// exact arithmetic.
class PartitionState {
 public:
  static PartitionState initial(ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  unsigned step() const { return step_; }
  const LsCounts& counts() const { return counts_; }

  // Exact structural check: intervals tile [0,1), exponents lie in
  // {step, step+1}, and the materialized counts match counts().
  bool validate() const;

  friend PartitionState ls_refine(const PartitionState& state, std::size_t cap);

 private:
  PartitionState(ContextPtr ctx, std::vector<Interval> intervals, unsigned step, LsCounts counts)
      : ctx_(std::move(ctx)), intervals_(std::move(intervals)), step_(step),
        counts_(std::move(counts)) {}

  ContextPtr ctx_;
  std::vector<Interval> intervals_;
  unsigned step_;
  LsCounts counts_;
};

// One refinement step: every interval of maximal length beta^step is
// replaced by L subintervals of length beta^(step+1) followed by S of
// length beta^(step+2).  Throws std::length_error when the refined
// partition would exceed `cap` intervals.
PartitionState ls_refine(const PartitionState& state, std::size_t cap = kDefaultCap);

// Partition after n refinements of the trivial partition.
PartitionState ls_partition(const ContextPtr& ctx, unsigned n, std::size_t cap = kDefaultCap);

// Left endpoints in strictly increasing order; count equals t_step.
std::vector<QuadElem> left_endpoints(const PartitionState& state);

// Approximate rho-refinement for an arbitrary splitting rule, in floating
// point.  `rule` holds the relative subinterval lengths (positive, summing
// to 1 within 1e-12); Kakutani's alpha-refinement is rule {alpha, 1-alpha}.
struct GenericPartition {
  std::vector<std::pair<double, double>> intervals;  // (left, length), ascending
  std::vector<double> rule;
};

GenericPartition make_generic_partition(std::vector<double> rule);

// `steps` rounds of splitting every interval whose length is within 1e-12
// of the maximum, homothetically to the rule.
GenericPartition kakutani_refine(GenericPartition p, unsigned steps);

inline std::vector<double> alpha_rule(double alpha) { return {alpha, 1.0 - alpha}; }

}  // namespace lsseq
