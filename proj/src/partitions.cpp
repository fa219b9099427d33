#include "lsseq/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lsseq {

LsCounts ls_counts(long L, long S, unsigned n) {
  if (L < 1 || S < 0) throw std::invalid_argument("ls_counts: need L >= 1, S >= 0");
  LsCounts prev{1, 1, 0};                          // n = 0
  LsCounts cur{BigInt(L) + S, BigInt(L), BigInt(S)};  // n = 1
  if (n == 0) return prev;
  for (unsigned i = 1; i < n; ++i) {
    LsCounts next{L * cur.t + S * prev.t, L * cur.l + S * prev.l, L * cur.s + S * prev.s};
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PartitionState PartitionState::initial(ContextPtr ctx) {
  std::vector<Interval> iv;
  iv.push_back({QuadElem::zero(ctx), 0});
  return PartitionState(std::move(ctx), std::move(iv), 0, {1, 1, 0});
}

PartitionState ls_refine(const PartitionState& state, std::size_t cap) {
  const auto& ctx = state.ctx_;
  const long L = ctx->L(), S = ctx->S();
  const unsigned n = state.step_;

  LsCounts next{0, 0, 0};
  next.l = L * state.counts_.l + state.counts_.s;
  next.s = S * state.counts_.l;
  next.t = next.l + next.s;
  if (next.t > BigInt(static_cast<unsigned long>(cap))) {
    throw std::length_error("ls_refine: refined partition exceeds materialization cap");
  }

  const QuadElem len_long = beta_power(ctx, n + 1);
  const QuadElem len_short = beta_power(ctx, n + 2);

  std::vector<Interval> out;
  out.reserve(next.t.get_ui());
  for (const Interval& iv : state.intervals_) {
    if (iv.length_exponent == n) {
      QuadElem pos = iv.left;
      for (long i = 0; i < L; ++i) {
        out.push_back({pos, n + 1});
        pos += len_long;
      }
      for (long j = 0; j < S; ++j) {
        out.push_back({pos, n + 2});
        pos += len_short;
      }
    } else {
      out.push_back(iv);
    }
  }
  return PartitionState(ctx, std::move(out), n + 1, std::move(next));
}

PartitionState ls_partition(const ContextPtr& ctx, unsigned n, std::size_t cap) {
  PartitionState state = PartitionState::initial(ctx);
  for (unsigned i = 0; i < n; ++i) state = ls_refine(state, cap);
  return state;
}

bool PartitionState::validate() const {
  const QuadElem one = QuadElem::one(ctx_);
  QuadElem pos = QuadElem::zero(ctx_);
  BigInt n_long = 0, n_short = 0;
  const QuadElem len_long = beta_power(ctx_, step_);
  const QuadElem len_short = beta_power(ctx_, step_ + 1);

  for (const Interval& iv : intervals_) {
    if (iv.left != pos) return false;
    if (iv.length_exponent == step_) {
      ++n_long;
      pos += len_long;
    } else if (iv.length_exponent == step_ + 1) {
      ++n_short;
      pos += len_short;
    } else {
      return false;
    }
  }
  if (pos != one) return false;
  return n_long == counts_.l && n_short == counts_.s &&
         BigInt(static_cast<unsigned long>(intervals_.size())) == counts_.t;
}

std::vector<QuadElem> left_endpoints(const PartitionState& state) {
  std::vector<QuadElem> out;
  out.reserve(state.intervals().size());
  for (const Interval& iv : state.intervals()) out.push_back(iv.left);
  return out;
}

namespace {

void check_rule(const std::vector<double>& rule) {
  if (rule.empty()) throw std::invalid_argument("generic partition: empty rule");
  double sum = 0.0;
  for (double r : rule) {
    if (!(r > 0.0 && r < 1.0)) {
      throw std::invalid_argument("generic partition: rule entries must lie in (0,1)");
    }
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("generic partition: rule must sum to 1");
  }
}

}  // namespace

GenericPartition make_generic_partition(std::vector<double> rule) {
  check_rule(rule);
  GenericPartition p;
  p.intervals = {{0.0, 1.0}};
  p.rule = std::move(rule);
  return p;
}

GenericPartition kakutani_refine(GenericPartition p, unsigned steps) {
  check_rule(p.rule);
  for (unsigned s = 0; s < steps; ++s) {
    double max_len = 0.0;
    for (const auto& [left, len] : p.intervals) max_len = std::max(max_len, len);
    std::vector<std::pair<double, double>> out;
    out.reserve(p.intervals.size() * p.rule.size());
    for (const auto& [left, len] : p.intervals) {
      if (max_len - len <= 1e-12) {
        double acc = left;
        for (double r : p.rule) {
          out.emplace_back(acc, len * r);
          acc += len * r;
        }
      } else {
        out.emplace_back(left, len);
      }
    }
    p.intervals = std::move(out);
  }
  return p;
}

}  // namespace lsseq
