#pragma once

#include <vector>

#include "ergomax/signal.hpp"

namespace ergomax {

enum class Op { OneSided, Centered, Uncentered };

const char* op_name(Op op);
Op parse_op(const std::string& text);

// Window-length cap for cyclic systems. One-sided windows longer than the
// period average a convex combination of the full-period mean and a shorter
// window, so L-1 is exact there; the two-sided default 2L is guarded by a
// doubling regression test rather than a proof.
long default_nmax(Op op, long L);

CyclicSignal maximal_cyclic(const CyclicSignal& f, Op op, long N_max = -1);

// Exact pointwise maximal values on Z (d = 1). Candidate windows are clipped
// to endpoints of the value runs of f (plus the point itself): within a run
// the average is monotone in each endpoint, so the sup is attained at these
// candidates. That keeps staircase-shaped witnesses cheap to evaluate.
class MaximalEvaluator {
 public:
  MaximalEvaluator(const Signal& f, Op op);

  Rational at(long long x) const;

  // Values on the whole range [lo, hi]. Same results as at(), but the
  // uncentered case batches the boundary-pair maxima with a rectangle-max
  // table (one entry per pair of run boundaries) instead of rescanning the
  // pairs for every point.
  std::vector<Rational> profile(long long lo, long long hi) const;

  // Everything outside [support_lo - slack, support_hi] (one-sided) or the
  // symmetric widening (two-sided) has maximal value < lambda.
  std::pair<long long, long long> level_range(const Rational& lambda) const;

  bool zero_signal() const { return runs_.empty(); }

 private:
  struct Run {
    long long start;
    long long end;
    Rational value;
  };

  Rational sum(long long u, long long v) const;  // exact sum of f over [u, v]
  Rational avg_abs(long long u, long long v) const;
  Rational one_sided_at(long long x) const;
  Rational centered_at(long long x) const;
  Rational uncentered_at(long long x) const;

  Op op_;
  Rational total_abs_;
  std::vector<Run> runs_;                 // consecutive, covering [lo_, hi_]
  std::vector<long long> positions_;      // support positions, sorted
  std::vector<Rational> prefix_;          // prefix_[i] = sum of first i values
  long long lo_ = 0, hi_ = -1;            // support bounding interval
};

Rational maximal_value(const Signal& f, Op op, long long x);
Signal maximal_restrict(const Signal& f, Op op, long long lo, long long hi);
std::vector<long long> maximal_level_set(const Signal& f, Op op, const Rational& lambda);

// Brute-force reference: sup over all windows with both endpoints within
// distance `bound` of x. Test oracle for the run-endpoint candidate logic.
Rational maximal_value_windows(const Signal& f, Op op, long long x, long long bound);

}  // namespace ergomax
