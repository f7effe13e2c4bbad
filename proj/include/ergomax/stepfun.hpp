#pragma once

#include <vector>

#include "ergomax/maximal.hpp"

namespace ergomax {

// Right-continuous step function on the line: value values[i] on
// [breakpoints[i], breakpoints[i+1]), zero outside the breakpoint range.
// Integrals over rational intervals are exact.
struct StepFunction {
  std::vector<Rational> breakpoints;
  std::vector<Rational> values;  // one fewer than breakpoints

  Rational eval(const Rational& x) const;
  Rational integral(const Rational& a, const Rational& b) const;
};

// f_cont(x) = f_dis(floor(x)): unit plateaus over every integer cell between
// the support ends, zero cells included.
StepFunction step_extension(const Signal& f_dis);

// The exact uncentered continuous maximal value of a step function at x: the
// sup of interval averages over [a, b] containing x is attained with both
// endpoints in breakpoints union {x} (the average is monotone in each
// endpoint between breakpoints), or in the degenerate limit at the plateau
// value itself.
Rational continuous_uncentered_max(const StepFunction& f, const Rational& x);

struct StepSample {
  Rational x;
  long long cell = 0;  // floor(x)
  Rational continuous_value;
  Rational discrete_value;
  bool dominates = false;
};

struct StepDominationReport {
  StepFunction f_cont;
  std::vector<StepSample> samples;
  bool ok = false;
};

// Checks the continuous maximal of the step extension against the discrete
// uncentered maximal at floor(x), exactly, for each sample point.
StepDominationReport step_extension_dominates(const Signal& f_dis,
                                              const std::vector<Rational>& xs);

}  // namespace ergomax
