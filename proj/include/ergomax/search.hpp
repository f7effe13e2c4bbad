#pragma once

#include <string>

#include "ergomax/ratios.hpp"

namespace ergomax {

struct SearchConfig {
  long long budget = 20000;  // max ratio evaluations; the search stops, not throws
  unsigned long long seed = 1;
  int restarts = 6;   // cyclic only
  long grid_den = 8;  // cyclic only: coordinate values live on {0, 1/den, ..., L}
  long long pad = 512;  // Z only, forwarded to strong_ratio
};

struct SearchReport {
  RatioReport best;
  long long evaluations = 0;
  bool budget_exhausted = false;
  std::string strategy;
};

// True when cand is a strictly larger ratio than best: exact p-th powers when
// both carry them, exact values next, HighPrec last.
bool ratio_improves(const RatioReport& cand, const RatioReport& best);

// Symmetric staircase on [-radius, radius] with plateaus of width `step`:
// f(l) = round(4096 / sqrt(1 + |l|/step)) / 4096, the rounding decided in
// integer arithmetic. A discretized |l|^(-1/2), the profile that pushes the
// strong (p, p) ratio of the averaging maximal operators toward its supremum.
Signal staircase_signal(long long step, long long radius);

// Coordinate ascent over cyclic signals with values on the grid_den grid:
// random restarts, per-coordinate steepest step, strict improvement only.
// Deterministic for a fixed config.
SearchReport strong_ratio_search_cyclic(Op op, long L, const Exponent& p,
                                        const SearchConfig& cfg = {});

// Sweeps staircase truncations of increasing radius and keeps the best ratio.
// p = 1 diverges on Z and is rejected by strong_ratio; p = inf returns the
// (exact) supremum 1 immediately.
SearchReport strong_ratio_search_z(Op op, const Exponent& p, const SearchConfig& cfg = {});

}  // namespace ergomax
