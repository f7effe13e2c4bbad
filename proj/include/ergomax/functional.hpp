#pragma once

#include <vector>

#include "ergomax/norms.hpp"

namespace ergomax {

// Truncated sequence functional: the running max, or the r-variation
// seminorm restricted to indices in [K].
struct FunctionalSpec {
  enum class Kind { Max, Variation };

  Kind kind = Kind::Max;
  Rational r;  // Variation only, >= 1
  long K = 1;

  static FunctionalSpec max(long K) {
    if (K < 1) throw domain_error("truncation length must be >= 1");
    return FunctionalSpec{Kind::Max, Rational(), K};
  }
  static FunctionalSpec variation(const Rational& r, long K) {
    if (r < 1) throw domain_error("variation order must be >= 1");
    if (K < 1) throw domain_error("truncation length must be >= 1");
    return FunctionalSpec{Kind::Variation, r, K};
  }
};

NormValue functional_apply(const FunctionalSpec& spec, const std::vector<Rational>& a);

// Exact r-th power of the K-truncated r-variation, integer r >= 1.
// DP over ordered pairs: best[j] = max(0, max_{i<j} best[i] + |a_j - a_i|^r).
Rational variation_power(unsigned long r, const std::vector<Rational>& a);

// Exhaustive oracle over all 2^K increasing subsequences; K <= 20.
Rational variation_bruteforce(unsigned long r, const std::vector<Rational>& a);

// Exact p0-th power of the functional value, available when the arithmetic
// lines up: Max with integer p0, or Variation with integer r = p0. Everything
// the transfer demos compare exactly goes through here.
Rational functional_power(const FunctionalSpec& spec, const std::vector<Rational>& a,
                          unsigned long p0);

}  // namespace ergomax
