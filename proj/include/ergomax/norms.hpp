#pragma once

#include <optional>
#include <vector>

#include "ergomax/exponent.hpp"
#include "ergomax/highprec.hpp"
#include "ergomax/signal.hpp"

namespace ergomax {

// A norm-like quantity. `approx` is always populated; `exact` is set whenever
// the value itself is rational (q in {1, inf}, or the q-th root happens to be
// exact); `power` carries the exact q-th power whenever q is a positive
// integer, so downstream comparisons can stay in rational arithmetic.
struct NormValue {
  std::optional<Rational> exact;
  std::optional<Rational> power;
  HighPrec approx;

  bool is_exact() const { return exact.has_value(); }
  const Rational& exact_value() const {
    if (!exact) throw domain_error("norm value is not exact");
    return *exact;
  }

  static NormValue from_exact(const Rational& v, std::optional<Rational> power = std::nullopt);
};

NormValue lebesgue_norm(const Signal& g, const Exponent& q);
NormValue lebesgue_norm(const CyclicSignal& g, const Exponent& q);

NormValue weak_norm(const Signal& g, const Exponent& q);
NormValue weak_norm(const CyclicSignal& g, const Exponent& q);

std::vector<Point> level_set(const Signal& g, const Rational& lambda);
std::vector<long> level_set(const CyclicSignal& g, const Rational& lambda);

// Exact q-th power sum of |g| against the underlying measure, q a positive
// integer. This is the workhorse behind every "compare norms exactly in p-th
// powers" step.
Rational power_sum(const Signal& g, unsigned long q);
Rational power_sum(const CyclicSignal& g, unsigned long q);

Rational sup_abs(const Signal& g);
Rational sup_abs(const CyclicSignal& g);

Rational l1_norm(const Signal& g);
Rational l1_norm(const CyclicSignal& g);

}  // namespace ergomax
