#pragma once

#include <optional>
#include <string>
#include <variant>

#include "ergomax/exponent.hpp"
#include "ergomax/maximal.hpp"
#include "ergomax/norms.hpp"

namespace ergomax {

// One observed ratio lambda * mu(E_lambda(Mf))^(1/p) / ||f||_p (weak) or
// ||Mf||_p / ||f||_p (strong), with enough witness data to replay it.
// `value.power` is the exact p-th power of the ratio whenever p is a
// positive integer.
struct RatioReport {
  enum class Kind { Weak, Strong };

  Op op = Op::OneSided;
  Kind kind = Kind::Weak;
  Exponent p = Exponent::of(1);
  NormValue value;

  // Strong ratios on Z only: the reported value is the norm restricted to the
  // support widened by `pad`, a certified lower bound. For integer p >= 2 the
  // true p-th power of the ratio lies in [value.power, value.power +
  // tail_power_bound].
  std::optional<Rational> tail_power_bound;
  std::optional<long long> pad;

  std::variant<std::monostate, Signal, CyclicSignal> witness;
  std::optional<Rational> lambda;          // weak only
  std::optional<long long> level_count;    // weak only: |E_lambda(Mf)|
  std::string note;
};

RatioReport weak_ratio(const CyclicSignal& f, const Rational& lambda, Op op, const Exponent& p);
RatioReport weak_ratio(const Signal& f, const Rational& lambda, Op op, const Exponent& p);

RatioReport strong_ratio(const CyclicSignal& f, Op op, const Exponent& p);

// On Z the full p-norm of Mf is an infinite sum, so the report carries the
// exact restricted power over the widened support window together with a tail
// bound from Mf(x) <= ||f||_1 / (dist(x, supp f) + 1). Integer p >= 2 keeps
// everything rational; p = inf is exact (the sup is attained by a singleton
// window); other p > 1 yield the restricted value only.
RatioReport strong_ratio(const Signal& f, Op op, const Exponent& p, long long pad = 512);

// Recomputes the report from its witness; true when the stored value is
// reproduced exactly (rational path) or to within 2^-128 (HighPrec path).
bool replay_ratio(const RatioReport& report);

}  // namespace ergomax
