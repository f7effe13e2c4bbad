#pragma once

#include <optional>

#include "ergomax/maximal.hpp"
#include "ergomax/search.hpp"

namespace ergomax {

// Periodization of a nonnegative cyclic signal over R periods:
// F(l) = f(l mod L) for l in {1, ..., RL}, zero otherwise.
struct AmplificationBuild {
  long L = 1;
  long long R = 1;
  Rational eps;
  CyclicSignal f{1};
  Signal F{1};
  bool norm_scaling_ok = false;  // ||F||_p^p = R ||f||_p^p
};

// Exact p-th-power ledger of the amplification inequality
//   sum_{l=-RL+1}^{RL} (M F)(l)^p >= [(1-e)^{2p} + ((1-e)/(tL))^p] rho^p ||F||_p^p
// with t = 2 for the one-sided and uncentered operators and t = 4 for the
// centered one (its covering window is twice as long). rho^p is the reference
// cyclic ratio power; holds can fail for small R, reported through margin
// rather than thrown.
struct AmplifyReport {
  AmplificationBuild build;
  Op op = Op::OneSided;
  unsigned long p = 2;
  Rational rho_power;    // reference rho^p
  Rational ratio_power;  // f's own cyclic ratio^p under op
  bool precondition_ok = false;  // ratio_power >= (1-eps)^p rho_power
  Rational lhs_power;            // sum over {-RL+1..RL} of (M F)^p
  Rational bracket_power;        // (1-e)^{2p} + ((1-e)/(tL))^p
  Rational rhs_power;            // bracket_power * rho_power * ||F||_p^p
  Rational margin;               // lhs_power - rhs_power
  bool holds = false;
  bool amplifying = false;  // bracket_power > 1, i.e. the bound beats rho itself

  // Left tail {-RL+1, ..., 0}: every point is covered by one window over the
  // whole support, so M F >= tail_bound there; the edge value at -RL+1 is
  // stored because the bound is attained there for constant f.
  Rational tail_bound;
  Rational edge_value;
  bool left_tail_ok = false;
  // M F(l)^p * (tL)^p L >= ||M_cyc f||_p^p on the tail, the Hoelder step
  // chaining the tail bound to the bracket; true for every nonnegative f.
  bool hoelder_ok = false;

  std::string note;

  bool ok() const { return precondition_ok && holds && left_tail_ok && hoelder_ok; }
};

// Integer p >= 2. When rho_power is absent the coordinate-ascent search
// supplies the reference ratio. eps in (0, 1).
AmplifyReport amplify(const CyclicSignal& f, unsigned long p, long long R, const Rational& eps,
                      std::optional<Rational> rho_power = std::nullopt, Op op = Op::OneSided);

// Smallest R with a nonnegative margin, located by doubling then bisecting;
// the returned R satisfies holds(R) and not holds(R - 1).
long long amplify_min_R(const CyclicSignal& f, unsigned long p, const Rational& eps,
                        std::optional<Rational> rho_power = std::nullopt, Op op = Op::OneSided,
                        long long R_max = 1 << 20);

}  // namespace ergomax
