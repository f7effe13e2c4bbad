#pragma once

#include <optional>

#include "ergomax/exponent.hpp"
#include "ergomax/highprec.hpp"
#include "ergomax/rational.hpp"

namespace ergomax {

// phi_p(x) = (p-1) x^p - p x^(p-1) - 1, the defining polynomial of the sharp
// centered strong (p,p) constant on Z: c_p is its unique root in (1, inf).

// Exact value when x^(1/den(p)) is rational (always for integer p), else
// nullopt. phi_p(1) = -2 for every p.
std::optional<Rational> phi_exact(const Exponent& p, const Rational& x);

// Certified sign at a rational point: +1/-1 are proven either exactly or by
// directed-rounding interval evaluation; 0 means undecided at the precision
// cap (never an exact zero, those go through phi_exact).
int phi_sign(const Exponent& p, const Rational& x);

struct RootBracket {
  Rational lo;  // phi(lo) < 0, certified
  Rational hi;  // phi(hi) > 0, certified
  std::optional<Rational> exact;  // set when a probe hits phi = 0 exactly
  HighPrec value;                 // midpoint, or the exact root
  long probes = 0;
};

// Bisection on certified signs until hi - lo <= tol (or an exact root is
// hit). The returned bracket is a proof: the root lies in [lo, hi].
RootBracket cp_root(const Exponent& p, const Rational& tol);

}  // namespace ergomax
