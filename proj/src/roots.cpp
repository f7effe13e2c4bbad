#include "ergomax/roots.hpp"

#include <mpfr.h>

namespace ergomax {

namespace {

struct Scratch {
  mpfr_t v;
  explicit Scratch(unsigned bits) { mpfr_init2(v, bits); }
  ~Scratch() { mpfr_clear(v); }
  operator mpfr_ptr() { return v; }
  operator mpfr_srcptr() const { return v; }
};

void check_p(const Exponent& p) {
  if (p.inf || !(p.q > 1)) throw domain_error("c_p needs a finite exponent p > 1");
}

// One directed evaluation: a lower bound on phi when down, an upper when up.
// Every piece is monotone for x > 0: (p-1) x^p and p x^(p-1) increase, and
// both coefficients are positive, so rounding each factor in the stated
// direction bounds the whole expression.
int interval_sign(unsigned long a, unsigned long b, const Rational& p, const Rational& x,
                  unsigned bits) {
  Rational pm1 = p - 1;
  Scratch xd(bits), xu(bits), rd(bits), ru(bits), t1(bits), t2(bits), low(bits), high(bits);
  mpfr_set_q(xd, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(xu, x.get_mpq_t(), MPFR_RNDU);
  mpfr_rootn_ui(rd, xd, b, MPFR_RNDD);
  mpfr_rootn_ui(ru, xu, b, MPFR_RNDU);

  mpfr_pow_ui(t1, rd, a, MPFR_RNDD);
  mpfr_mul_q(t1, t1, pm1.get_mpq_t(), MPFR_RNDD);
  mpfr_pow_ui(t2, ru, a - b, MPFR_RNDU);
  mpfr_mul_q(t2, t2, p.get_mpq_t(), MPFR_RNDU);
  mpfr_sub(low, t1, t2, MPFR_RNDD);
  mpfr_sub_ui(low, low, 1, MPFR_RNDD);

  mpfr_pow_ui(t1, ru, a, MPFR_RNDU);
  mpfr_mul_q(t1, t1, pm1.get_mpq_t(), MPFR_RNDU);
  mpfr_pow_ui(t2, rd, a - b, MPFR_RNDD);
  mpfr_mul_q(t2, t2, p.get_mpq_t(), MPFR_RNDD);
  mpfr_sub(high, t1, t2, MPFR_RNDU);
  mpfr_sub_ui(high, high, 1, MPFR_RNDU);

  if (mpfr_sgn(low.v) > 0) return 1;
  if (mpfr_sgn(high.v) < 0) return -1;
  return 0;
}

}  // namespace

std::optional<Rational> phi_exact(const Exponent& p, const Rational& x) {
  check_p(p);
  if (x <= 0) throw domain_error("phi is evaluated on (0, inf)");
  unsigned long a = static_cast<unsigned long>(p.q.get_num().get_ui());
  unsigned long b = static_cast<unsigned long>(p.q.get_den().get_ui());
  auto r = exact_root(x, b);
  if (!r) return std::nullopt;
  return (p.q - 1) * rpow(*r, a) - p.q * rpow(*r, a - b) - 1;
}

int phi_sign(const Exponent& p, const Rational& x) {
  if (auto v = phi_exact(p, x)) return sgn(*v);
  unsigned long a = static_cast<unsigned long>(p.q.get_num().get_ui());
  unsigned long b = static_cast<unsigned long>(p.q.get_den().get_ui());
  for (unsigned bits = 192; bits <= 6144; bits *= 2) {
    int s = interval_sign(a, b, p.q, x, bits);
    if (s != 0) return s;
  }
  return 0;
}

RootBracket cp_root(const Exponent& p, const Rational& tol) {
  check_p(p);
  if (tol <= 0) throw domain_error("tolerance must be positive");
  RootBracket out;
  out.lo = 1;  // phi(1) = -2 for every p
  if (*phi_exact(p, Rational(1)) != -2) throw domain_error("phi(1) must be -2");

  auto probe = [&](const Rational& x) -> std::pair<int, bool> {
    ++out.probes;
    if (auto v = phi_exact(p, x)) return {sgn(*v), true};
    return {phi_sign(p, x), false};
  };

  Rational hi = 2;
  while (true) {
    auto [s, was_exact] = probe(hi);
    if (s > 0) break;
    if (s == 0 && was_exact) {  // landed on the root exactly
      out.exact = hi;
      out.lo = out.hi = hi;
      out.value = HighPrec(hi);
      return out;
    }
    if (s == 0) throw domain_error("could not certify a sign while bracketing");
    hi *= 2;
    if (hi > rpow(rat(2), 64)) throw domain_error("no upper bracket found");
  }
  out.hi = hi;

  while (out.hi - out.lo > tol) {
    Rational mid = (out.lo + out.hi) / 2;
    auto [s, was_exact] = probe(mid);
    if (s == 0) {
      if (was_exact) {
        out.exact = mid;
        out.lo = out.hi = mid;
        out.value = HighPrec(mid);
        return out;
      }
      // undecidable at the precision cap: nudge the probe point
      bool moved = false;
      for (int k = 1; k <= 8 && !moved; ++k) {
        Rational alt = mid + (out.hi - out.lo) / rat(64) * rat(k);
        auto [s2, ex2] = probe(alt);
        if (s2 == 0 && ex2) {
          out.exact = alt;
          out.lo = out.hi = alt;
          out.value = HighPrec(alt);
          return out;
        }
        if (s2 != 0) {
          (s2 > 0 ? out.hi : out.lo) = alt;
          moved = true;
        }
      }
      if (!moved) throw domain_error("could not certify a sign during bisection");
      continue;
    }
    (s > 0 ? out.hi : out.lo) = mid;
  }
  out.value = HighPrec((out.lo + out.hi) / 2);
  return out;
}

}  // namespace ergomax
