#include "ergomax/highprec.hpp"

#include <cstdlib>

namespace ergomax {

std::string HighPrec::str(unsigned digits) const {
  mpfr_exp_t exp = 0;
  char* s = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = !mant.empty() && mant[0] == '-';
  std::string body = neg ? mant.substr(1) : mant;
  if (body.empty() || body == std::string(body.size(), '0')) return "0";
  std::string out = (neg ? "-" : "");
  out += body.substr(0, 1) + "." + body.substr(1) + "e" + std::to_string(exp - 1);
  return out;
}

HighPrec HighPrec::pow_abs(const HighPrec& x, const Rational& e) {
  HighPrec ax(x.bits());
  mpfr_abs(ax.v_, x.v_, MPFR_RNDN);
  HighPrec ee(e, x.bits());
  HighPrec out(x.bits());
  mpfr_pow(out.v_, ax.v_, ee.v_, MPFR_RNDN);
  return out;
}

HighPrec HighPrec::sqrt(const HighPrec& x) {
  HighPrec out(x.bits());
  mpfr_sqrt(out.v_, x.v_, MPFR_RNDN);
  return out;
}

HighPrec HighPrec::abs_diff(const HighPrec& a, const HighPrec& b) {
  HighPrec out = a - b;
  mpfr_abs(out.v_, out.v_, MPFR_RNDN);
  return out;
}

}  // namespace ergomax
