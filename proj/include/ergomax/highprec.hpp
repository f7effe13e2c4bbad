#pragma once

#include <mpfr.h>

#include <string>

#include "ergomax/rational.hpp"

namespace ergomax {

// Floating scalar for quantities with no exact rational representation
// (p-norms at p not in {1, inf}, irrational roots, surd references).
// Round-to-nearest at a fixed precision; per-operation relative error is
// bounded by 2^(1-precision_bits).
class HighPrec {
 public:
  static constexpr unsigned kDefaultBits = 256;

  HighPrec() : bits_(kDefaultBits) { mpfr_init2(v_, bits_); mpfr_set_zero(v_, 1); }
  explicit HighPrec(unsigned bits) : bits_(bits) { mpfr_init2(v_, bits_); mpfr_set_zero(v_, 1); }
  HighPrec(const Rational& q, unsigned bits = kDefaultBits) : bits_(bits) {
    mpfr_init2(v_, bits_);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  HighPrec(const HighPrec& o) : bits_(o.bits_) { mpfr_init2(v_, bits_); mpfr_set(v_, o.v_, MPFR_RNDN); }
  HighPrec(HighPrec&& o) noexcept : bits_(o.bits_) { mpfr_init2(v_, bits_); mpfr_swap(v_, o.v_); }
  HighPrec& operator=(const HighPrec& o) {
    if (this != &o) { mpfr_set_prec(v_, o.bits_); bits_ = o.bits_; mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  HighPrec& operator=(HighPrec&& o) noexcept {
    if (this != &o) { bits_ = o.bits_; mpfr_swap(v_, o.v_); }
    return *this;
  }
  ~HighPrec() { mpfr_clear(v_); }

  unsigned bits() const { return bits_; }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  std::string str(unsigned digits = 30) const;

  HighPrec operator+(const HighPrec& o) const { return bin(o, mpfr_add); }
  HighPrec operator-(const HighPrec& o) const { return bin(o, mpfr_sub); }
  HighPrec operator*(const HighPrec& o) const { return bin(o, mpfr_mul); }
  HighPrec operator/(const HighPrec& o) const { return bin(o, mpfr_div); }
  bool operator<(const HighPrec& o) const { return mpfr_cmp(v_, o.v_) < 0; }
  bool operator>(const HighPrec& o) const { return mpfr_cmp(v_, o.v_) > 0; }

  // |x|^e with rational exponent, round-to-nearest.
  static HighPrec pow_abs(const HighPrec& x, const Rational& e);
  static HighPrec sqrt(const HighPrec& x);
  static HighPrec abs_diff(const HighPrec& a, const HighPrec& b);

 private:
  using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  HighPrec bin(const HighPrec& o, BinFn fn) const {
    HighPrec out(bits_ > o.bits_ ? bits_ : o.bits_);
    fn(out.v_, v_, o.v_, MPFR_RNDN);
    return out;
  }

  mpfr_t v_;
  unsigned bits_;
};

}  // namespace ergomax
