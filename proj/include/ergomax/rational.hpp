#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "ergomax/errors.hpp"

namespace ergomax {

// Exact arbitrary-precision rational scalar. mpq_class keeps the canonical
// form (positive denominator, gcd 1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// LP64 throughout: long long and long coincide, which keeps gmpxx's
// long-based constructors lossless here.
inline Integer zint(long long v) { return Integer(static_cast<long>(v)); }

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rational q{zint(num), zint(den)};
  q.canonicalize();
  return q;
}

inline Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Exact q^e for e >= 0.
inline Rational rpow(const Rational& q, unsigned long e) {
  Rational out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(q.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(q.get_mpq_t()), e);
  return out;
}

// Exact k-th root when one exists: returns r >= 0 with r^k = q; q must be >= 0.
inline std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
  if (q < 0) throw domain_error("exact_root of a negative value");
  if (k == 0) throw domain_error("exact_root with k = 0");
  Integer rn, rd;
  bool num_exact = mpz_root(rn.get_mpz_t(), mpq_numref(q.get_mpq_t()), k) != 0;
  bool den_exact = mpz_root(rd.get_mpz_t(), mpq_denref(q.get_mpq_t()), k) != 0;
  if (!num_exact || !den_exact) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

inline Integer floor_int(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return out;
}

inline Integer ceil_int(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return out;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string rat_str(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "n", "n/d", or a decimal like "0.25" (converted exactly). "inf" is
// handled one level up by Exponent, not here.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw domain_error("empty rational literal");
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    Integer num(digits, 10), den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw domain_error("bad rational literal: " + text);
  q.canonicalize();
  return q;
}

}  // namespace ergomax
