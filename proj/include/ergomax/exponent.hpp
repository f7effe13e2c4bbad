#pragma once

#include <vector>

#include "ergomax/rational.hpp"

namespace ergomax {

// An integrability exponent in (0, inf]. Kept exact so Hoelder identities and
// p-th-power comparisons never pass through floating point.
struct Exponent {
  bool inf = false;
  Rational q;  // meaningful only when !inf; must be > 0

  static Exponent infinity() { return Exponent{true, Rational()}; }
  static Exponent of(const Rational& v) {
    if (v <= 0) throw domain_error("exponent must be positive");
    return Exponent{false, v};
  }
  static Exponent of(long long v) { return of(rat(v)); }

  bool is_integer() const { return !inf && ergomax::is_integer(q); }
  unsigned long as_uint() const {
    if (!is_integer()) throw domain_error("exponent is not a positive integer");
    return static_cast<unsigned long>(q.get_num().get_ui());
  }
  Rational reciprocal() const { return inf ? Rational(0) : Rational(1) / q; }

  bool operator==(const Exponent& o) const {
    return inf == o.inf && (inf || q == o.q);
  }
};

// "p", "a/b", or "inf".
Exponent parse_exponent(const std::string& text);

// (p0; p1..pm) with the scaling identity 1/p1 + ... + 1/pm = 1/p0 checked
// exactly on construction.
struct ExponentTuple {
  Exponent p0;
  std::vector<Exponent> p;

  ExponentTuple(Exponent p0_, std::vector<Exponent> p_) : p0(p0_), p(std::move(p_)) {
    if (p.empty()) throw domain_error("exponent tuple needs at least one upper exponent");
    Rational sum(0);
    for (const auto& e : p) sum += e.reciprocal();
    if (sum != p0.reciprocal()) throw domain_error("exponents violate the scaling identity");
  }

  static ExponentTuple diagonal(const Exponent& e) { return ExponentTuple(e, {e}); }
};

inline Exponent parse_exponent(const std::string& text) {
  if (text == "inf" || text == "oo") return Exponent::infinity();
  return Exponent::of(parse_rational(text));
}

}  // namespace ergomax
