#include "doctest.h"

#include "ergomax/references.hpp"
#include "ergomax/roots.hpp"

using namespace ergomax;

TEST_CASE("phi at the left endpoint") {
  // phi(x) = (p-1) x^p - p x^(p-1) - 1 gives phi(1) = -2 for every p
  for (const char* p : {"3/2", "2", "3", "5"}) {
    auto v = phi_exact(parse_exponent(p), rat(1));
    REQUIRE(v.has_value());
    CHECK(*v == -2);
  }
  CHECK(phi_sign(parse_exponent("2"), rat(1)) == -1);
}

TEST_CASE("integer p keeps phi rational") {
  Exponent p2 = parse_exponent("2");
  // phi(x) = x^2 - 2x - 1, roots 1 +- sqrt(2)
  CHECK(*phi_exact(p2, rat(3)) == 2);
  CHECK(*phi_exact(p2, rat(2)) == -1);
  CHECK(phi_sign(p2, rat(5, 2)) == 1);   // 25/4 - 5 - 1 = 1/4
  CHECK(phi_sign(p2, rat(12, 5)) == -1);
}

TEST_CASE("p = 3/2 has the exact root 4") {
  Exponent p = parse_exponent("3/2");
  // phi(4) = (1/2) * 8 - (3/2) * 2 - 1 = 0
  auto v = phi_exact(p, rat(4));
  REQUIRE(v.has_value());
  CHECK(*v == 0);

  RootBracket b = cp_root(p, rat(1) / rpow(rat(10), 12));
  REQUIRE(b.exact.has_value());
  CHECK(*b.exact == 4);
  CHECK(b.lo == 4);
  CHECK(b.hi == 4);
}

TEST_CASE("p = 2 bisection brackets 1 + sqrt(2)") {
  Rational tol = rat(1) / rpow(rat(10), 12);
  RootBracket b = cp_root(parse_exponent("2"), tol);
  CHECK(!b.exact.has_value());
  CHECK(b.hi - b.lo <= tol);
  CHECK(phi_sign(parse_exponent("2"), b.lo) < 0);
  CHECK(phi_sign(parse_exponent("2"), b.hi) > 0);
  // the surd sits inside the bracket, checked exactly
  CHECK(cmp_one_plus_sqrt2(b.lo) < 0);
  CHECK(cmp_one_plus_sqrt2(b.hi) > 0);
}

TEST_CASE("root values against the reference decimals") {
  Rational tol = rat(1) / rpow(rat(10), 14);
  struct Row {
    const char* p;
    const char* ref;
  };
  for (Row row : {Row{"2", "c_2"}, Row{"3", "c_3"}, Row{"5", "c_5"}}) {
    RootBracket b = cp_root(parse_exponent(row.p), tol);
    Rational rv = reference_value(row.ref);
    // truncated decimal: rv <= root <= rv + 1e-30
    CHECK(b.lo <= rv + rat(1) / rpow(rat(10), 30));
    CHECK(rv <= b.hi);
  }
}

TEST_CASE("fractional p still certifies signs") {
  Exponent p = parse_exponent("5/2");
  Rational tol = rat(1) / rpow(rat(10), 10);
  RootBracket b = cp_root(p, tol);
  if (!b.exact) {
    CHECK(phi_sign(p, b.lo) < 0);
    CHECK(phi_sign(p, b.hi) > 0);
    CHECK(b.hi - b.lo <= tol);
  }
  CHECK(b.probes > 0);
}

TEST_CASE("phi_exact is empty off the rational grid") {
  // p = 3/2 at x = 2: x^(1/2) is irrational, no exact value
  CHECK(!phi_exact(parse_exponent("3/2"), rat(2)).has_value());
  // but the sign is still certified
  int s = phi_sign(parse_exponent("3/2"), rat(2));
  CHECK(s == -1);  // (1/2) * 2^(3/2) - (3/2) * 2^(1/2) - 1 = sqrt(2)/2 * ... < 0
}
