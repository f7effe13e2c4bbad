#include "doctest.h"

#include "ergomax/exponent.hpp"
#include "ergomax/highprec.hpp"
#include "ergomax/rational.hpp"

using namespace ergomax;

TEST_CASE("rat canonicalizes") {
  CHECK(rat(4, 6) == rat(2, 3));
  CHECK(rat(-4, 6) == rat(-2, 3));
  CHECK(rat(3, -7) == rat(-3, 7));
  CHECK(rat(0, 5) == 0);
  CHECK(rat(4, 6).get_den() == 3);
  CHECK_THROWS_AS(rat(1, 0), domain_error);
}

TEST_CASE("rabs and rpow") {
  CHECK(rabs(rat(-3, 7)) == rat(3, 7));
  CHECK(rabs(rat(3, 7)) == rat(3, 7));
  CHECK(rpow(rat(2, 3), 3) == rat(8, 27));
  CHECK(rpow(rat(-2, 3), 2) == rat(4, 9));
  CHECK(rpow(rat(5), 0) == 1);
  CHECK(rpow(rat(0), 4) == 0);
}

TEST_CASE("exact_root") {
  auto r = exact_root(rat(8, 27), 3);
  REQUIRE(r.has_value());
  CHECK(*r == rat(2, 3));
  CHECK(!exact_root(rat(2), 2).has_value());
  CHECK(*exact_root(rat(0), 5) == 0);
  CHECK(*exact_root(rat(1), 7) == 1);
  // 233/178 is the L=2 one-sided ratio square; not a perfect square
  CHECK(!exact_root(rat(233, 178), 2).has_value());
  CHECK_THROWS_AS(exact_root(rat(-1), 2), domain_error);
}

TEST_CASE("floor ceil integer predicates") {
  CHECK(floor_int(rat(7, 2)) == 3);
  CHECK(floor_int(rat(-7, 2)) == -4);
  CHECK(ceil_int(rat(7, 2)) == 4);
  CHECK(ceil_int(rat(-7, 2)) == -3);
  CHECK(floor_int(rat(6)) == 6);
  CHECK(is_integer(rat(4, 2)));
  CHECK(!is_integer(rat(1, 3)));
}

TEST_CASE("rat_str and parse_rational round trip") {
  CHECK(rat_str(rat(5, 3)) == "5/3");
  CHECK(rat_str(rat(-5, 3)) == "-5/3");
  CHECK(rat_str(rat(8, 4)) == "2");
  CHECK(parse_rational("5/3") == rat(5, 3));
  CHECK(parse_rational("-12") == rat(-12));
  CHECK(parse_rational("0.25") == rat(1, 4));
  CHECK(parse_rational("1.5") == rat(3, 2));
  CHECK_THROWS_AS(parse_rational(""), domain_error);
  CHECK_THROWS_AS(parse_rational("x"), domain_error);
  CHECK_THROWS_AS(parse_rational("1/0"), domain_error);

  Rational big(Integer("123456789123456789123456789"), Integer(4));
  big.canonicalize();
  CHECK(parse_rational(rat_str(big)) == big);
}

TEST_CASE("parse_exponent") {
  CHECK(parse_exponent("inf").inf);
  CHECK(parse_exponent("2") == Exponent::of(2));
  CHECK(parse_exponent("3/2") == Exponent::of(rat(3, 2)));
  CHECK(parse_exponent("2").is_integer());
  CHECK(!parse_exponent("3/2").is_integer());
  CHECK(parse_exponent("5").as_uint() == 5);
  CHECK(parse_exponent("4").reciprocal() == rat(1, 4));
  CHECK(Exponent::infinity().reciprocal() == 0);
  CHECK_THROWS_AS(parse_exponent("0"), domain_error);
  CHECK_THROWS_AS(parse_exponent("-2"), domain_error);
}

TEST_CASE("exponent tuples enforce the scaling identity") {
  ExponentTuple d = ExponentTuple::diagonal(Exponent::of(2));
  CHECK(d.p.size() == 1);
  // 1/2 = 1/4 + 1/4
  ExponentTuple t(Exponent::of(2), {Exponent::of(4), Exponent::of(4)});
  CHECK(t.p0.q == 2);
  CHECK_THROWS_AS(ExponentTuple(Exponent::of(2), {Exponent::of(3), Exponent::of(4)}),
                  domain_error);
}

TEST_CASE("highprec normalized scientific output") {
  HighPrec two(rat(2));
  HighPrec root = HighPrec::sqrt(two);
  std::string s = root.str(12);
  CHECK(s.substr(0, 13) == "1.41421356237");
  CHECK(s.find('e') != std::string::npos);
  CHECK(root.bits() == 256);

  HighPrec q(rat(-3, 4));
  CHECK(q.sign() < 0);
  CHECK(q.to_double() == -0.75);
}

TEST_CASE("highprec arithmetic and pow_abs") {
  HighPrec a(rat(3)), b(rat(4));
  CHECK((a + b).to_double() == 7.0);
  CHECK((a * b).to_double() == 12.0);
  CHECK((b - a).to_double() == 1.0);
  CHECK((a / b).to_double() == 0.75);
  CHECK(a < b);

  // |8|^(2/3) = 4 exactly representable in binary
  HighPrec c = HighPrec::pow_abs(HighPrec(rat(8)), rat(2, 3));
  CHECK(HighPrec::abs_diff(c, HighPrec(rat(4))).to_double() < 1e-70);
}
