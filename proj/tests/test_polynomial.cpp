#include "doctest.h"

#include "ergomax/polynomial.hpp"

using namespace ergomax;

TEST_CASE("polynomial term bookkeeping") {
  Polynomial p(1);
  p.add_term({1}, Integer(2));
  p.add_term({0}, Integer(-3));
  p.add_term({1}, Integer(-2));  // cancels the linear term
  CHECK(p.terms().size() == 1);
  CHECK(p.eval({100}) == -3);
  CHECK_THROWS_AS(p.add_term({0, 1}, Integer(1)), domain_error);
  CHECK_THROWS_AS(p.eval({1, 2}), domain_error);
}

TEST_CASE("variable and monomial_power") {
  Polynomial x = Polynomial::variable();
  CHECK(x.eval({7}) == 7);
  CHECK(x.eval({-4}) == -4);

  Polynomial sq = Polynomial::monomial_power(2);
  CHECK(sq.eval({5}) == 25);
  CHECK(sq.eval({-5}) == 25);

  Polynomial y = Polynomial::variable(2, 1);
  CHECK(y.eval({3, 11}) == 11);
}

TEST_CASE("multivariate evaluation") {
  // n1^2 * n2 - 4
  Polynomial p(2);
  p.add_term({2, 1}, Integer(1));
  p.add_term({0, 0}, Integer(-4));
  CHECK(p.eval({3, 5}) == 41);
  CHECK(p.eval({0, 9}) == -4);
  CHECK(p.eval({-2, -1}) == -8);
}

TEST_CASE("polynomial family shape and builders") {
  PolynomialFamily F(2, 3, 1);
  CHECK(F.d == 2);
  CHECK(F.m == 3);
  CHECK(F.polys.size() == 2);
  CHECK(F.polys[0].size() == 3);
  CHECK(F.at(1, 2).terms().empty());
  CHECK_THROWS_AS(PolynomialFamily(0, 1, 1), domain_error);

  PolynomialFamily lin = PolynomialFamily::linear1();
  CHECK(lin.d == 1);
  CHECK(lin.m == 1);
  CHECK(lin.at(0, 0).eval({9}) == 9);

  PolynomialFamily cube = PolynomialFamily::power1(3);
  CHECK(cube.at(0, 0).eval({2}) == 8);
}

TEST_CASE("polynomial equality") {
  Polynomial a(1), b(1);
  a.add_term({2}, Integer(1));
  b.add_term({2}, Integer(1));
  CHECK(a == b);
  b.add_term({0}, Integer(1));
  CHECK(!(a == b));
}
