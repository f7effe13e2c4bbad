#include <cmath>

#include "doctest.h"

#include "ergomax/norms.hpp"

using namespace ergomax;

namespace {

Signal two_atoms() {
  Signal f(1);
  f.set({0}, rat(3));
  f.set({4}, rat(-4));
  return f;
}

}  // namespace

TEST_CASE("lebesgue norm basics on Z") {
  Signal f = two_atoms();

  NormValue n1 = lebesgue_norm(f, Exponent::of(1));
  REQUIRE(n1.is_exact());
  CHECK(n1.exact_value() == 7);

  NormValue n2 = lebesgue_norm(f, Exponent::of(2));
  REQUIRE(n2.power.has_value());
  CHECK(*n2.power == 25);
  REQUIRE(n2.is_exact());  // sqrt(25) happens to be exact
  CHECK(n2.exact_value() == 5);

  NormValue ninf = lebesgue_norm(f, Exponent::infinity());
  REQUIRE(ninf.is_exact());
  CHECK(ninf.exact_value() == 4);

  NormValue n3 = lebesgue_norm(f, Exponent::of(3));
  REQUIRE(n3.power.has_value());
  CHECK(*n3.power == 27 + 64);
  CHECK(!n3.is_exact());
  CHECK(n3.approx.to_double() == doctest::Approx(std::pow(91.0, 1.0 / 3)));
}

TEST_CASE("cyclic norms carry the atom weight") {
  CyclicSignal f({rat(1), rat(0), rat(-2)}, rat(1, 5));

  CHECK(lebesgue_norm(f, Exponent::of(1)).exact_value() == rat(3, 5));
  CHECK(power_sum(f, 2) == rat(5, 5));
  CHECK(power_sum(f, 1) == rat(3, 5));
  CHECK(sup_abs(f) == 2);
  CHECK(l1_norm(f) == rat(3, 5));

  // weight-1 comparison
  CyclicSignal g({rat(1), rat(0), rat(-2)});
  CHECK(power_sum(g, 2) == 5);
}

TEST_CASE("weak norm attains its sup at a value of |g|") {
  Signal f = two_atoms();
  // lambda * |{|g| >= lambda}|: candidates lambda in {3, 4};
  // 3 * 2 = 6 beats 4 * 1 = 4
  NormValue w1 = weak_norm(f, Exponent::of(1));
  REQUIRE(w1.is_exact());
  CHECK(w1.exact_value() == 6);

  // q = 2: (lambda^2 |E|)^(1/2); 9*2 = 18 vs 16*1 = 16
  NormValue w2 = weak_norm(f, Exponent::of(2));
  REQUIRE(w2.power.has_value());
  CHECK(*w2.power == 18);
}

TEST_CASE("weak norm is below the strong norm at q = 1") {
  CyclicSignal f({rat(5, 2), rat(1), rat(0), rat(7, 3)}, rat(1, 3));
  NormValue w = weak_norm(f, Exponent::of(1));
  NormValue s = lebesgue_norm(f, Exponent::of(1));
  REQUIRE(w.is_exact());
  REQUIRE(s.is_exact());
  CHECK(w.exact_value() <= s.exact_value());
}

TEST_CASE("level sets") {
  Signal f = two_atoms();
  CHECK(level_set(f, rat(3)) == std::vector<Point>{{0}, {4}});
  CHECK(level_set(f, rat(7, 2)) == std::vector<Point>{{4}});
  CHECK(level_set(f, rat(5)).empty());

  CyclicSignal g({rat(1), rat(0), rat(-2)});
  CHECK(level_set(g, rat(1)) == std::vector<long>{0, 2});
  CHECK(level_set(g, rat(2)) == std::vector<long>{2});
}

TEST_CASE("norms scale homogeneously") {
  Signal f = two_atoms();
  Rational c = rat(7, 2);
  Signal g = f.scaled(c);
  CHECK(lebesgue_norm(g, Exponent::of(1)).exact_value() ==
        c * lebesgue_norm(f, Exponent::of(1)).exact_value());
  CHECK(lebesgue_norm(g, Exponent::infinity()).exact_value() ==
        c * lebesgue_norm(f, Exponent::infinity()).exact_value());
  CHECK(weak_norm(g, Exponent::of(1)).exact_value() ==
        c * weak_norm(f, Exponent::of(1)).exact_value());
  CHECK(*lebesgue_norm(g, Exponent::of(2)).power ==
        rpow(c, 2) * *lebesgue_norm(f, Exponent::of(2)).power);
}

TEST_CASE("norms of the zero signal") {
  Signal z(1);
  CHECK(lebesgue_norm(z, Exponent::of(1)).exact_value() == 0);
  CHECK(lebesgue_norm(z, Exponent::infinity()).exact_value() == 0);
  CHECK(weak_norm(z, Exponent::of(1)).exact_value() == 0);
  CHECK(power_sum(z, 3) == 0);
}
