#include "doctest.h"

#include "ergomax/functional.hpp"

using namespace ergomax;

TEST_CASE("running max truncation") {
  std::vector<Rational> a{rat(1), rat(3), rat(2), rat(5)};
  auto head = [&](size_t K) {
    return std::vector<Rational>(a.begin(), a.begin() + static_cast<long>(K));
  };
  CHECK(functional_apply(FunctionalSpec::max(1), head(1)).exact_value() == 1);
  CHECK(functional_apply(FunctionalSpec::max(2), head(2)).exact_value() == 3);
  CHECK(functional_apply(FunctionalSpec::max(4), head(4)).exact_value() == 5);
  // the length must match the truncation exactly
  CHECK_THROWS_AS(functional_apply(FunctionalSpec::max(3), a), domain_error);
  // |.| inside: the max runs over absolute values
  std::vector<Rational> b{rat(-4), rat(1)};
  CHECK(functional_apply(FunctionalSpec::max(2), b).exact_value() == 4);
}

TEST_CASE("variation dp matches tiny hand cases") {
  // a = (0, 1): V^1 = 1, V^2 power = 1
  std::vector<Rational> a{rat(0), rat(1)};
  CHECK(variation_power(1, a) == 1);
  CHECK(variation_power(2, a) == 1);

  // a = (0, 1, 0): r = 1 picks both jumps, r = 2 too (1 + 1 beats 0)
  std::vector<Rational> b{rat(0), rat(1), rat(0)};
  CHECK(variation_power(1, b) == 2);
  CHECK(variation_power(2, b) == 2);

  // monotone sequence: r = 1 telescopes, r >= 2 prefers one long jump
  std::vector<Rational> c{rat(0), rat(1), rat(2), rat(3)};
  CHECK(variation_power(1, c) == 3);
  CHECK(variation_power(2, c) == 9);
  CHECK(variation_power(3, c) == 27);
}

TEST_CASE("variation dp equals the exhaustive oracle") {
  // deterministic pseudo-random rationals, small K so 2^K stays cheap
  unsigned long long s = 88172645463325252ULL;
  auto next = [&s]() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  };
  for (int trial = 0; trial < 40; ++trial) {
    size_t K = 2 + next() % 9;  // up to 10
    std::vector<Rational> a;
    for (size_t i = 0; i < K; ++i)
      a.push_back(rat(static_cast<long long>(next() % 21) - 10,
                      1 + static_cast<long long>(next() % 4)));
    for (unsigned long r : {1ul, 2ul, 3ul})
      CHECK(variation_power(r, a) == variation_bruteforce(r, a));
  }
}

TEST_CASE("variation is monotone under truncation") {
  std::vector<Rational> a{rat(2), rat(-1), rat(4), rat(0), rat(3)};
  for (unsigned long r : {1ul, 2ul, 3ul}) {
    Rational prev(0);
    for (size_t K = 1; K <= a.size(); ++K) {
      std::vector<Rational> head(a.begin(), a.begin() + static_cast<long>(K));
      Rational cur = variation_power(r, head);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("functional_apply variation exposes the power") {
  std::vector<Rational> a{rat(0), rat(1), rat(0)};
  NormValue v = functional_apply(FunctionalSpec::variation(rat(2), 3), a);
  REQUIRE(v.power.has_value());
  CHECK(*v.power == 2);
  CHECK(!v.is_exact());  // sqrt(2) is irrational

  NormValue v1 = functional_apply(FunctionalSpec::variation(rat(1), 3), a);
  REQUIRE(v1.is_exact());
  CHECK(v1.exact_value() == 2);
}

TEST_CASE("functional_power arithmetic alignment") {
  std::vector<Rational> a{rat(1), rat(3), rat(2)};
  CHECK(functional_power(FunctionalSpec::max(3), a, 2) == 9);
  CHECK(functional_power(FunctionalSpec::max(3), a, 1) == 3);
  CHECK(functional_power(FunctionalSpec::variation(rat(2), 3), a, 2) ==
        variation_power(2, a));
  // r != p0 has no exact p0-th power form
  CHECK_THROWS_AS(functional_power(FunctionalSpec::variation(rat(2), 3), a, 3),
                  domain_error);
}

TEST_CASE("spec construction guards") {
  CHECK_THROWS_AS(FunctionalSpec::max(0), domain_error);
  CHECK_THROWS_AS(FunctionalSpec::variation(rat(1, 2), 3), domain_error);
  CHECK_THROWS_AS(FunctionalSpec::variation(rat(2), 0), domain_error);
}
