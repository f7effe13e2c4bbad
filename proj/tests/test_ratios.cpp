#include "doctest.h"

#include "ergomax/ratios.hpp"

using namespace ergomax;

TEST_CASE("cyclic weak ratio attains the L = 5 constant") {
  // a point mass of 1/3: M_u f >= 1/9 exactly where a window of length <= 3
  // reaches the mass, which is all of Z_5
  CyclicSignal d(5);
  d.set(0, rat(1, 3));
  RatioReport r = weak_ratio(d, rat(1, 9), Op::Uncentered, Exponent::of(1));
  REQUIRE(r.lambda.has_value());
  CHECK(*r.lambda == rat(1, 9));
  REQUIRE(r.level_count.has_value());
  CHECK(*r.level_count == 5);
  REQUIRE(r.value.is_exact());
  // lambda |E| / ||f||_1 = (5/9) / (1/3) = 5/3
  CHECK(r.value.exact_value() == rat(5, 3));
  CHECK(replay_ratio(r));
}

TEST_CASE("weak ratio on Z with the delta family") {
  Signal d = delta({0});
  for (long long M : {0, 3, 20}) {
    Rational lambda = rat(1, M + 1);
    RatioReport r = weak_ratio(d, lambda, Op::OneSided, Exponent::of(1));
    REQUIRE(r.value.is_exact());
    CHECK(r.value.exact_value() == 1);
    REQUIRE(r.level_count.has_value());
    CHECK(*r.level_count == M + 1);
    CHECK(replay_ratio(r));
  }
}

TEST_CASE("strong cyclic ratio golden pair") {
  // f = (13, 3) on Z_2, one-sided, p = 2: Mf = (13, 8),
  // ratio^2 = (169 + 64) / (169 + 9) = 233/178
  CyclicSignal f({rat(13), rat(3)});
  RatioReport r = strong_ratio(f, Op::OneSided, Exponent::of(2));
  REQUIRE(r.value.power.has_value());
  CHECK(*r.value.power == rat(233, 178));
  CHECK(r.kind == RatioReport::Kind::Strong);
  CHECK(replay_ratio(r));
}

TEST_CASE("weighted cyclic strong ratio") {
  CyclicSignal f({rat(1), rat(0), rat(2, 3)}, rat(1, 5));
  RatioReport r = strong_ratio(f, Op::Uncentered, Exponent::of(2));
  REQUIRE(r.value.power.has_value());
  CHECK(*r.value.power == rat(77, 52));  // the weight cancels in the ratio
  CHECK(replay_ratio(r));
}

TEST_CASE("strong ratio on Z carries a tail bound") {
  Signal f = signal1({{0, rat(1)}, {1, rat(1)}, {2, rat(1)}});
  RatioReport r = strong_ratio(f, Op::Uncentered, Exponent::of(2));
  REQUIRE(r.value.power.has_value());
  REQUIRE(r.tail_power_bound.has_value());
  CHECK(*r.tail_power_bound > 0);
  REQUIRE(r.pad.has_value());
  CHECK(*r.pad == 512);
  CHECK(replay_ratio(r));

  // the reported power is a certified lower bound and must beat 1
  // (Mf >= |f| pointwise and Mf > 0 off the support)
  CHECK(*r.value.power > 1);
}

TEST_CASE("p = inf strong ratio is exactly one") {
  CyclicSignal f({rat(2), rat(1), rat(0), rat(5)});
  RatioReport r = strong_ratio(f, Op::Centered, Exponent::infinity());
  REQUIRE(r.value.is_exact());
  CHECK(r.value.exact_value() == 1);
}

TEST_CASE("p = 1 on Z is rejected") {
  Signal f = delta({0});
  CHECK_THROWS_AS(strong_ratio(f, Op::Uncentered, Exponent::of(1)), domain_error);
}

TEST_CASE("replay detects tampering") {
  CyclicSignal f({rat(13), rat(3)});
  RatioReport r = strong_ratio(f, Op::OneSided, Exponent::of(2));
  RatioReport bad = r;
  bad.value.power = *bad.value.power + 1;
  CHECK(!replay_ratio(bad));
}
