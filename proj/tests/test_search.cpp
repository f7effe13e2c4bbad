#include "doctest.h"

#include "ergomax/search.hpp"

using namespace ergomax;

TEST_CASE("staircase profile values") {
  Signal s = staircase_signal(8, 24);
  CHECK(s.eval({0}) == 1);
  CHECK(s.eval({7}) == 1);
  CHECK(s.eval({8}) == rat(181, 256));    // round(4096 / sqrt(2)) / 4096
  CHECK(s.eval({16}) == rat(2365, 4096)); // round(4096 / sqrt(3)) / 4096
  CHECK(s.eval({-8}) == rat(181, 256));   // symmetric
  CHECK(s.eval({25}) == 0);
}

TEST_CASE("cyclic search reproduces the golden run") {
  SearchReport r = strong_ratio_search_cyclic(Op::Uncentered, 3, Exponent::of(2), {});
  REQUIRE(r.best.value.power.has_value());
  CHECK(*r.best.value.power == rat(16309, 10064));
  CHECK(r.evaluations == 1086);
  CHECK(!r.budget_exhausted);
  CHECK(replay_ratio(r.best));
}

TEST_CASE("search is deterministic") {
  SearchConfig cfg;
  cfg.budget = 400;
  cfg.restarts = 2;
  SearchReport a = strong_ratio_search_cyclic(Op::OneSided, 2, Exponent::of(2), cfg);
  SearchReport b = strong_ratio_search_cyclic(Op::OneSided, 2, Exponent::of(2), cfg);
  REQUIRE(a.best.value.power.has_value());
  REQUIRE(b.best.value.power.has_value());
  CHECK(*a.best.value.power == *b.best.value.power);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("L = 2 one sided search finds 233/178") {
  SearchConfig cfg;
  cfg.budget = 4000;
  SearchReport r = strong_ratio_search_cyclic(Op::OneSided, 2, Exponent::of(2), cfg);
  REQUIRE(r.best.value.power.has_value());
  CHECK(*r.best.value.power == rat(233, 178));
}

TEST_CASE("z staircase sweep goldens") {
  SearchConfig cfg;
  cfg.budget = 4000;
  SearchReport u = strong_ratio_search_z(Op::Uncentered, Exponent::of(2), cfg);
  REQUIRE(u.best.value.power.has_value());
  std::string ud = u.best.value.approx.str(20);
  CHECK(ud.substr(0, 18) == "1.8181541735526605");

  SearchReport os = strong_ratio_search_z(Op::OneSided, Exponent::of(2), cfg);
  std::string od = os.best.value.approx.str(20);
  CHECK(od.substr(0, 18) == "1.4672567257993670");
}

TEST_CASE("p = infinity returns the exact supremum immediately") {
  SearchReport z = strong_ratio_search_z(Op::Centered, Exponent::infinity());
  REQUIRE(z.best.value.is_exact());
  CHECK(z.best.value.exact_value() == 1);

  SearchReport c = strong_ratio_search_cyclic(Op::Centered, 4, Exponent::infinity());
  REQUIRE(c.best.value.is_exact());
  CHECK(c.best.value.exact_value() == 1);
}

TEST_CASE("cyclic ratios stay below the z sweep at p = 2") {
  SearchConfig zcfg;
  zcfg.budget = 4000;
  SearchReport z = strong_ratio_search_z(Op::Uncentered, Exponent::of(2), zcfg);
  SearchConfig ccfg;
  ccfg.budget = 2000;
  SearchReport c = strong_ratio_search_cyclic(Op::Uncentered, 3, Exponent::of(2), ccfg);
  REQUIRE(z.best.value.power.has_value());
  REQUIRE(c.best.value.power.has_value());
  CHECK(*c.best.value.power <= *z.best.value.power);
}

TEST_CASE("budget exhaustion is reported not thrown") {
  SearchConfig cfg;
  cfg.budget = 3;
  SearchReport r = strong_ratio_search_cyclic(Op::Uncentered, 4, Exponent::of(2), cfg);
  CHECK(r.budget_exhausted);
  CHECK(r.evaluations <= 4);  // stops right at the cap
}
