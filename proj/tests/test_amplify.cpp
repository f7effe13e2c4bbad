#include "doctest.h"

#include "ergomax/amplify.hpp"

using namespace ergomax;

TEST_CASE("periodization ledger for the documented L = 2 example") {
  CyclicSignal f(2);
  f.set(0, rat(1));
  AmplifyReport r = amplify(f, 2, 64, rat(1, 40));
  CHECK(r.build.L == 2);
  CHECK(r.build.R == 64);
  CHECK(r.build.norm_scaling_ok);
  // the search supplies the L = 2 one-sided reference
  CHECK(r.rho_power == rat(233, 178));
  CHECK(r.precondition_ok);
  CHECK(r.left_tail_ok);
  CHECK(r.hoelder_ok);
  CHECK(r.holds);
  CHECK(r.margin > 0);
  CHECK(r.ok());
}

TEST_CASE("periodized signal repeats the cycle") {
  CyclicSignal f({rat(1), rat(0), rat(2, 3)});
  AmplifyReport r = amplify(f, 2, 4, rat(1, 10), rat(1));
  const Signal& F = r.build.F;
  for (long long l = 1; l <= 12; ++l) CHECK(F.eval({l}) == f.eval(l));
  CHECK(F.eval({0}) == 0);
  CHECK(F.eval({13}) == 0);
  // ||F||_p^p = R ||f||_p^p
  CHECK(r.build.norm_scaling_ok);
}

TEST_CASE("amplifying bracket beats the plain ratio") {
  // eps = 1/100 keeps (1-eps)^(2p) close enough to 1 that the tail term
  // pushes the bracket above it
  CyclicSignal f({rat(13), rat(3)});
  AmplifyReport r = amplify(f, 2, 64, rat(1, 100));
  CHECK(r.precondition_ok);
  CHECK(r.amplifying);
  CHECK(r.bracket_power > 1);
  CHECK(r.holds);
  CHECK(r.margin > 0);
}

TEST_CASE("large eps is reported not amplifying") {
  CyclicSignal f({rat(13), rat(3)});
  AmplifyReport r = amplify(f, 2, 16, rat(1, 2));
  CHECK(!r.amplifying);
  CHECK(r.bracket_power < 1);
}

TEST_CASE("min_R for the documented example is one") {
  CyclicSignal f(2);
  f.set(0, rat(1));
  long long R = amplify_min_R(f, 2, rat(1, 40));
  CHECK(R == 1);
  AmplifyReport at = amplify(f, 2, R, rat(1, 40));
  CHECK(at.holds);
}

TEST_CASE("explicit rho skips the search") {
  CyclicSignal f(2);
  f.set(0, rat(1));
  AmplifyReport r = amplify(f, 2, 8, rat(1, 40), rat(233, 178));
  CHECK(r.rho_power == rat(233, 178));
  // M(1,0) = (1, 1/2) gives f's own ratio power 5/4, within (1-eps)^2 of rho
  CHECK(r.ratio_power == rat(5, 4));
  CHECK(r.precondition_ok);
}

TEST_CASE("centered operator widens the tail window") {
  CyclicSignal f(2);
  f.set(0, rat(1));
  AmplifyReport os = amplify(f, 2, 32, rat(1, 40), rat(1), Op::OneSided);
  AmplifyReport c = amplify(f, 2, 32, rat(1, 40), rat(1), Op::Centered);
  // t = 2 vs t = 4 shows up in the bracket's tail term
  CHECK(os.bracket_power > c.bracket_power);
  CHECK(os.left_tail_ok);
  CHECK(c.left_tail_ok);
}

TEST_CASE("input guards") {
  CyclicSignal f(2);
  f.set(0, rat(1));
  CHECK_THROWS_AS(amplify(f, 1, 4, rat(1, 10)), domain_error);   // p < 2
  CHECK_THROWS_AS(amplify(f, 2, 0, rat(1, 10)), domain_error);   // R < 1
  CHECK_THROWS_AS(amplify(f, 2, 4, rat(0)), domain_error);       // eps out of range
  CHECK_THROWS_AS(amplify(f, 2, 4, rat(1)), domain_error);
  CyclicSignal neg(2);
  neg.set(0, rat(-1));
  CHECK_THROWS_AS(amplify(neg, 2, 4, rat(1, 10)), domain_error);
}
