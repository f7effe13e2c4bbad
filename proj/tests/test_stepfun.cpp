#include "doctest.h"

#include "ergomax/stepfun.hpp"

using namespace ergomax;

TEST_CASE("step function evaluation and integral") {
  StepFunction s;
  s.breakpoints = {rat(0), rat(1), rat(3)};
  s.values = {rat(2), rat(1, 2)};
  CHECK(s.eval(rat(0)) == 2);
  CHECK(s.eval(rat(1, 2)) == 2);
  CHECK(s.eval(rat(1)) == rat(1, 2));  // right continuous
  CHECK(s.eval(rat(5, 2)) == rat(1, 2));
  CHECK(s.eval(rat(3)) == 0);
  CHECK(s.eval(rat(-1)) == 0);

  CHECK(s.integral(rat(0), rat(3)) == 2 + 1);
  CHECK(s.integral(rat(1, 2), rat(2)) == rat(1) + rat(1, 2));
  CHECK(s.integral(rat(-5), rat(0)) == 0);
  // additivity at an interior cut
  CHECK(s.integral(rat(0), rat(3, 2)) + s.integral(rat(3, 2), rat(3)) ==
        s.integral(rat(0), rat(3)));
}

TEST_CASE("step extension plateaus over integer cells") {
  Signal f = signal1({{0, rat(3)}, {2, rat(-1)}});
  StepFunction s = step_extension(f);
  CHECK(s.eval(rat(0)) == 3);
  CHECK(s.eval(rat(1, 2)) == 3);
  CHECK(s.eval(rat(1)) == 0);   // the gap cell is present with value 0
  CHECK(s.eval(rat(2)) == -1);
  CHECK(s.eval(rat(5, 2)) == -1);
  CHECK(s.eval(rat(3)) == 0);
  // total integral equals the discrete sum
  CHECK(s.integral(rat(-1), rat(4)) == 2);
}

TEST_CASE("continuous uncentered maximal on a single plateau") {
  Signal f = delta({0});
  StepFunction s = step_extension(f);
  // at x inside [0,1) the best interval is the plateau itself
  CHECK(continuous_uncentered_max(s, rat(1, 2)) == 1);
  // at x = 2 the best interval [a, 2] must stretch back to the mass
  CHECK(continuous_uncentered_max(s, rat(2)) == rat(1, 2));
  CHECK(continuous_uncentered_max(s, rat(-1)) == rat(1, 2));
}

TEST_CASE("continuous maximal dominates the discrete one") {
  Signal f = signal1({{0, rat(2)}, {1, rat(1, 3)}, {4, rat(5, 2)}});
  std::vector<Rational> xs{rat(-3, 2), rat(0), rat(1, 2), rat(2), rat(7, 2), rat(9, 2), rat(6)};
  StepDominationReport rep = step_extension_dominates(f, xs);
  REQUIRE(rep.ok);
  REQUIRE(rep.samples.size() == xs.size());
  for (const auto& s : rep.samples) {
    CHECK(s.dominates);
    CHECK(s.continuous_value >= s.discrete_value);
    CHECK(s.cell == floor_int(s.x));
  }
}

TEST_CASE("domination at plateau interiors is an equality witness") {
  // constant block: the continuous max at interior points equals the
  // discrete max at the cell
  Signal f = signal1({{0, rat(1)}, {1, rat(1)}});
  StepDominationReport rep = step_extension_dominates(f, {rat(1, 2), rat(3, 2)});
  REQUIRE(rep.ok);
  CHECK(rep.samples[0].continuous_value == 1);
  CHECK(rep.samples[0].discrete_value == 1);
}
