#include "doctest.h"

#include "ergomax/maximal.hpp"

using namespace ergomax;

TEST_CASE("op names round trip") {
  CHECK(parse_op("os") == Op::OneSided);
  CHECK(parse_op("c") == Op::Centered);
  CHECK(parse_op("u") == Op::Uncentered);
  CHECK(op_name(Op::OneSided) == std::string("os"));
  CHECK(op_name(Op::Centered) == std::string("c"));
  CHECK(op_name(Op::Uncentered) == std::string("u"));
  CHECK_THROWS_AS(parse_op("x"), domain_error);
}

TEST_CASE("default window caps") {
  CHECK(default_nmax(Op::OneSided, 1) == 0);
  CHECK(default_nmax(Op::OneSided, 5) == 4);
  CHECK(default_nmax(Op::Centered, 5) == 10);
  CHECK(default_nmax(Op::Uncentered, 3) == 6);
}

TEST_CASE("centered delta on Z_3") {
  CyclicSignal f(3);
  f.set(0, rat(1));
  CyclicSignal m = maximal_cyclic(f, Op::Centered);
  CHECK(m.eval(0) == 1);
  CHECK(m.eval(1) == rat(2, 5));
  CHECK(m.eval(2) == rat(2, 5));
}

TEST_CASE("one sided delta on Z_5") {
  CyclicSignal f(5);
  f.set(0, rat(1));
  CyclicSignal m = maximal_cyclic(f, Op::OneSided);
  // windows [x, x + N], N <= L - 1; the best window at x reaches forward to 0
  CHECK(m.eval(0) == 1);
  CHECK(m.eval(4) == rat(1, 2));
  CHECK(m.eval(3) == rat(1, 3));
  CHECK(m.eval(1) == rat(1, 5));
}

TEST_CASE("maximal dominates the signal pointwise") {
  CyclicSignal f({rat(2), rat(-3), rat(0), rat(1, 2)});
  for (Op op : {Op::OneSided, Op::Centered, Op::Uncentered}) {
    CyclicSignal m = maximal_cyclic(f, op);
    for (long x = 0; x < 4; ++x) CHECK(m.eval(x) >= rabs(f.eval(x)));
  }
}

TEST_CASE("uncentered dominates centered dominates nothing smaller") {
  CyclicSignal f({rat(1), rat(0), rat(0), rat(4), rat(0), rat(2)});
  CyclicSignal mos = maximal_cyclic(f, Op::OneSided);
  CyclicSignal mc = maximal_cyclic(f, Op::Centered);
  CyclicSignal mu = maximal_cyclic(f, Op::Uncentered);
  for (long x = 0; x < 6; ++x) {
    CHECK(mu.eval(x) >= mos.eval(x));
    CHECK(mu.eval(x) >= mc.eval(x));
  }
}

TEST_CASE("evaluator matches the window brute force on Z") {
  Signal f = signal1({{-2, rat(3)}, {0, rat(-1)}, {1, rat(1, 2)}, {5, rat(2)}});
  for (Op op : {Op::OneSided, Op::Centered, Op::Uncentered}) {
    MaximalEvaluator ev(f, op);
    for (long long x = -6; x <= 9; ++x) {
      CHECK(ev.at(x) == maximal_value(f, op, x));
      CHECK(ev.at(x) == maximal_value_windows(f, op, x, 40));
    }
    auto prof = ev.profile(-6, 9);
    for (long long x = -6; x <= 9; ++x)
      CHECK(prof[static_cast<size_t>(x + 6)] == ev.at(x));
  }
}

TEST_CASE("one sided maximal of delta is 1/(x+1) to the left") {
  Signal d = delta({0});
  MaximalEvaluator ev(d, Op::OneSided);
  // windows [x, x + N]: mass reachable only for x <= 0
  CHECK(ev.at(0) == 1);
  CHECK(ev.at(-3) == rat(1, 4));
  CHECK(ev.at(-10) == rat(1, 11));
  CHECK(ev.at(1) == 0);
}

TEST_CASE("level sets and level_range agree") {
  Signal f = signal1({{0, rat(1)}, {1, rat(1)}});
  auto ls = maximal_level_set(f, Op::OneSided, rat(1, 3));
  // M_os f(x) = 2/(2 - x) for x in [-4, 0] reaches 1/3 down to x = -4
  CHECK(ls == std::vector<long long>{-4, -3, -2, -1, 0, 1});

  MaximalEvaluator ev(f, Op::OneSided);
  auto [lo, hi] = ev.level_range(rat(1, 3));
  for (long long x : ls) {
    CHECK(x >= lo);
    CHECK(x <= hi);
  }
}

TEST_CASE("maximal_restrict materializes the profile") {
  Signal f = signal1({{0, rat(1)}});
  Signal r = maximal_restrict(f, Op::Centered, -2, 2);
  CHECK(r.eval({0}) == 1);
  CHECK(r.eval({1}) == rat(1, 3));
  CHECK(r.eval({2}) == rat(1, 5));
  CHECK(r.eval({-2}) == rat(1, 5));
  CHECK(r.eval({3}) == 0);  // outside the window
}

TEST_CASE("zero signal") {
  Signal z(1);
  MaximalEvaluator ev(z, Op::Uncentered);
  CHECK(ev.zero_signal());
  CHECK(ev.at(17) == 0);
  CHECK(maximal_level_set(z, Op::Centered, rat(1, 2)).empty());
}
