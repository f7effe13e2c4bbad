#include "doctest.h"

#include "ergomax/signal.hpp"

using namespace ergomax;

TEST_CASE("signal set eval erase") {
  Signal f(1);
  f.set({3}, rat(2, 5));
  CHECK(f.eval({3}) == rat(2, 5));
  CHECK(f.eval({4}) == 0);
  CHECK(f.support_size() == 1);
  f.set({3}, rat(0));
  CHECK(f.empty());
  CHECK_THROWS_AS(f.set({1, 2}, rat(1)), domain_error);
}

TEST_CASE("signal add accumulates") {
  Signal f(2);
  f.add({0, 0}, rat(1, 3));
  f.add({0, 0}, rat(2, 3));
  CHECK(f.eval({0, 0}) == 1);
  f.add({0, 0}, rat(-1));
  CHECK(f.empty());
}

TEST_CASE("scaled shifted abs") {
  Signal f(1);
  f.set({0}, rat(-2));
  f.set({5}, rat(3, 4));

  Signal g = f.scaled(rat(1, 2));
  CHECK(g.eval({0}) == rat(-1));
  CHECK(g.eval({5}) == rat(3, 8));
  CHECK(f.scaled(rat(0)).empty());

  Signal h = f.shifted({2});
  CHECK(h.eval({2}) == rat(-2));
  CHECK(h.eval({7}) == rat(3, 4));
  CHECK(h.eval({0}) == 0);

  Signal a = f.abs();
  CHECK(a.eval({0}) == 2);
  CHECK(a.nonnegative());
  CHECK(!f.nonnegative());
}

TEST_CASE("plus and bounding box") {
  Signal f(1), g(1);
  f.set({-3}, rat(1));
  f.set({2}, rat(1));
  g.set({2}, rat(-1));
  Signal s = f.plus(g);
  CHECK(s.eval({-3}) == 1);
  CHECK(s.eval({2}) == 0);
  CHECK(s.support_size() == 1);

  Point lo, hi;
  f.bounding_box(lo, hi);
  CHECK(lo == Point{-3});
  CHECK(hi == Point{2});
}

TEST_CASE("entries iterate in lexicographic order") {
  Signal f(2);
  f.set({1, 0}, rat(1));
  f.set({0, 5}, rat(2));
  f.set({0, -1}, rat(3));
  std::vector<Point> order;
  for (const auto& [x, v] : f.entries()) order.push_back(x);
  CHECK(order == std::vector<Point>{{0, -1}, {0, 5}, {1, 0}});
}

TEST_CASE("cyclic signal modular access") {
  CyclicSignal f(3);
  f.set(0, rat(1));
  f.set(2, rat(2, 3));
  CHECK(f.period() == 3);
  CHECK(f.weight() == 1);
  CHECK(f.eval(0) == 1);
  CHECK(f.eval(3) == 1);
  CHECK(f.eval(-1) == rat(2, 3));
  CHECK(f.eval(5) == rat(2, 3));
}

TEST_CASE("cyclic weight must be positive") {
  CHECK_THROWS_AS(CyclicSignal(3, rat(0)), domain_error);
  CHECK_THROWS_AS(CyclicSignal(3, rat(-1, 2)), domain_error);
  CHECK_THROWS_AS(CyclicSignal(0), domain_error);
}

TEST_CASE("cyclic rotate and scale") {
  CyclicSignal f({rat(1), rat(0), rat(2, 3)}, rat(1, 5));
  CHECK(f.weight() == rat(1, 5));

  CyclicSignal r = f.rotated(1);
  CHECK(r.eval(1) == 1);
  CHECK(r.eval(0) == rat(2, 3));

  CyclicSignal s = f.scaled(rat(3));
  CHECK(s.eval(2) == 2);
  CHECK(s.weight() == rat(1, 5));

  CHECK(f.nonnegative());
  CyclicSignal neg(2);
  neg.set(0, rat(-1));
  CHECK(!neg.nonnegative());
  CHECK(!neg.zero());
  CHECK(CyclicSignal(4).zero());
}

TEST_CASE("delta and signal1 helpers") {
  Signal d = delta({0});
  CHECK(d.eval({0}) == 1);
  CHECK(d.support_size() == 1);
  CHECK(delta({1, 2}, rat(5)).eval({1, 2}) == 5);

  Signal s = signal1({{-2, rat(1, 2)}, {4, rat(-1)}});
  CHECK(s.dimension() == 1);
  CHECK(s.eval({-2}) == rat(1, 2));
  CHECK(s.eval({4}) == -1);
}
