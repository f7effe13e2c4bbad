#include "doctest.h"

#include "ergomax/average.hpp"

using namespace ergomax;

TEST_CASE("for_each_box_point order and count") {
  std::vector<std::vector<long long>> seen;
  for_each_box_point(2, 2, [&](const std::vector<long long>& n) { seen.push_back(n); });
  REQUIRE(seen.size() == 4);
  CHECK(seen[0] == std::vector<long long>{1, 1});
  CHECK(seen[1] == std::vector<long long>{1, 2});
  CHECK(seen[2] == std::vector<long long>{2, 1});
  CHECK(seen[3] == std::vector<long long>{2, 2});
}

TEST_CASE("linear average on Z") {
  // A_N f(x) = (1/N) sum_{n=1}^N f(x + n)
  Signal f = signal1({{0, rat(1)}, {1, rat(2)}});
  Signal a = average_op(SystemModel::canonical(1), PolynomialFamily::linear1(), {f}, 2);
  CHECK(a.eval({-2}) == rat(1, 2));  // f(-1) + f(0) over 2
  CHECK(a.eval({-1}) == rat(3, 2));
  CHECK(a.eval({0}) == 1);
  CHECK(a.eval({1}) == 0);
}

TEST_CASE("square average shifts by n^2") {
  Signal f = delta({0});
  Signal a = average_op(SystemModel::canonical(1), PolynomialFamily::power1(2), {f}, 3);
  // shifts 1, 4, 9
  CHECK(a.eval({-1}) == rat(1, 3));
  CHECK(a.eval({-4}) == rat(1, 3));
  CHECK(a.eval({-9}) == rat(1, 3));
  CHECK(a.eval({-2}) == 0);
}

TEST_CASE("bilinear average multiplies factors") {
  // m = 2 with P_1(n) = n, P_2(n) = 2n: A_N (f,g)(x) = E_n f(x+n) g(x+2n)
  PolynomialFamily P(1, 2, 1);
  P.at(0, 0) = Polynomial::variable();
  P.at(0, 1).add_term({1}, Integer(2));
  Signal f = delta({1});
  Signal g = delta({2});
  Signal a = average_op(SystemModel::canonical(1), P, {f, g}, 2);
  // needs x + n = 1 and x + 2n = 2 -> n = 1, x = 0
  CHECK(a.eval({0}) == rat(1, 2));
  CHECK(a.support_size() == 1);
}

TEST_CASE("cyclic average collapses generators") {
  // on a cyclic system every coordinate shift is the +1 rotation, so a d = 2
  // family acts through the sum of its entries
  CyclicSignal f(4);
  f.set(0, rat(1));
  PolynomialFamily P(2, 1, 1);
  P.at(0, 0) = Polynomial::variable();                 // shift n
  P.at(1, 0) = Polynomial::monomial_power(2);          // shift n^2
  CyclicSignal a = average_op(SystemModel::cyclic(4), P, {f}, 2);
  // total shifts n + n^2: 2 and 6 ~ 2 mod 4
  CHECK(a.eval(2) == 1);
  CHECK(a.eval(0) == 0);
  CHECK(a.eval(1) == 0);
}

TEST_CASE("average_value_cyclic agrees with the materialized signal") {
  CyclicSignal f({rat(1), rat(0), rat(2), rat(0), rat(1, 3)});
  PolynomialFamily P = PolynomialFamily::power1(2);
  for (long N = 1; N <= 4; ++N) {
    CyclicSignal a = average_op(SystemModel::cyclic(5), P, {f}, N);
    for (long x = 0; x < 5; ++x) CHECK(a.eval(x) == average_value_cyclic(P, {f}, N, x));
  }
}

TEST_CASE("multilinear brute force cross check") {
  // k = 2 box, P(n1, n2) = n1 + n2^2
  PolynomialFamily P(1, 1, 2);
  P.at(0, 0).add_term({1, 0}, Integer(1));
  P.at(0, 0).add_term({0, 2}, Integer(1));
  Signal f = signal1({{2, rat(1)}, {5, rat(-1, 2)}});
  long N = 3;
  Signal a = average_op(SystemModel::canonical(1), P, {f}, N);
  for (long long x = -15; x <= 10; ++x) {
    Rational direct(0);
    for (long long n1 = 1; n1 <= N; ++n1)
      for (long long n2 = 1; n2 <= N; ++n2) direct += f.eval({x + n1 + n2 * n2});
    direct /= N * N;
    CHECK(a.eval({x}) == direct);
  }
}

TEST_CASE("budget guard") {
  Signal f = delta({0});
  CHECK_THROWS_AS(
      average_op(SystemModel::canonical(1), PolynomialFamily::linear1(), {f}, 100, 50),
      budget_error);
}
