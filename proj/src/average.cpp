#include "ergomax/average.hpp"

#include <functional>
#include <set>

namespace ergomax {

namespace {

long long box_size_checked(long N, int k, long long budget) {
  if (N < 1) throw domain_error("average_op needs N >= 1");
  long long size = 1;
  for (int i = 0; i < k; ++i) {
    if (size > budget / N) throw budget_error("average box [N]^k exceeds the budget");
    size *= N;
  }
  return size;
}

// Shift of the j-th factor for a fixed n: on Z^d the vector (P_{1,j}(n), ...,
// P_{d,j}(n)); on a cyclic system all generators rotate by +1, so the shifts
// collapse to the integer sum of the exponents.
Point zd_shift(const PolynomialFamily& P, int j, const std::vector<long long>& n) {
  Point s(static_cast<size_t>(P.d), 0);
  for (int i = 0; i < P.d; ++i) {
    Integer e = P.at(i, j).eval(n);
    if (!e.fits_slong_p()) throw budget_error("polynomial shift exceeds 64 bits");
    s[static_cast<size_t>(i)] = e.get_si();
  }
  return s;
}

long long cyclic_shift(const PolynomialFamily& P, int j, const std::vector<long long>& n) {
  Integer total(0);
  for (int i = 0; i < P.d; ++i) total += P.at(i, j).eval(n);
  if (!total.fits_slong_p()) throw budget_error("polynomial shift exceeds 64 bits");
  return total.get_si();
}

}  // namespace

void for_each_box_point(long N, int k,
                        const std::function<void(const std::vector<long long>&)>& visit) {
  std::vector<long long> n(static_cast<size_t>(k), 1);
  while (true) {
    visit(n);
    int i = k - 1;
    while (i >= 0 && n[static_cast<size_t>(i)] == N) {
      n[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++n[static_cast<size_t>(i)];
  }
}

Signal average_op(const SystemModel& system, const PolynomialFamily& P,
                  const std::vector<Signal>& f, long N, long long budget) {
  if (system.kind != SystemModel::Kind::CanonicalZd)
    throw domain_error("this overload averages on the canonical Z^d system");
  if (static_cast<int>(f.size()) != P.m) throw domain_error("tuple arity does not match m");
  if (system.d != P.d) throw domain_error("system dimension does not match the family");
  for (const auto& fj : f)
    if (fj.dimension() != P.d) throw domain_error("signal dimension does not match the family");
  long long box = box_size_checked(N, P.k, budget);

  // x contributes only if x + shift_1(n) lies in supp(f_1) for some n, so the
  // candidate set comes from the first factor; remaining factors filter.
  std::vector<std::vector<Point>> shifts(static_cast<size_t>(P.m));
  for_each_box_point(N, P.k, [&](const std::vector<long long>& n) {
    for (int j = 0; j < P.m; ++j)
      shifts[static_cast<size_t>(j)].push_back(zd_shift(P, j, n));
  });

  std::set<Point> candidates;
  for (const auto& [pt, v] : f[0].entries()) {
    (void)v;
    for (const auto& s : shifts[0]) {
      Point x = pt;
      for (int i = 0; i < P.d; ++i) x[static_cast<size_t>(i)] -= s[static_cast<size_t>(i)];
      candidates.insert(std::move(x));
    }
  }

  Signal out(P.d);
  Rational inv_box = Rational(1) / rat(box);
  for (const auto& x : candidates) {
    Rational sum(0);
    for (long long t = 0; t < box; ++t) {
      Rational prod(1);
      for (int j = 0; j < P.m && prod != 0; ++j) {
        const Point& s = shifts[static_cast<size_t>(j)][static_cast<size_t>(t)];
        Point y = x;
        for (int i = 0; i < P.d; ++i) y[static_cast<size_t>(i)] += s[static_cast<size_t>(i)];
        prod *= f[static_cast<size_t>(j)].eval(y);
      }
      sum += prod;
    }
    out.set(x, sum * inv_box);
  }
  return out;
}

CyclicSignal average_op(const SystemModel& system, const PolynomialFamily& P,
                        const std::vector<CyclicSignal>& f, long N, long long budget) {
  if (system.kind != SystemModel::Kind::Cyclic)
    throw domain_error("this overload averages on a cyclic system");
  if (static_cast<int>(f.size()) != P.m) throw domain_error("tuple arity does not match m");
  for (const auto& fj : f)
    if (fj.period() != system.L) throw domain_error("signal period does not match the system");
  box_size_checked(N, P.k, budget);

  CyclicSignal out(system.L, system.w);
  for (long x = 0; x < system.L; ++x) out.set(x, average_value_cyclic(P, f, N, x));
  return out;
}

Rational average_value_cyclic(const PolynomialFamily& P, const std::vector<CyclicSignal>& f,
                              long N, long long x) {
  if (static_cast<int>(f.size()) != P.m) throw domain_error("tuple arity does not match m");
  Rational sum(0);
  long long box = 0;
  for_each_box_point(N, P.k, [&](const std::vector<long long>& n) {
    ++box;
    Rational prod(1);
    for (int j = 0; j < P.m && prod != 0; ++j)
      prod *= f[static_cast<size_t>(j)].eval(x + cyclic_shift(P, j, n));
    sum += prod;
  });
  return sum / rat(box);
}

}  // namespace ergomax
