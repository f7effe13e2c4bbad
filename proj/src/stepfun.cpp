#include "ergomax/stepfun.hpp"

#include <algorithm>

namespace ergomax {

Rational StepFunction::eval(const Rational& x) const {
  if (breakpoints.empty() || x < breakpoints.front() || x >= breakpoints.back())
    return Rational(0);
  size_t i = static_cast<size_t>(
      std::upper_bound(breakpoints.begin(), breakpoints.end(), x) - breakpoints.begin());
  return values[i - 1];
}

Rational StepFunction::integral(const Rational& a, const Rational& b) const {
  if (a > b) throw domain_error("integral needs a <= b");
  Rational s(0);
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    Rational lo = std::max(a, breakpoints[i]);
    Rational hi = std::min(b, breakpoints[i + 1]);
    if (hi > lo) s += values[i] * (hi - lo);
  }
  return s;
}

StepFunction step_extension(const Signal& f_dis) {
  if (f_dis.dimension() != 1) throw domain_error("step extension needs a one-dimensional signal");
  StepFunction f;
  if (f_dis.empty()) return f;
  Point lo, hi;
  f_dis.bounding_box(lo, hi);
  for (long long l = lo[0]; l <= hi[0] + 1; ++l) {
    f.breakpoints.push_back(rat(l));
    if (l <= hi[0]) f.values.push_back(f_dis.eval({l}));
  }
  return f;
}

Rational continuous_uncentered_max(const StepFunction& f, const Rational& x) {
  std::vector<Rational> c = f.breakpoints;
  c.push_back(x);
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::vector<Rational> J(c.size(), Rational(0));
  for (size_t i = 1; i < c.size(); ++i) J[i] = J[i - 1] + f.integral(c[i - 1], c[i]);
  Rational best = f.eval(x);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] > x) break;
    for (size_t j = c.size(); j-- > 0;) {
      if (c[j] < x || j <= i) break;
      Rational avg = (J[j] - J[i]) / (c[j] - c[i]);
      if (avg > best) best = avg;
    }
  }
  return best;
}

StepDominationReport step_extension_dominates(const Signal& f_dis,
                                              const std::vector<Rational>& xs) {
  if (!f_dis.nonnegative()) throw domain_error("step extension comparison needs f >= 0");
  StepDominationReport rep;
  rep.f_cont = step_extension(f_dis);
  rep.ok = true;
  for (const auto& x : xs) {
    StepSample s;
    s.x = x;
    Integer cell = floor_int(x);
    if (!cell.fits_slong_p()) throw budget_error("sample point exceeds 64 bits");
    s.cell = cell.get_si();
    s.continuous_value = continuous_uncentered_max(rep.f_cont, x);
    s.discrete_value = maximal_value(f_dis, Op::Uncentered, s.cell);
    s.dominates = s.continuous_value >= s.discrete_value;
    if (!s.dominates) rep.ok = false;
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace ergomax
