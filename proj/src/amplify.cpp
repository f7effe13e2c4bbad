#include "ergomax/amplify.hpp"

namespace ergomax {

namespace {

Rational searched_rho_power(const CyclicSignal& f, unsigned long p, Op op) {
  SearchReport rep = strong_ratio_search_cyclic(op, f.period(), Exponent::of(rat(p)));
  if (!rep.best.value.power) throw domain_error("the ratio search produced no exact power");
  return *rep.best.value.power;
}

}  // namespace

AmplifyReport amplify(const CyclicSignal& f, unsigned long p, long long R, const Rational& eps,
                      std::optional<Rational> rho_power, Op op) {
  if (p < 2) throw domain_error("amplification needs an integer p >= 2");
  if (R < 1) throw domain_error("amplification needs R >= 1");
  if (!(eps > 0 && eps < 1)) throw domain_error("epsilon must lie in (0, 1)");
  if (!f.nonnegative()) throw domain_error("amplification needs a nonnegative signal");
  if (f.zero()) throw domain_error("amplification needs a nonzero signal");
  if (f.weight() != 1) throw domain_error("amplification needs atom weight 1");

  const long L = f.period();
  const long long RL = R * L;

  AmplifyReport rep;
  rep.op = op;
  rep.p = p;
  rep.build.L = L;
  rep.build.R = R;
  rep.build.eps = eps;
  rep.build.f = f;
  Signal F(1);
  for (long long l = 1; l <= RL; ++l) F.set({l}, f.eval(l));
  rep.build.F = F;
  const Rational f_power = power_sum(f, p);
  const Rational F_power = power_sum(F, p);
  rep.build.norm_scaling_ok = F_power == rat(R) * f_power;

  CyclicSignal M_cyc = maximal_cyclic(f, op);
  const Rational M_cyc_power = power_sum(M_cyc, p);
  rep.ratio_power = M_cyc_power / f_power;
  rep.rho_power = rho_power ? *rho_power : searched_rho_power(f, p, op);
  const Rational one_minus = Rational(1) - eps;
  rep.precondition_ok = rep.ratio_power >= rpow(one_minus, p) * rep.rho_power;

  MaximalEvaluator ev(F, op);
  std::vector<Rational> vals = ev.profile(-RL + 1, RL);
  rep.lhs_power = 0;
  for (const auto& v : vals) rep.lhs_power += rpow(v, p);

  const long t = op == Op::Centered ? 4 : 2;
  Rational S = l1_norm(F);
  rep.tail_bound = op == Op::Centered ? S / rat(4 * RL - 1) : S / rat(2 * RL);
  rep.edge_value = vals[0];
  rep.left_tail_ok = true;
  rep.hoelder_ok = true;
  const Rational hoelder_scale = rpow(rat(t * static_cast<long long>(L)), p) * rat(L);
  for (long long l = -RL + 1; l <= 0; ++l) {
    const Rational& v = vals[static_cast<size_t>(l + RL - 1)];
    if (v < rep.tail_bound) rep.left_tail_ok = false;
    if (rpow(v, p) * hoelder_scale < M_cyc_power) rep.hoelder_ok = false;
  }

  rep.bracket_power = rpow(one_minus, 2 * p) + rpow(one_minus / rat(t * static_cast<long long>(L)), p);
  rep.rhs_power = rep.bracket_power * rep.rho_power * F_power;
  rep.margin = rep.lhs_power - rep.rhs_power;
  rep.holds = rep.margin >= 0;
  rep.amplifying = rep.bracket_power > 1;
  if (!rep.holds)
    rep.note = "R too small: margin " + rat_str(rep.margin);
  else if (!rep.amplifying)
    rep.note = "bracket <= 1 at this epsilon: the bound does not exceed rho";
  return rep;
}

long long amplify_min_R(const CyclicSignal& f, unsigned long p, const Rational& eps,
                        std::optional<Rational> rho_power, Op op, long long R_max) {
  Rational rho = rho_power ? *rho_power : searched_rho_power(f, p, op);
  auto holds_at = [&](long long R) { return amplify(f, p, R, eps, rho, op).holds; };
  long long good = 1;
  while (!holds_at(good)) {
    if (good > R_max / 2) throw budget_error("no admissible R within the doubling budget");
    good *= 2;
  }
  long long bad = good / 2;  // 0 when good == 1; otherwise a failing R
  while (good - bad > 1) {
    long long mid = bad + (good - bad) / 2;
    if (holds_at(mid))
      good = mid;
    else
      bad = mid;
  }
  return good;
}

}  // namespace ergomax
