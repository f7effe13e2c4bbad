#include "ergomax/transference.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ergomax {

namespace {

// Visits every l in [lo, hi]^d in lexicographic order.
void for_each_in_box(long long lo, long long hi, int d,
                     const std::function<void(const std::vector<long long>&)>& visit) {
  if (lo > hi) return;
  std::vector<long long> l(static_cast<size_t>(d), lo);
  while (true) {
    visit(l);
    int i = d - 1;
    while (i >= 0 && l[static_cast<size_t>(i)] == hi) {
      l[static_cast<size_t>(i)] = lo;
      --i;
    }
    if (i < 0) break;
    ++l[static_cast<size_t>(i)];
  }
}

Rational box_points(long long side, int d) { return rpow(rat(side), static_cast<unsigned long>(d)); }

Rational box_work(long N_hi, int k) {
  Rational s(0);
  for (long N = 1; N <= N_hi; ++N) s += rpow(rat(N), static_cast<unsigned long>(k));
  return s;
}

// Exact comparable value of the functional: Max yields the value itself,
// integer-order variation its r-th power.
Rational exact_functional_value(const FunctionalSpec& O, const std::vector<Rational>& a) {
  if (O.kind == FunctionalSpec::Kind::Max) {
    Rational m(0);
    for (const auto& v : a) {
      Rational av = rabs(v);
      if (av > m) m = av;
    }
    return m;
  }
  if (!is_integer(O.r))
    throw domain_error("inner identity needs max or an integer-order variation");
  return variation_power(static_cast<unsigned long>(O.r.get_num().get_ui()), a);
}

Rational weak_power_from_values(std::vector<Rational> us, const Rational& atom_measure) {
  std::sort(us.begin(), us.end(), [](const Rational& a, const Rational& b) { return a > b; });
  Rational best(0);
  for (size_t i = 0; i < us.size(); ++i) {
    if (us[i] <= 0) break;
    if (i + 1 < us.size() && us[i + 1] == us[i]) continue;
    Rational cand = us[i] * rat(static_cast<long long>(i + 1)) * atom_measure;
    if (cand > best) best = cand;
  }
  return best;
}

}  // namespace

RadiusBound compute_RK(const PolynomialFamily& P, long K, long long budget) {
  if (K < 1) throw domain_error("compute_RK needs K >= 1");
  Rational pts = box_points(2 * static_cast<long long>(K) + 1, P.k);
  if (pts > rat(budget)) throw budget_error("the box ||n||_inf <= K exceeds the budget");
  RadiusBound out;
  out.max_abs = 0;
  out.witness.assign(static_cast<size_t>(P.k), 0);
  for_each_in_box(-K, K, P.k, [&](const std::vector<long long>& n) {
    for (int i = 0; i < P.d; ++i)
      for (int j = 0; j < P.m; ++j) {
        Integer v = ::abs(P.at(i, j).eval(n));
        if (v > out.max_abs) {
          out.max_abs = v;
          out.wi = i;
          out.wj = j;
          out.witness = n;
        }
      }
  });
  if (!out.max_abs.fits_slong_p()) throw budget_error("R_K exceeds 64 bits");
  out.R_K = std::max(1L, out.max_abs.get_si());
  return out;
}

TransferenceBuild build_transfer(const SystemModel& system, const PolynomialFamily& P,
                                 const std::vector<CyclicSignal>& f, long K,
                                 const ExponentTuple& p, long long budget) {
  if (system.kind != SystemModel::Kind::Cyclic)
    throw domain_error("the transfer source must be a cyclic system");
  if (K < 3) throw domain_error("the transfer needs K >= 3");
  if (static_cast<int>(f.size()) != P.m) throw domain_error("tuple arity does not match m");
  if (static_cast<int>(p.p.size()) != P.m) throw domain_error("exponent arity does not match m");
  for (const auto& fj : f) {
    if (fj.period() != system.L) throw domain_error("signal period does not match the system");
    if (fj.weight() != system.w) throw domain_error("signal weight does not match the system");
  }

  RadiusBound rb = compute_RK(P, K, budget);
  if (rb.R_K > budget / K) throw budget_error("K R_K exceeds the budget");
  const long long KR = K * rb.R_K;
  Rational box = box_points(KR, P.d);
  if (box * rat(system.L) > rat(budget)) throw budget_error("product support exceeds the budget");

  const long long base_shift = -static_cast<long long>(P.d) * KR;
  std::vector<Signal> F;
  F.reserve(f.size());
  for (int j = 0; j < P.m; ++j) {
    Signal Fj(1 + P.d);
    for (long x = 0; x < system.L; ++x) {
      for_each_in_box(1, KR, P.d, [&](const std::vector<long long>& l) {
        long long y = x + base_shift;
        for (long long li : l) y += li;
        const Rational& v = f[static_cast<size_t>(j)].eval(y);
        if (v == 0) return;
        Point pt(static_cast<size_t>(1 + P.d));
        pt[0] = x;
        for (int i = 0; i < P.d; ++i) pt[static_cast<size_t>(i + 1)] = l[static_cast<size_t>(i)];
        Fj.set(pt, v);
      });
    }
    F.push_back(std::move(Fj));
  }

  // Value-multiset replication: every nonzero value of f_j must appear in F_j
  // exactly (K R_K)^d times as often. Exponent-free, so it certifies the
  // scaling identity for every p at once.
  bool multiset_ok = true;
  for (int j = 0; j < P.m && multiset_ok; ++j) {
    std::map<Rational, long long> cf, cF;
    for (const auto& v : f[static_cast<size_t>(j)].values())
      if (v != 0) ++cf[v];
    for (const auto& [pt, v] : F[static_cast<size_t>(j)].entries()) {
      (void)pt;
      ++cF[v];
    }
    if (cf.size() != cF.size()) {
      multiset_ok = false;
      break;
    }
    for (const auto& [v, cnt] : cf)
      if (!(box == rat(cF[v]) / rat(cnt))) {
        multiset_ok = false;
        break;
      }
  }

  std::vector<PowerScaling> scaling;
  for (int j = 0; j < P.m; ++j) {
    PowerScaling s;
    if (p.p[static_cast<size_t>(j)].is_integer()) {
      unsigned long pj = p.p[static_cast<size_t>(j)].as_uint();
      s.applicable = true;
      s.lhs = system.w * power_sum(F[static_cast<size_t>(j)], pj);
      s.rhs = box * power_sum(f[static_cast<size_t>(j)], pj);
      s.ok = s.lhs == s.rhs;
    }
    scaling.push_back(std::move(s));
  }

  return TransferenceBuild{K,  rb.R_K,      system, P, f, p,
                           std::move(F), multiset_ok, std::move(scaling)};
}

Rational average_value_product(const TransferenceBuild& build, long N, long x,
                               const std::vector<long long>& l) {
  const PolynomialFamily& P = build.P;
  if (static_cast<int>(l.size()) != P.d) throw domain_error("point dimension mismatch");
  Rational sum(0);
  long long box = 0;
  Point pt(static_cast<size_t>(1 + P.d));
  for_each_box_point(N, P.k, [&](const std::vector<long long>& n) {
    ++box;
    Rational prod(1);
    for (int j = 0; j < P.m && prod != 0; ++j) {
      pt[0] = x;
      for (int i = 0; i < P.d; ++i) {
        Integer e = P.at(i, j).eval(n);
        if (!e.fits_slong_p()) throw budget_error("polynomial shift exceeds 64 bits");
        pt[static_cast<size_t>(i + 1)] = l[static_cast<size_t>(i)] + e.get_si();
      }
      prod *= build.F[static_cast<size_t>(j)].eval(pt);
    }
    sum += prod;
  });
  return sum / rat(box);
}

InnerIdentityReport verify_inner_identity(const TransferenceBuild& build,
                                          const std::vector<long>& N_list,
                                          const FunctionalSpec& O, long long budget) {
  if (N_list.empty()) throw domain_error("the truncation list is empty");
  for (long N : N_list)
    if (N < 1 || N > build.K) throw domain_error("truncation index outside [K]");
  const PolynomialFamily& P = build.P;
  const long long R = build.R_K;
  const long long inner_lo = R + 1;
  const long long inner_hi = (build.K - 1) * R;
  Rational work = box_points(inner_hi - inner_lo + 1, P.d) * rat(build.system.L);
  {
    Rational per_point(0);
    for (long N : N_list) per_point += rpow(rat(N), static_cast<unsigned long>(P.k));
    work *= per_point;
  }
  if (work > rat(budget)) throw budget_error("inner box verification exceeds the budget");

  FunctionalSpec spec = O;
  spec.K = static_cast<long>(N_list.size());
  // Fail fast on functionals with no exact comparison.
  exact_functional_value(spec, std::vector<Rational>(N_list.size(), Rational(0)));

  InnerIdentityReport rep;
  rep.ok = true;
  const long long base_shift = -static_cast<long long>(P.d) * build.K * R;
  std::vector<Rational> a(N_list.size()), b(N_list.size());
  for (long x = 0; x < build.system.L; ++x) {
    for_each_in_box(inner_lo, inner_hi, P.d, [&](const std::vector<long long>& l) {
      long long y = x + base_shift;
      for (long long li : l) y += li;
      for (size_t t = 0; t < N_list.size(); ++t) {
        a[t] = average_value_product(build, N_list[t], x, l);
        b[t] = average_value_cyclic(P, build.f, N_list[t], y);
      }
      Rational va = exact_functional_value(spec, a);
      Rational vb = exact_functional_value(spec, b);
      ++rep.points_checked;
      if (va != vb) {
        rep.ok = false;
        ++rep.mismatch_count;
        if (rep.mismatches.size() < 64)
          rep.mismatches.push_back(InnerMismatch{x, l, va, vb});
      }
    });
  }
  return rep;
}

TransferStep transfer_bound_step(const TransferenceBuild& build, const FunctionalSpec& O,
                                 TransferNorm norm, long long budget) {
  const PolynomialFamily& P = build.P;
  const long K = build.K;
  const long long R = build.R_K;
  const unsigned long p0 = build.p.p0.as_uint();

  FunctionalSpec spec = O;
  spec.K = K;

  // Support of every A_N F with N <= K: the shifts move by at most R_K, so the
  // l box [1 - R_K, (K+1) R_K]^d captures everything.
  const long long lo = 1 - R;
  const long long hi = (K + 1) * R;
  Rational work = box_points(hi - lo + 1, P.d) * rat(build.system.L) * box_work(K, P.k);
  if (work > rat(budget)) throw budget_error("transfer demo exceeds the budget");

  std::vector<Rational> a(static_cast<size_t>(K));
  std::vector<Rational> product_vals;
  for (long x = 0; x < build.system.L; ++x) {
    for_each_in_box(lo, hi, P.d, [&](const std::vector<long long>& l) {
      for (long N = 1; N <= K; ++N)
        a[static_cast<size_t>(N - 1)] = average_value_product(build, N, x, l);
      product_vals.push_back(functional_power(spec, a, p0));
    });
  }

  std::vector<Rational> cyclic_vals;
  for (long x = 0; x < build.system.L; ++x) {
    for (long N = 1; N <= K; ++N)
      a[static_cast<size_t>(N - 1)] = average_value_cyclic(P, build.f, N, x);
    cyclic_vals.push_back(functional_power(spec, a, p0));
  }

  TransferStep step;
  step.K = K;
  step.R_K = R;
  Rational inner_box = box_points((K - 2) * R, P.d);
  if (norm == TransferNorm::Strong) {
    Rational s(0);
    for (const auto& u : product_vals) s += u;
    step.lhs_power = s * build.system.w;
    Rational c(0);
    for (const auto& u : cyclic_vals) c += u;
    step.cyclic_power = c * build.system.w;
  } else {
    step.lhs_power = weak_power_from_values(product_vals, build.system.w);
    step.cyclic_power = weak_power_from_values(cyclic_vals, build.system.w);
  }
  step.rhs_power = inner_box * step.cyclic_power;
  step.holds = step.lhs_power >= step.rhs_power;
  step.factor_power = rpow(rat(K, K - 2), static_cast<unsigned long>(P.d));
  step.factor_exact = exact_root(step.factor_power, p0);
  return step;
}

TransferDemo transfer_bound_demo(const SystemModel& system, const PolynomialFamily& P,
                                 const std::vector<CyclicSignal>& f, const FunctionalSpec& O,
                                 const ExponentTuple& p, const std::vector<long>& K_list,
                                 TransferNorm norm, long long budget) {
  TransferDemo demo;
  demo.norm = norm;
  demo.all_hold = true;
  for (long K : K_list) {
    TransferenceBuild build = build_transfer(system, P, f, K, p, budget);
    TransferStep step = transfer_bound_step(build, O, norm, budget);
    if (!step.holds) demo.all_hold = false;
    demo.steps.push_back(std::move(step));
  }
  return demo;
}

}  // namespace ergomax
