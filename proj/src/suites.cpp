#include "ergomax/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ergomax/amplify.hpp"
#include "ergomax/covering.hpp"
#include "ergomax/cyclic_constants.hpp"
#include "ergomax/embed.hpp"
#include "ergomax/references.hpp"
#include "ergomax/roots.hpp"
#include "ergomax/search.hpp"
#include "ergomax/stepfun.hpp"
#include "ergomax/transference.hpp"

namespace ergomax {

namespace {

using Rng = std::mt19937_64;

long long pick(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

Rational rnd_rat(Rng& rng, long long max_num, long long max_den, bool nonneg) {
  long long num = pick(rng, nonneg ? 0 : -max_num, max_num);
  return rat(num, pick(rng, 1, max_den));
}

Signal rnd_signal(Rng& rng, int support, long long span, bool nonneg) {
  Signal f(1);
  for (int i = 0; i < support; ++i) f.set({pick(rng, -span, span)}, rnd_rat(rng, 10, 4, nonneg));
  return f;
}

CyclicSignal rnd_cyclic(Rng& rng, long L, bool nonneg) {
  CyclicSignal f(L);
  for (long i = 0; i < L; ++i) f.set(i, rnd_rat(rng, 10, 4, nonneg));
  return f;
}

struct CaseLog {
  SuiteCase c;
  int reported = 0;

  explicit CaseLog(std::string name) { c.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++c.checks;
    if (ok) return;
    c.passed = false;
    if (reported < 4) {
      if (!c.detail.empty()) c.detail += "; ";
      c.detail += what;
    }
    ++reported;
  }
};

// ---- norms ----------------------------------------------------------------

SuiteResult suite_norms(const SuiteConfig& cfg) {
  SuiteResult out{"norms", {}};
  Rng rng(cfg.seed * 2654435761ULL + 1);

  CaseLog cheb("chebyshev-q1");
  CaseLog attain("weak-attainment");
  CaseLog homog("homogeneity");
  CaseLog mono("level-monotone");
  for (long t = 0; t < cfg.trials; ++t) {
    CyclicSignal g = rnd_cyclic(rng, pick(rng, 1, 7), false);
    Signal h = rnd_signal(rng, static_cast<int>(pick(rng, 1, 8)), 12, false);

    cheb.check(weak_norm(g, Exponent::of(1)).exact_value() <= l1_norm(g), "cyclic q=1");
    cheb.check(weak_norm(h, Exponent::of(1)).exact_value() <= l1_norm(h), "Z q=1");

    // the sup over lambda is attained at a value of |g|, exact at q in {1,2}
    for (unsigned long q : {1ul, 2ul}) {
      NormValue w = weak_norm(g, Exponent::of(rat(static_cast<long long>(q))));
      Rational best(0);
      for (const auto& v : g.values()) {
        Rational lam = rabs(v);
        if (lam == 0) continue;
        Rational mu = rat(static_cast<long long>(level_set(g, lam).size())) * g.weight();
        Rational key = rpow(lam, q) * mu;
        if (key > best) best = key;
      }
      attain.check(w.power.has_value() && *w.power == best, "cyclic q=" + std::to_string(q));
    }

    Rational cscale = rnd_rat(rng, 5, 3, false);
    homog.check(lebesgue_norm(h.scaled(cscale), Exponent::of(1)).exact_value() ==
                    rabs(cscale) * lebesgue_norm(h, Exponent::of(1)).exact_value(),
                "q=1 scale");
    homog.check(lebesgue_norm(h.scaled(cscale), Exponent::infinity()).exact_value() ==
                    rabs(cscale) * lebesgue_norm(h, Exponent::infinity()).exact_value(),
                "q=inf scale");

    Rational l1 = rnd_rat(rng, 8, 3, true) + rat(1, 7);
    Rational l2 = l1 + rnd_rat(rng, 4, 3, true);
    auto s2 = level_set(h, l2);
    auto s1 = level_set(h, l1);
    mono.check(std::includes(s1.begin(), s1.end(), s2.begin(), s2.end()), "inclusion");
  }
  out.cases = {cheb.c, attain.c, homog.c, mono.c};
  return out;
}

// ---- functionals ----------------------------------------------------------

SuiteResult suite_functionals(const SuiteConfig& cfg) {
  SuiteResult out{"functionals", {}};
  Rng rng(cfg.seed * 2654435761ULL + 2);

  CaseLog trunc("truncation-monotone");
  CaseLog conv("convergence-beyond-k0");
  CaseLog oracle("variation-oracle");
  for (long t = 0; t < cfg.trials; ++t) {
    size_t len = static_cast<size_t>(pick(rng, 2, 9));
    std::vector<Rational> a;
    for (size_t i = 0; i < len; ++i) a.push_back(rnd_rat(rng, 6, 3, false));
    std::vector<Rational> head(a.begin(), a.end() - 1);

    long K = static_cast<long>(len);
    NormValue m0 = functional_apply(FunctionalSpec::max(K - 1), head);
    NormValue m1 = functional_apply(FunctionalSpec::max(K), a);
    trunc.check(m0.exact_value() <= m1.exact_value(), "max");
    for (unsigned long r : {1ul, 2ul, 3ul})
      trunc.check(variation_power(r, head) <= variation_power(r, a), "variation r=" + std::to_string(r));

    // constant tail: truncations stabilize at the tail start
    std::vector<Rational> b = a;
    for (int ext = 0; ext < 3; ++ext) b.push_back(a.back());
    conv.check(functional_apply(FunctionalSpec::max(static_cast<long>(b.size())), b).exact_value() ==
                   m1.exact_value(),
               "max tail");
    for (unsigned long r : {1ul, 2ul, 3ul})
      conv.check(variation_power(r, b) == variation_power(r, a), "variation tail r=" + std::to_string(r));

    if (len <= 8)
      for (unsigned long r : {1ul, 2ul, 3ul})
        oracle.check(variation_power(r, a) == variation_bruteforce(r, a),
                     "r=" + std::to_string(r));
  }
  out.cases = {trunc.c, conv.c, oracle.c};
  return out;
}

// ---- operators ------------------------------------------------------------

CyclicSignal cyclic_sum(const CyclicSignal& f, const CyclicSignal& g) {
  CyclicSignal out(f.period(), f.weight());
  for (long i = 0; i < f.period(); ++i) out.set(i, f.eval(i) + g.eval(i));
  return out;
}

Signal brute_average_z(const PolynomialFamily& P, const std::vector<Signal>& f, long N) {
  std::vector<std::vector<long long>> shifts;
  for_each_box_point(N, P.k, [&](const std::vector<long long>& n) {
    std::vector<long long> row(static_cast<size_t>(P.m));
    for (int j = 0; j < P.m; ++j) row[static_cast<size_t>(j)] = P.at(0, j).eval(n).get_si();
    shifts.push_back(row);
  });
  long long smax = 0;
  for (const auto& row : shifts)
    for (long long s : row) smax = std::max(smax, s < 0 ? -s : s);
  Point lo, hi;
  long long xlo = 0, xhi = -1;
  for (const auto& fj : f) {
    if (fj.empty()) continue;
    fj.bounding_box(lo, hi);
    if (xlo > xhi) {
      xlo = lo[0];
      xhi = hi[0];
    } else {
      xlo = std::min(xlo, lo[0]);
      xhi = std::max(xhi, hi[0]);
    }
  }
  Signal out(1);
  for (long long x = xlo - smax; x <= xhi + smax; ++x) {
    Rational sum(0);
    for (const auto& row : shifts) {
      Rational prod(1);
      for (int j = 0; j < P.m; ++j) prod *= f[static_cast<size_t>(j)].eval({x + row[static_cast<size_t>(j)]});
      sum += prod;
    }
    out.set({x}, sum / rat(static_cast<long long>(shifts.size())));
  }
  return out;
}

SuiteResult suite_operators(const SuiteConfig& cfg) {
  SuiteResult out{"operators", {}};
  Rng rng(cfg.seed * 2654435761ULL + 3);

  CaseLog dom("pointwise-domination");
  CaseLog sub("sublinearity");
  CaseLog shift("shift-commute");
  CaseLog brute("average-bruteforce");
  CaseLog dbl("nmax-doubling");
  for (long t = 0; t < cfg.trials; ++t) {
    long L = pick(rng, 1, 7);
    CyclicSignal f = rnd_cyclic(rng, L, false);
    for (Op op : {Op::OneSided, Op::Centered, Op::Uncentered}) {
      CyclicSignal Mf = maximal_cyclic(f, op);
      for (long i = 0; i < L; ++i)
        dom.check(Mf.eval(i) >= rabs(f.eval(i)), std::string("cyclic ") + op_name(op));

      CyclicSignal g = rnd_cyclic(rng, L, false);
      CyclicSignal Mg = maximal_cyclic(g, op);
      CyclicSignal Mfg = maximal_cyclic(cyclic_sum(f, g), op);
      for (long i = 0; i < L; ++i)
        sub.check(Mfg.eval(i) <= Mf.eval(i) + Mg.eval(i), std::string("cyclic ") + op_name(op));

      long s = pick(rng, -2 * L, 2 * L);
      CyclicSignal Mrot = maximal_cyclic(f.rotated(s), op);
      for (long i = 0; i < L; ++i)
        shift.check(Mrot.eval(i) == Mf.eval(i + s), std::string("cyclic ") + op_name(op));

      if (op != Op::OneSided && t % 8 == 0)
        dbl.check(maximal_cyclic(f, op, 4 * L) == Mf, std::string("cyclic ") + op_name(op));
    }

    if (t % 4 == 0) {
      Signal h = rnd_signal(rng, static_cast<int>(pick(rng, 1, 6)), 8, false);
      long long s = pick(rng, -5, 5);
      Signal hs = h.shifted({s});
      for (Op op : {Op::OneSided, Op::Centered, Op::Uncentered}) {
        long long x = pick(rng, -10, 10);
        dom.check(maximal_value(h, op, x) >= rabs(h.eval({x})), std::string("Z ") + op_name(op));
        shift.check(maximal_value(hs, op, x + s) == maximal_value(h, op, x),
                    std::string("Z ") + op_name(op));
      }
    }
  }

  SystemModel zd = SystemModel::canonical(1);
  for (long t = 0; t < std::max(4L, cfg.trials / 12); ++t) {
    long N = pick(rng, 1, 4);
    int which = static_cast<int>(pick(rng, 0, 3));
    PolynomialFamily P = PolynomialFamily::linear1();
    std::vector<Signal> fs;
    if (which == 0) {
      fs = {rnd_signal(rng, 5, 8, false)};
    } else if (which == 1) {
      P = PolynomialFamily::power1(2);
      fs = {rnd_signal(rng, 5, 8, false)};
    } else if (which == 2) {
      P = PolynomialFamily(1, 2, 1);
      P.at(0, 0) = Polynomial::variable();
      P.at(0, 1) = Polynomial::monomial_power(2);
      fs = {rnd_signal(rng, 4, 6, false), rnd_signal(rng, 4, 6, false)};
    } else {
      P = PolynomialFamily(1, 1, 2);
      P.at(0, 0) = Polynomial::variable(2, 0);
      P.at(0, 0).add_term({0, 2}, Integer(1));
      fs = {rnd_signal(rng, 4, 6, false)};
    }
    bool any = false;
    for (const auto& fj : fs) any = any || !fj.empty();
    if (!any) continue;
    brute.check(average_op(zd, P, fs, N) == brute_average_z(P, fs, N),
                "family " + std::to_string(which) + " N=" + std::to_string(N));
  }

  out.cases = {dom.c, sub.c, shift.c, brute.c, dbl.c};
  return out;
}

// ---- covering -------------------------------------------------------------

SuiteResult suite_covering(const SuiteConfig& cfg) {
  SuiteResult out{"covering", {}};
  Rng rng(cfg.seed * 2654435761ULL + 4);

  CaseLog sound("certificate-soundness");
  for (long t = 0; t < cfg.trials; ++t) {
    Signal f = rnd_signal(rng, static_cast<int>(pick(rng, 1, 12)), 15, true);
    if (f.empty()) f.set({0}, rat(1));
    Rational lambda = rnd_rat(rng, 6, 5, true) + rat(1, pick(rng, 1, 9));
    CoveringCertificate cert = one_sided_covering_certificate(f, lambda);
    sound.check(cert.valid, "builder");
    sound.check(validate_covering(f, cert), "validator");
    sound.check(lambda * rat(static_cast<long long>(cert.level.size())) <= l1_norm(f),
                "weak bound");
    auto level = maximal_level_set(f, Op::OneSided, lambda);
    sound.check(level == cert.level, "level set agreement");
  }

  CaseLog sharp("delta-witness-sharp");
  for (long M = 0; M <= 20; ++M) {
    Signal d0 = delta({0});
    Rational lambda = rat(1, M + 1);
    auto level = maximal_level_set(d0, Op::OneSided, lambda);
    sharp.check(static_cast<long>(level.size()) == M + 1, "level size M=" + std::to_string(M));
    sharp.check(lambda * rat(static_cast<long long>(level.size())) == l1_norm(d0),
                "ratio one M=" + std::to_string(M));
  }
  out.cases = {sound.c, sharp.c};
  return out;
}

// ---- lp ---------------------------------------------------------------

SuiteResult suite_lp(const SuiteConfig& cfg) {
  SuiteResult out{"lp", {}};
  Rng rng(cfg.seed * 2654435761ULL + 5);

  CaseLog kkt("kkt-certificates");
  CaseLog vertex("vertex-oracle");
  for (long t = 0; t < cfg.trials; ++t) {
    int rows = static_cast<int>(pick(rng, 1, 3));
    int cols = static_cast<int>(pick(rng, 1, 3));
    bool boxed = t % 2 == 0;
    LpProblem prob;
    prob.A.assign(static_cast<size_t>(rows), std::vector<Rational>(static_cast<size_t>(cols)));
    for (auto& row : prob.A)
      for (auto& a : row) a = rat(pick(rng, -3, 3));
    for (int i = 0; i < rows; ++i) prob.b.push_back(rat(pick(rng, -3, 3)));
    for (int j = 0; j < cols; ++j)
      prob.c.push_back(boxed ? rat(pick(rng, -2, 2)) : rat(pick(rng, 0, 3)));
    if (boxed)
      for (int j = 0; j < cols; ++j) prob.upper.push_back(rat(pick(rng, 1, 4)));

    LpSolution sol = lp_solve(prob);
    if (sol.status == LpStatus::Optimal) {
      kkt.check(sol.cert.ok(), "optimal certificate");
      kkt.check(lp_validate(prob, sol).ok(), "revalidation");
    } else if (sol.status == LpStatus::Infeasible) {
      kkt.check(sol.farkas_checked, "farkas flag");
      kkt.check(lp_check_farkas(prob, sol.farkas), "farkas recheck");
    } else {
      kkt.check(!boxed, "boxed problems cannot be unbounded");
    }

    if (boxed) {
      VertexScan scan = vertex_enumerate_min(prob);
      vertex.check(scan.found == (sol.status == LpStatus::Optimal), "feasibility agreement");
      if (scan.found && sol.status == LpStatus::Optimal)
        vertex.check(scan.value == sol.objective, "objective agreement");
    }
  }
  out.cases = {kkt.c, vertex.c};
  return out;
}

// ---- constants --------------------------------------------------------

SuiteResult suite_constants(const SuiteConfig& cfg) {
  SuiteResult out{"constants", {}};
  long L_hi = std::max(1L, cfg.L_cap);

  CaseLog formula("uncentered-formula-vs-search");
  CaseLog replay("report-replay");
  CaseLog guard("nmax-doubling-guard");
  CaseLog dich("dichotomy-strict");
  CaseLog root("cp-root-bracket");

  for (long L = 1; L <= L_hi; ++L) {
    ConstantReport r = weak_constant_cyclic(Op::Uncentered, L);
    formula.check(r.constant == uncentered_weak_formula(L),
                  "L=" + std::to_string(L) + ": search " + rat_str(r.constant) + " vs formula " +
                      rat_str(uncentered_weak_formula(L)));
    formula.check(verify_formula_extremizer(L), "extremizer L=" + std::to_string(L));
    replay.check(verify_constant_report(r), "u L=" + std::to_string(L));
    if (L <= 4) {
      ConstantReport c = weak_constant_cyclic(Op::Centered, L);
      replay.check(verify_constant_report(c), "c L=" + std::to_string(L));
      dich.check(cmp_melas(c.constant) < 0, "centered L=" + std::to_string(L));
      dich.check(r.constant < rat(2), "uncentered L=" + std::to_string(L));
      ConstantReport os = weak_constant_cyclic(Op::OneSided, L);
      dich.check(os.constant == rat(1), "one-sided L=" + std::to_string(L));
      guard.check(weak_constant_cyclic(Op::Centered, L, 2 * default_nmax(Op::Centered, L), false)
                          .constant == c.constant,
                  "c L=" + std::to_string(L));
      if (L <= 3)
        guard.check(
            weak_constant_cyclic(Op::Uncentered, L, 2 * default_nmax(Op::Uncentered, L), false)
                    .constant == r.constant,
            "u L=" + std::to_string(L));
    }
  }

  for (const char* ps : {"3/2", "2", "3"}) {
    Exponent p = parse_exponent(ps);
    RootBracket b = cp_root(p, rat(1, 1000000));
    if (b.exact) {
      root.check(phi_exact(p, *b.exact) == Rational(0), std::string(ps) + " exact root");
    } else {
      root.check(phi_sign(p, b.lo) < 0, std::string(ps) + " lo sign");
      root.check(phi_sign(p, b.hi) > 0, std::string(ps) + " hi sign");
      root.check(b.hi - b.lo <= rat(1, 1000000), std::string(ps) + " width");
    }
  }
  root.check(cp_root(parse_exponent("3/2"), rat(1, 1000000)).exact == rat(4), "c_{3/2} = 4");

  out.cases = {formula.c, replay.c, guard.c, dich.c, root.c};
  return out;
}

// ---- search -----------------------------------------------------------

SuiteResult suite_search(const SuiteConfig& cfg) {
  SuiteResult out{"search", {}};

  CaseLog det("determinism");
  SearchConfig sc;
  sc.budget = 400;
  sc.seed = cfg.seed;
  sc.restarts = 2;
  SearchReport a = strong_ratio_search_cyclic(Op::Uncentered, 3, Exponent::of(2), sc);
  SearchReport b = strong_ratio_search_cyclic(Op::Uncentered, 3, Exponent::of(2), sc);
  det.check(a.best.value.power == b.best.value.power, "cyclic value");
  det.check(a.evaluations == b.evaluations, "cyclic evaluations");

  CaseLog inf("p-infinity");
  SearchReport zi = strong_ratio_search_z(Op::OneSided, Exponent::infinity());
  inf.check(zi.best.value.exact == rat(1), "Z sup ratio");
  SearchReport ci = strong_ratio_search_cyclic(Op::Centered, 4, Exponent::infinity(), sc);
  inf.check(ci.best.value.exact == rat(1), "cyclic sup ratio");

  CaseLog mono("cyclic-below-z");
  SearchConfig zc;
  zc.budget = 4000;
  SearchReport zs = strong_ratio_search_z(Op::Uncentered, Exponent::of(2), zc);
  mono.check(a.best.value.power.has_value() && zs.best.value.power.has_value() &&
                 *a.best.value.power <= *zs.best.value.power,
             "u p=2");

  out.cases = {det.c, inf.c, mono.c};
  return out;
}

// ---- transference -----------------------------------------------------

SuiteResult suite_transference(const SuiteConfig& cfg) {
  SuiteResult out{"transference", {}};
  Rng rng(cfg.seed * 2654435761ULL + 6);

  CaseLog inner("inner-identity");
  CaseLog scaling("norm-scaling");
  CaseLog bound("transfer-inequality");
  CaseLog rk("radius-minimality");

  for (long t = 0; t < std::max(2L, cfg.trials / 30); ++t) {
    long L = pick(rng, 2, 3);
    CyclicSignal f = rnd_cyclic(rng, L, true);
    if (f.zero()) f.set(0, rat(1));
    PolynomialFamily P = t % 2 == 0 ? PolynomialFamily::linear1() : PolynomialFamily::power1(2);
    long K = 3 + t % 2;
    SystemModel sys = SystemModel::cyclic(L);

    TransferenceBuild build = build_transfer(sys, P, {f}, K, ExponentTuple::diagonal(Exponent::of(1)));
    scaling.check(build.multiset_ok, "multiset");
    scaling.check(build.scaling_ok(), "power form");

    std::vector<long> Ns = {1, 2, 3};
    InnerIdentityReport rep = verify_inner_identity(build, Ns, FunctionalSpec::max(3));
    inner.check(rep.ok && rep.mismatch_count == 0, "max K=" + std::to_string(K));

    TransferenceBuild b2 = build_transfer(sys, P, {f}, K, ExponentTuple::diagonal(Exponent::of(2)));
    InnerIdentityReport rep2 = verify_inner_identity(b2, Ns, FunctionalSpec::variation(rat(2), 3));
    inner.check(rep2.ok && rep2.mismatch_count == 0, "variation K=" + std::to_string(K));

    for (TransferNorm norm : {TransferNorm::Strong, TransferNorm::Weak}) {
      TransferDemo demo = transfer_bound_demo(sys, P, {f}, FunctionalSpec::max(3),
                                              ExponentTuple::diagonal(Exponent::of(1)), {3, 4}, norm);
      bound.check(demo.all_hold, "max all hold");
      bound.check(demo.steps.size() == 2 && demo.steps[0].factor_exact == rat(3) &&
                      demo.steps[1].factor_exact == rat(2),
                  "factor K/(K-2)");
    }
  }

  for (long K : {2L, 3L, 5L}) {
    for (int which = 0; which < 3; ++which) {
      PolynomialFamily P = PolynomialFamily::linear1();
      if (which == 1) P = PolynomialFamily::power1(2);
      if (which == 2) {
        P = PolynomialFamily(1, 1, 2);
        P.at(0, 0) = Polynomial::variable(2, 0);
        P.at(0, 0).add_term({1, 1}, Integer(1));
        P.at(0, 0).add_term({0, 0}, Integer(-2));
      }
      RadiusBound rb = compute_RK(P, K);
      Integer attained = P.at(rb.wi, rb.wj).eval(rb.witness);
      rk.check(::abs(attained) == rb.max_abs, "witness attains");
      rk.check(rb.R_K == std::max(1LL, static_cast<long long>(rb.max_abs.get_si())), "floor at one");
      bool in_box = static_cast<long>(rb.witness.size()) == static_cast<long>(P.k);
      for (long long w : rb.witness) in_box = in_box && w >= -K && w <= K;
      rk.check(in_box, "witness in box");
    }
  }

  out.cases = {inner.c, scaling.c, bound.c, rk.c};
  return out;
}

// ---- embedding --------------------------------------------------------

SuiteResult suite_embedding(const SuiteConfig& cfg) {
  SuiteResult out{"embedding", {}};
  Rng rng(cfg.seed * 2654435761ULL + 7);

  CaseLog iso("isometry-no-decrease");
  for (long t = 0; t < cfg.trials; ++t) {
    long long L = pick(rng, 1, 8);
    Signal F(1);
    for (long long l = 1; l <= L; ++l)
      if (pick(rng, 0, 2) > 0) F.set({l}, rnd_rat(rng, 8, 4, true));
    if (F.empty()) F.set({pick(rng, 1, L)}, rat(1));
    long M = static_cast<long>(2 * L + pick(rng, 0, 8));
    unsigned long p = static_cast<unsigned long>(pick(rng, 1, 3));
    EmbedReport rep = rokhlin_embed(F, L, M, p);
    iso.check(rep.ok(), "L=" + std::to_string(L) + " M=" + std::to_string(M));
    iso.check(rep.f_norm_power == rep.F_norm_power, "norm power");
  }

  CaseLog amp("amplification-margin");
  {
    CyclicSignal f({rat(1), rat(0)});
    AmplifyReport rep = amplify(f, 2, 64, rat(1, 40));
    amp.check(rep.precondition_ok, "precondition");
    amp.check(rep.holds && rep.margin > 0, "strict margin");
    amp.check(rep.left_tail_ok && rep.hoelder_ok, "tail ledger");
    amp.check(rep.rho_power == rat(233, 178), "searched reference");

    CyclicSignal g({rat(13), rat(3)});
    AmplifyReport arep = amplify(g, 2, 64, rat(1, 100));
    amp.check(arep.amplifying, "bracket above one");
    amp.check(arep.holds && arep.margin > 0, "amplifying margin");
  }
  out.cases = {iso.c, amp.c};
  return out;
}

// ---- stepfun ----------------------------------------------------------

SuiteResult suite_stepfun(const SuiteConfig& cfg) {
  SuiteResult out{"stepfun", {}};
  Rng rng(cfg.seed * 2654435761ULL + 8);

  CaseLog dom("continuous-domination");
  CaseLog add("integral-additivity");
  for (long t = 0; t < cfg.trials; ++t) {
    Signal f = rnd_signal(rng, static_cast<int>(pick(rng, 1, 10)), 12, true);
    if (f.empty()) f.set({0}, rat(1));
    std::vector<Rational> xs;
    for (int i = 0; i < 3; ++i) xs.push_back(rat(pick(rng, -14, 14)) + rnd_rat(rng, 1, 5, true));
    StepDominationReport rep = step_extension_dominates(f, xs);
    dom.check(rep.ok, "samples");

    StepFunction sf = step_extension(f);
    Rational a = rat(pick(rng, -20, 20), pick(rng, 1, 3));
    Rational b = a + rabs(rnd_rat(rng, 10, 3, false));
    Rational m = (a + b) / 2;
    add.check(sf.integral(a, m) + sf.integral(m, b) == sf.integral(a, b), "split");
  }
  out.cases = {dom.c, add.c};
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "norms",     "functionals",  "operators", "covering", "lp",
      "constants", "search",       "transference", "embedding", "stepfun"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "norms") return suite_norms(cfg);
  if (name == "functionals") return suite_functionals(cfg);
  if (name == "operators") return suite_operators(cfg);
  if (name == "covering") return suite_covering(cfg);
  if (name == "lp") return suite_lp(cfg);
  if (name == "constants") return suite_constants(cfg);
  if (name == "search") return suite_search(cfg);
  if (name == "transference") return suite_transference(cfg);
  if (name == "embedding") return suite_embedding(cfg);
  if (name == "stepfun") return suite_stepfun(cfg);
  throw domain_error("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const SuiteConfig& cfg) {
  std::vector<SuiteResult> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(run_suite(n, cfg));
  return out;
}

}  // namespace ergomax
