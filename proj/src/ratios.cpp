#include "ergomax/ratios.hpp"

namespace ergomax {

namespace {

NormValue root_of_power(const Rational& pw, unsigned long a) {
  NormValue out;
  out.power = pw;
  if (auto r = exact_root(pw, a)) {
    out.exact = *r;
    out.approx = HighPrec(*r);
  } else {
    out.approx = HighPrec::pow_abs(HighPrec(pw), rat(1, static_cast<long long>(a)));
  }
  return out;
}

NormValue quotient(const NormValue& num, const NormValue& den) {
  NormValue out;
  if (num.exact && den.exact) out.exact = *num.exact / *den.exact;
  if (num.power && den.power) out.power = *num.power / *den.power;
  out.approx = out.exact ? HighPrec(*out.exact) : num.approx / den.approx;
  return out;
}

// lambda * mu^(1/p) / ||f||_p from the pieces every weak ratio shares.
template <typename Sig>
void fill_weak(RatioReport& rep, const Sig& f, const Rational& lambda, const Rational& mu,
               long long count) {
  rep.level_count = count;
  if (rep.p.inf) {
    Rational v = count == 0 ? Rational(0) : lambda / sup_abs(f);
    rep.value = NormValue::from_exact(v);
    return;
  }
  if (rep.p.is_integer()) {
    unsigned long a = rep.p.as_uint();
    rep.value = root_of_power(rpow(lambda, a) * mu / power_sum(f, a), a);
    return;
  }
  // p = a/b in lowest terms: mu^(1/p) = (mu^b)^(1/a)
  unsigned long a = static_cast<unsigned long>(rep.p.q.get_num().get_ui());
  unsigned long b = static_cast<unsigned long>(rep.p.q.get_den().get_ui());
  NormValue fp = lebesgue_norm(f, rep.p);
  auto root = exact_root(rpow(mu, b), a);
  if (root && fp.is_exact()) {
    rep.value = NormValue::from_exact(lambda * *root / fp.exact_value());
    return;
  }
  HighPrec num = HighPrec(lambda) * HighPrec::pow_abs(HighPrec(mu), rep.p.reciprocal());
  rep.value.approx = num / fp.approx;
}

}  // namespace

RatioReport weak_ratio(const CyclicSignal& f, const Rational& lambda, Op op, const Exponent& p) {
  if (lambda <= 0) throw domain_error("weak ratio needs a positive level");
  if (f.zero()) throw domain_error("weak ratio needs a nonzero signal");
  RatioReport rep;
  rep.op = op;
  rep.kind = RatioReport::Kind::Weak;
  rep.p = p;
  rep.witness = f;
  rep.lambda = lambda;
  CyclicSignal mf = maximal_cyclic(f, op);
  auto levels = level_set(mf, lambda);
  Rational mu = rat(static_cast<long long>(levels.size())) * f.weight();
  fill_weak(rep, f, lambda, mu, static_cast<long long>(levels.size()));
  return rep;
}

RatioReport weak_ratio(const Signal& f, const Rational& lambda, Op op, const Exponent& p) {
  if (lambda <= 0) throw domain_error("weak ratio needs a positive level");
  if (f.empty()) throw domain_error("weak ratio needs a nonzero signal");
  if (f.dimension() != 1) throw domain_error("maximal ratios on Z are one dimensional");
  RatioReport rep;
  rep.op = op;
  rep.kind = RatioReport::Kind::Weak;
  rep.p = p;
  rep.witness = f;
  rep.lambda = lambda;
  auto levels = maximal_level_set(f, op, lambda);
  Rational mu = rat(static_cast<long long>(levels.size()));
  fill_weak(rep, f, lambda, mu, static_cast<long long>(levels.size()));
  return rep;
}

RatioReport strong_ratio(const CyclicSignal& f, Op op, const Exponent& p) {
  if (f.zero()) throw domain_error("strong ratio needs a nonzero signal");
  RatioReport rep;
  rep.op = op;
  rep.kind = RatioReport::Kind::Strong;
  rep.p = p;
  rep.witness = f;
  CyclicSignal mf = maximal_cyclic(f, op);
  rep.value = quotient(lebesgue_norm(mf, p), lebesgue_norm(f, p));
  return rep;
}

RatioReport strong_ratio(const Signal& f, Op op, const Exponent& p, long long pad) {
  if (f.empty()) throw domain_error("strong ratio needs a nonzero signal");
  if (f.dimension() != 1) throw domain_error("maximal ratios on Z are one dimensional");
  if (pad < 1) throw domain_error("pad must be >= 1");
  RatioReport rep;
  rep.op = op;
  rep.kind = RatioReport::Kind::Strong;
  rep.p = p;
  rep.witness = f;
  rep.pad = pad;
  if (p.inf) {
    // Singleton windows give Mf(x*) = ||f||_inf at the argmax, and every
    // window average is bounded by ||f||_inf, so the ratio is exactly 1.
    rep.value = NormValue::from_exact(Rational(1));
    return rep;
  }
  if (!(p.q > 1)) throw domain_error("strong ratios on Z need p > 1");
  Point lo, hi;
  f.bounding_box(lo, hi);
  long long wlo = lo[0] - pad;
  long long whi = op == Op::OneSided ? hi[0] : hi[0] + pad;
  Signal mf = maximal_restrict(f, op, wlo, whi);
  rep.value = quotient(lebesgue_norm(mf, p), lebesgue_norm(f, p));
  rep.note = "norm of Mf restricted to the widened support window";
  if (p.is_integer()) {
    unsigned long a = p.as_uint();
    Rational sides = rat(op == Op::OneSided ? 1 : 2);
    Rational tail = sides * rpow(l1_norm(f), a) / ((rat(static_cast<long long>(a)) - 1) * rpow(rat(pad), a - 1));
    rep.tail_power_bound = tail / power_sum(f, a);
  }
  return rep;
}

bool replay_ratio(const RatioReport& report) {
  RatioReport again;
  if (std::holds_alternative<CyclicSignal>(report.witness)) {
    const auto& f = std::get<CyclicSignal>(report.witness);
    again = report.kind == RatioReport::Kind::Weak
                ? weak_ratio(f, report.lambda.value(), report.op, report.p)
                : strong_ratio(f, report.op, report.p);
  } else if (std::holds_alternative<Signal>(report.witness)) {
    const auto& f = std::get<Signal>(report.witness);
    again = report.kind == RatioReport::Kind::Weak
                ? weak_ratio(f, report.lambda.value(), report.op, report.p)
                : strong_ratio(f, report.op, report.p, report.pad.value_or(512));
  } else {
    return false;
  }
  if (report.value.power || again.value.power)
    return report.value.power && again.value.power && *report.value.power == *again.value.power;
  if (report.value.exact || again.value.exact)
    return report.value.exact && again.value.exact && *report.value.exact == *again.value.exact;
  static const Rational kTol = rat(1) / rpow(rat(2), 128);
  return HighPrec::abs_diff(report.value.approx, again.value.approx) < HighPrec(kTol);
}

}  // namespace ergomax
