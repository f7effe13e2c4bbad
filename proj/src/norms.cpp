#include "ergomax/norms.hpp"

#include <algorithm>

namespace ergomax {

NormValue NormValue::from_exact(const Rational& v, std::optional<Rational> power) {
  return NormValue{v, std::move(power), HighPrec(v)};
}

namespace {

// Collects (|value|, weight) pairs; everything below works off this view so
// Signal and CyclicSignal share one implementation.
struct AbsEntries {
  std::vector<Rational> abs_vals;
  Rational weight;
};

AbsEntries view(const Signal& g) {
  AbsEntries e{{}, Rational(1)};
  e.abs_vals.reserve(g.support_size());
  for (const auto& [x, v] : g.entries()) {
    (void)x;
    e.abs_vals.push_back(rabs(v));
  }
  return e;
}

AbsEntries view(const CyclicSignal& g) {
  AbsEntries e{{}, g.weight()};
  e.abs_vals.reserve(g.values().size());
  for (const auto& v : g.values())
    if (v != 0) e.abs_vals.push_back(rabs(v));
  return e;
}

std::pair<unsigned long, unsigned long> qparts(const Rational& q) {
  if (!mpz_fits_ulong_p(mpq_numref(q.get_mpq_t())) || !mpz_fits_ulong_p(mpq_denref(q.get_mpq_t())))
    throw budget_error("exponent too large for exact power evaluation");
  return {mpz_get_ui(mpq_numref(q.get_mpq_t())), mpz_get_ui(mpq_denref(q.get_mpq_t()))};
}

NormValue lebesgue_impl(const AbsEntries& e, const Exponent& q) {
  if (q.inf) {
    Rational m(0);
    for (const auto& v : e.abs_vals)
      if (v > m) m = v;
    return NormValue::from_exact(m);
  }
  if (q.q <= 0) throw domain_error("lebesgue_norm needs q > 0");
  if (e.abs_vals.empty()) return NormValue::from_exact(Rational(0), Rational(0));

  auto [a, b] = qparts(q.q);

  // Try the fully exact pipeline: every |v|^(a/b) rational, then an exact
  // (b/a)-th root of the sum.  Falls back to HighPrec at the first failure.
  bool terms_exact = true;
  Rational sum(0);
  for (const auto& v : e.abs_vals) {
    auto root = exact_root(rpow(v, a), b);
    if (!root) {
      terms_exact = false;
      break;
    }
    sum += *root;
  }

  std::optional<Rational> pow_field;
  if (b == 1) {
    Rational psum(0);
    for (const auto& v : e.abs_vals) psum += rpow(v, a);
    psum *= e.weight;
    pow_field = psum;
  }

  if (terms_exact) {
    sum *= e.weight;
    if (auto root = exact_root(rpow(sum, b), a))
      return NormValue{*root, pow_field, HighPrec(*root)};
    HighPrec approx = HighPrec::pow_abs(HighPrec(sum), Rational(Integer(b), Integer(a)));
    return NormValue{std::nullopt, pow_field, approx};
  }

  HighPrec hsum;
  for (const auto& v : e.abs_vals) hsum = hsum + HighPrec::pow_abs(HighPrec(v), q.q);
  hsum = hsum * HighPrec(e.weight);
  HighPrec approx = HighPrec::pow_abs(hsum, Rational(1) / q.q);
  return NormValue{std::nullopt, pow_field, approx};
}

NormValue weak_impl(const AbsEntries& e, const Exponent& q) {
  if (q.inf) throw domain_error("weak_norm needs finite q");
  if (q.q <= 0) throw domain_error("weak_norm needs q > 0");
  if (e.abs_vals.empty()) return NormValue::from_exact(Rational(0), Rational(0));

  auto [a, b] = qparts(q.q);

  std::vector<Rational> levels = e.abs_vals;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // The sup over lambda of lambda * mu(|g| >= lambda)^(1/q) is attained at a
  // distinct value of |g| (superlevel sets are closed).  The argmax is found
  // by comparing lambda^a * mu^b, which orders the candidates exactly.
  Rational best_key(-1), best_lambda(0), best_mu(0);
  for (const auto& lambda : levels) {
    long long count = 0;
    for (const auto& v : e.abs_vals)
      if (v >= lambda) ++count;
    Rational mu = rat(count) * e.weight;
    Rational key = rpow(lambda, a) * rpow(mu, b);
    if (key > best_key) {
      best_key = key;
      best_lambda = lambda;
      best_mu = mu;
    }
  }

  std::optional<Rational> pow_field;
  if (b == 1) pow_field = rpow(best_lambda, a) * best_mu;

  if (auto root = exact_root(rpow(best_mu, b), a))
    return NormValue{best_lambda * *root, pow_field, HighPrec(best_lambda * *root)};
  HighPrec approx = HighPrec(best_lambda) * HighPrec::pow_abs(HighPrec(best_mu), Rational(1) / q.q);
  return NormValue{std::nullopt, pow_field, approx};
}

}  // namespace

NormValue lebesgue_norm(const Signal& g, const Exponent& q) { return lebesgue_impl(view(g), q); }
NormValue lebesgue_norm(const CyclicSignal& g, const Exponent& q) { return lebesgue_impl(view(g), q); }

NormValue weak_norm(const Signal& g, const Exponent& q) { return weak_impl(view(g), q); }
NormValue weak_norm(const CyclicSignal& g, const Exponent& q) { return weak_impl(view(g), q); }

std::vector<Point> level_set(const Signal& g, const Rational& lambda) {
  if (lambda <= 0) throw domain_error("level_set needs lambda > 0");
  std::vector<Point> out;
  for (const auto& [x, v] : g.entries())
    if (rabs(v) >= lambda) out.push_back(x);
  return out;
}

std::vector<long> level_set(const CyclicSignal& g, const Rational& lambda) {
  if (lambda <= 0) throw domain_error("level_set needs lambda > 0");
  std::vector<long> out;
  for (long i = 0; i < g.period(); ++i)
    if (rabs(g.values()[static_cast<size_t>(i)]) >= lambda) out.push_back(i);
  return out;
}

Rational power_sum(const Signal& g, unsigned long q) {
  Rational s(0);
  for (const auto& [x, v] : g.entries()) {
    (void)x;
    s += rpow(rabs(v), q);
  }
  return s;
}

Rational power_sum(const CyclicSignal& g, unsigned long q) {
  Rational s(0);
  for (const auto& v : g.values()) s += rpow(rabs(v), q);
  return s * g.weight();
}

Rational sup_abs(const Signal& g) {
  Rational m(0);
  for (const auto& [x, v] : g.entries()) {
    (void)x;
    Rational a = rabs(v);
    if (a > m) m = a;
  }
  return m;
}

Rational sup_abs(const CyclicSignal& g) {
  Rational m(0);
  for (const auto& v : g.values()) {
    Rational a = rabs(v);
    if (a > m) m = a;
  }
  return m;
}

Rational l1_norm(const Signal& g) { return power_sum(g, 1); }
Rational l1_norm(const CyclicSignal& g) { return power_sum(g, 1); }

}  // namespace ergomax
