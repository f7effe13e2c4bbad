#include "ergomax/functional.hpp"

namespace ergomax {

namespace {

void check_length(const FunctionalSpec& spec, const std::vector<Rational>& a) {
  if (static_cast<long>(a.size()) != spec.K)
    throw domain_error("sequence length does not match the truncation K");
}

}  // namespace

Rational variation_power(unsigned long r, const std::vector<Rational>& a) {
  if (r < 1) throw domain_error("variation order must be >= 1");
  size_t K = a.size();
  if (K == 0) throw domain_error("variation of an empty sequence");
  // best[j]: largest r-th power sum over increasing subsequences ending at j.
  std::vector<Rational> best(K, Rational(0));
  Rational answer(0);
  for (size_t j = 1; j < K; ++j) {
    for (size_t i = 0; i < j; ++i) {
      Rational cand = best[i] + rpow(rabs(a[j] - a[i]), r);
      if (cand > best[j]) best[j] = cand;
    }
    if (best[j] > answer) answer = best[j];
  }
  return answer;
}

Rational variation_bruteforce(unsigned long r, const std::vector<Rational>& a) {
  size_t K = a.size();
  if (K == 0) throw domain_error("variation of an empty sequence");
  if (K > 20) throw budget_error("variation_bruteforce is capped at K = 20");
  Rational answer(0);
  for (unsigned long mask = 0; mask < (1ul << K); ++mask) {
    Rational sum(0);
    bool have_prev = false;
    Rational prev;
    for (size_t j = 0; j < K; ++j) {
      if (!(mask & (1ul << j))) continue;
      if (have_prev) sum += rpow(rabs(a[j] - prev), r);
      prev = a[j];
      have_prev = true;
    }
    if (sum > answer) answer = sum;
  }
  return answer;
}

NormValue functional_apply(const FunctionalSpec& spec, const std::vector<Rational>& a) {
  check_length(spec, a);
  if (spec.kind == FunctionalSpec::Kind::Max) {
    Rational m(0);
    for (const auto& v : a) {
      Rational av = rabs(v);
      if (av > m) m = av;
    }
    return NormValue::from_exact(m);
  }
  if (is_integer(spec.r)) {
    unsigned long r = static_cast<unsigned long>(spec.r.get_num().get_ui());
    Rational power = variation_power(r, a);
    std::optional<Rational> pow_field = power;
    if (auto root = exact_root(power, r)) return NormValue{*root, pow_field, HighPrec(*root)};
    return NormValue{std::nullopt, pow_field,
                     HighPrec::pow_abs(HighPrec(power), Rational(1) / spec.r)};
  }
  // Non-integer r: the DP runs in HighPrec; used nowhere exactness matters.
  size_t K = a.size();
  std::vector<HighPrec> best(K);
  HighPrec answer;
  for (size_t j = 1; j < K; ++j) {
    for (size_t i = 0; i < j; ++i) {
      HighPrec cand = best[i] + HighPrec::pow_abs(HighPrec(a[j] - a[i]), spec.r);
      if (cand > best[j]) best[j] = cand;
    }
    if (best[j] > answer) answer = best[j];
  }
  return NormValue{std::nullopt, std::nullopt,
                   HighPrec::pow_abs(answer, Rational(1) / spec.r)};
}

Rational functional_power(const FunctionalSpec& spec, const std::vector<Rational>& a,
                          unsigned long p0) {
  check_length(spec, a);
  if (p0 < 1) throw domain_error("functional_power needs integer p0 >= 1");
  if (spec.kind == FunctionalSpec::Kind::Max) {
    Rational m(0);
    for (const auto& v : a) {
      Rational av = rabs(v);
      if (av > m) m = av;
    }
    return rpow(m, p0);
  }
  if (!is_integer(spec.r) || spec.r != rat(static_cast<long long>(p0)))
    throw domain_error("variation powers are exact only when p0 equals the integer order r");
  return variation_power(p0, a);
}

}  // namespace ergomax
