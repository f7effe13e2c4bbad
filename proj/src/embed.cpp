#include "ergomax/embed.hpp"

#include <set>

namespace ergomax {

EmbedReport rokhlin_embed(const Signal& F, long long L, long M, unsigned long p) {
  if (p < 1) throw domain_error("the embedding comparison needs an integer p >= 1");
  if (L < 1) throw domain_error("the support length must be >= 1");
  if (M < 2 * L) throw domain_error("the host cycle needs M >= 2L");
  if (F.dimension() != 1) throw domain_error("the embedded signal must be one-dimensional");
  if (F.empty()) throw domain_error("the embedded signal must not vanish");
  if (!F.nonnegative()) throw domain_error("the embedding needs a nonnegative signal");
  for (const auto& [pt, v] : F.entries()) {
    (void)v;
    if (pt[0] < 1 || pt[0] > L) throw domain_error("support escapes [1, L]");
  }

  EmbedReport rep;
  rep.p = p;
  rep.build.L = L;
  rep.build.M = M;
  rep.build.F = F;
  CyclicSignal f(M);
  std::set<long> classes;
  for (long long l = 1; l <= L; ++l) {
    long r = f.mod(-l);
    classes.insert(r);
    f.set(r, F.eval({L + 1 - l}));
  }
  rep.build.f = f;
  rep.build.disjoint_ok = static_cast<long long>(classes.size()) == L;

  rep.f_norm_power = power_sum(f, p);
  rep.F_norm_power = power_sum(F, p);
  rep.norm_equal = rep.f_norm_power == rep.F_norm_power;

  CyclicSignal Mf = maximal_cyclic(f, Op::OneSided);
  MaximalEvaluator evF(F, Op::OneSided);
  std::vector<Rational> MF = evF.profile(1, L);

  rep.dominates_pointwise = true;
  Rational restricted(0);
  for (long long l = 1; l <= L; ++l) {
    const Rational& zval = MF[static_cast<size_t>(L - l)];  // M F(L + 1 - l)
    restricted += rpow(zval, p);
    if (Mf.eval(-l) < zval) rep.dominates_pointwise = false;
  }
  rep.host_ratio_power = power_sum(Mf, p) / rep.f_norm_power;
  rep.restricted_ratio_power = restricted / rep.F_norm_power;
  rep.ratio_no_decrease = rep.host_ratio_power >= rep.restricted_ratio_power;
  return rep;
}

}  // namespace ergomax
