#include "ergomax/search.hpp"

#include <cmath>
#include <optional>
#include <random>

namespace ergomax {

namespace {

constexpr long long kScale = 4096;

void check_config(const SearchConfig& cfg) {
  if (cfg.budget < 1) throw domain_error("search budget must be >= 1");
  if (cfg.restarts < 1) throw domain_error("search needs at least one restart");
  if (cfg.grid_den < 1) throw domain_error("grid denominator must be >= 1");
}

}  // namespace

bool ratio_improves(const RatioReport& cand, const RatioReport& best) {
  const NormValue& a = cand.value;
  const NormValue& b = best.value;
  if (a.power && b.power) return *a.power > *b.power;
  if (a.exact && b.exact) return *a.exact > *b.exact;
  return a.approx > b.approx;
}

Signal staircase_signal(long long step, long long radius) {
  if (step < 1 || radius < 0) throw domain_error("staircase needs step >= 1, radius >= 0");
  Signal f(1);
  const long long target = kScale * kScale;
  for (long long l = -radius; l <= radius; ++l) {
    long long k = 1 + (l < 0 ? -l : l) / step;
    // n = floor(kScale / sqrt(k)), then round half up
    long long n = static_cast<long long>(std::sqrt(static_cast<double>(target / k)));
    while ((n + 1) * (n + 1) * k <= target) ++n;
    while (n > 0 && n * n * k > target) --n;
    if (4 * target >= (2 * n + 1) * (2 * n + 1) * k) ++n;
    f.set({l}, rat(n, kScale));
  }
  return f;
}

SearchReport strong_ratio_search_cyclic(Op op, long L, const Exponent& p,
                                        const SearchConfig& cfg) {
  check_config(cfg);
  if (L < 1) throw domain_error("cyclic period must be >= 1");
  SearchReport rep;
  if (p.inf) {
    CyclicSignal d0(L);
    d0.set(0, Rational(1));
    rep.best = strong_ratio(d0, op, p);
    rep.evaluations = 1;
    rep.strategy = "sup-delta";
    return rep;
  }
  rep.strategy = "cyclic-coordinate-ascent";
  const long top = L * cfg.grid_den;
  std::vector<long> num(static_cast<size_t>(L));
  auto build = [&]() {
    CyclicSignal f(L);
    for (long i = 0; i < L; ++i) f.set(i, rat(num[i], cfg.grid_den));
    return f;
  };
  auto evaluate = [&](std::optional<RatioReport>& out) {
    if (rep.evaluations >= cfg.budget) {
      rep.budget_exhausted = true;
      return false;
    }
    out = strong_ratio(build(), op, p);
    ++rep.evaluations;
    return true;
  };
  bool have_global = false;
  for (int r = 0; r < cfg.restarts && !rep.budget_exhausted; ++r) {
    std::mt19937_64 rng(cfg.seed + static_cast<unsigned long long>(r));
    bool all_zero = true;
    for (long i = 0; i < L; ++i) {
      num[i] = static_cast<long>(rng() % static_cast<unsigned long long>(top + 1));
      if (num[i] != 0) all_zero = false;
    }
    if (all_zero) num[0] = cfg.grid_den;
    std::optional<RatioReport> cur;
    if (!evaluate(cur)) break;
    bool improved = true;
    while (improved && !rep.budget_exhausted) {
      improved = false;
      for (long i = 0; i < L && !rep.budget_exhausted; ++i) {
        const long keep = num[i];
        long best_g = keep;
        for (long g = 0; g <= top; ++g) {
          if (g == keep) continue;
          num[i] = g;
          bool zero = true;
          for (long j = 0; j < L; ++j)
            if (num[j] != 0) {
              zero = false;
              break;
            }
          if (zero) continue;
          std::optional<RatioReport> cand;
          if (!evaluate(cand)) break;
          if (ratio_improves(*cand, *cur)) {
            cur = std::move(cand);
            best_g = g;
          }
        }
        num[i] = best_g;
        if (best_g != keep) improved = true;
      }
    }
    if (!have_global || ratio_improves(*cur, rep.best)) {
      rep.best = std::move(*cur);
      have_global = true;
    }
  }
  return rep;
}

SearchReport strong_ratio_search_z(Op op, const Exponent& p, const SearchConfig& cfg) {
  check_config(cfg);
  SearchReport rep;
  if (p.inf) {
    rep.best = strong_ratio(delta({0}), op, p, cfg.pad);
    rep.evaluations = 1;
    rep.strategy = "sup-delta";
    return rep;
  }
  rep.strategy = "z-staircase-sweep";
  const std::pair<long long, long long> schedule[] = {{8, 128}, {8, 256}, {8, 512}};
  bool have = false;
  for (auto [step, radius] : schedule) {
    if (rep.evaluations >= cfg.budget) {
      rep.budget_exhausted = true;
      break;
    }
    RatioReport r = strong_ratio(staircase_signal(step, radius), op, p, cfg.pad);
    ++rep.evaluations;
    if (!have || ratio_improves(r, rep.best)) {
      rep.best = std::move(r);
      have = true;
    }
  }
  return rep;
}

}  // namespace ergomax
