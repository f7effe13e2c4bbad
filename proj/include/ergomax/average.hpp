#pragma once

#include <functional>
#include <vector>

#include "ergomax/polynomial.hpp"
#include "ergomax/signal.hpp"

namespace ergomax {

// The host system acted on by the averages: either Z^d with its d coordinate
// shifts, or a cyclic system where every generator is the +1 rotation.
struct SystemModel {
  enum class Kind { CanonicalZd, Cyclic };

  Kind kind = Kind::CanonicalZd;
  int d = 1;       // CanonicalZd
  long L = 1;      // Cyclic
  Rational w = Rational(1);

  static SystemModel canonical(int d) {
    if (d < 1) throw domain_error("canonical system dimension must be >= 1");
    return SystemModel{Kind::CanonicalZd, d, 1, Rational(1)};
  }
  static SystemModel cyclic(long L, Rational w = Rational(1)) {
    if (L < 1) throw domain_error("cyclic period must be >= 1");
    if (w <= 0) throw domain_error("atom weight must be positive");
    return SystemModel{Kind::Cyclic, 1, L, std::move(w)};
  }
};

// Default cap on N^k, the number of lattice points averaged per output point.
inline constexpr long long kDefaultAverageBudget = 4'000'000;

// E_{n in [N]^k} prod_j f_j(T^{P_j(n)} x) with [N] = {1, ..., N}; exact
// rational output, materialized only where it can be nonzero.
Signal average_op(const SystemModel& system, const PolynomialFamily& P,
                  const std::vector<Signal>& f, long N,
                  long long budget = kDefaultAverageBudget);

CyclicSignal average_op(const SystemModel& system, const PolynomialFamily& P,
                        const std::vector<CyclicSignal>& f, long N,
                        long long budget = kDefaultAverageBudget);

// Single exact value of the cyclic average at one point; shared by the
// transference identity checks so they do not materialize whole signals.
Rational average_value_cyclic(const PolynomialFamily& P, const std::vector<CyclicSignal>& f,
                              long N, long long x);

// Iterates n over [N]^k in lexicographic order; calls visit(n).
void for_each_box_point(long N, int k, const std::function<void(const std::vector<long long>&)>& visit);

}  // namespace ergomax
