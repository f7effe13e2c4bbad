#pragma once

#include "ergomax/maximal.hpp"
#include "ergomax/norms.hpp"

namespace ergomax {

// Rokhlin-tower placement of a Z signal into a long cycle: with base {0} and
// disjoint preimages {-l mod M : l in [L]}, the signal lands forward-ordered
// on the top L residues, f(M - l) = F(L + 1 - l).
struct EmbeddingBuild {
  long long L = 1;
  long M = 2;
  Signal F{1};       // support inside [1, L]
  CyclicSignal f{1};
  bool disjoint_ok = false;  // the L residue classes are pairwise distinct
};

// Ledger of the embedding comparison at integer p: the norms agree exactly,
// the cyclic one-sided maximal dominates the Z one pointwise along the tower,
// so the restricted ratio transfers without decrease.
struct EmbedReport {
  EmbeddingBuild build;
  unsigned long p = 1;
  Rational f_norm_power;           // ||f||_p^p
  Rational F_norm_power;           // ||F||_p^p
  bool norm_equal = false;
  bool dominates_pointwise = false;  // M f(M-l) >= M F(L+1-l) for every l in [L]
  Rational host_ratio_power;         // ||M f||_p^p / ||f||_p^p
  Rational restricted_ratio_power;   // ||M F * 1_[L]||_p^p / ||F||_p^p
  bool ratio_no_decrease = false;

  bool ok() const { return build.disjoint_ok && norm_equal && dominates_pointwise && ratio_no_decrease; }
};

// Requires supp F inside [1, L], M >= 2L (one-sided windows of length <= L
// then clear the wrap), F not identically zero, integer p >= 1.
EmbedReport rokhlin_embed(const Signal& F, long long L, long M, unsigned long p);

}  // namespace ergomax
