#pragma once

#include <vector>

#include "ergomax/maximal.hpp"
#include "ergomax/signal.hpp"

namespace ergomax {

// Rising-sun block for one anchor of the level set: the minimal window
// [anchor, anchor + radius] whose |f|-average reaches lambda, and the suffix
// D = [cut, anchor + radius] left after removing everything covered by
// earlier blocks.
struct CoveringBlock {
  long long anchor = 0;
  long long radius = 0;
  long long cut = 0;
  Rational window_sum;
  Rational suffix_sum;
};

// Certificate for lambda * |{M_os f >= lambda}| <= ||f||_1: disjoint suffixes
// covering the level set, each carrying at least lambda per point. Minimality
// of each radius is what makes the removed prefix cheap.
struct CoveringCertificate {
  Rational lambda;
  std::vector<long long> level;
  std::vector<CoveringBlock> blocks;
  Rational covered = 0;   // sum of suffix lengths, counts |union of blocks|
  Rational mass;          // ||f||_1
  bool valid = false;
};

CoveringCertificate one_sided_covering_certificate(const Signal& f, const Rational& lambda);

// Re-derives every claim in the certificate from f alone: the level set, the
// average and minimality of each window, disjointness and coverage of the
// suffixes, the per-suffix mass bound, and the chained conclusion.
bool validate_covering(const Signal& f, const CoveringCertificate& cert);

}  // namespace ergomax
