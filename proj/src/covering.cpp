#include "ergomax/covering.hpp"

#include <algorithm>

#include "ergomax/norms.hpp"

namespace ergomax {

namespace {

// Prefix sums of |f| over its sorted support; sum(u, v) in O(log n).
struct MassIndex {
  std::vector<long long> pos;
  std::vector<Rational> prefix;  // prefix[i] = sum of first i values

  explicit MassIndex(const Signal& f) {
    prefix.push_back(Rational(0));
    for (const auto& [x, v] : f.entries()) {
      pos.push_back(x[0]);
      prefix.push_back(prefix.back() + rabs(v));
    }
  }

  Rational sum(long long u, long long v) const {
    if (u > v) return Rational(0);
    size_t i = std::lower_bound(pos.begin(), pos.end(), u) - pos.begin();
    size_t j = std::upper_bound(pos.begin(), pos.end(), v) - pos.begin();
    return prefix[j] - prefix[i];
  }

  // Smallest N >= 0 with sum([e, e+N]) >= lambda * (N + 1). The sum is
  // constant between support points while the demand grows, so only window
  // ends at e or at support points > e can be first crossings.
  long long minimal_radius(long long e, const Rational& lambda) const {
    if (sum(e, e) >= lambda) return 0;
    size_t i = std::upper_bound(pos.begin(), pos.end(), e) - pos.begin();
    for (; i < pos.size(); ++i) {
      long long N = pos[i] - e;
      if (sum(e, pos[i]) >= lambda * rat(N + 1)) return N;
    }
    throw domain_error("anchor is not in the level set");
  }
};

}  // namespace

CoveringCertificate one_sided_covering_certificate(const Signal& f, const Rational& lambda) {
  if (lambda <= 0) throw domain_error("covering certificate needs a positive level");
  if (f.dimension() != 1) throw domain_error("covering certificates are one dimensional");
  CoveringCertificate cert;
  cert.lambda = lambda;
  cert.level = maximal_level_set(f, Op::OneSided, lambda);
  cert.mass = l1_norm(f);
  MassIndex idx(f);
  long long frontier = 0;  // exclusive right edge of the union of prior blocks
  bool have_frontier = false;
  for (long long e : cert.level) {
    CoveringBlock b;
    b.anchor = e;
    b.radius = idx.minimal_radius(e, lambda);
    long long r = e + b.radius;
    b.cut = have_frontier ? std::max(e, frontier) : e;
    if (b.cut > r) continue;  // block swallowed by earlier ones
    b.window_sum = idx.sum(e, r);
    b.suffix_sum = idx.sum(b.cut, r);
    cert.covered += rat(r - b.cut + 1);
    cert.blocks.push_back(b);
    frontier = r + 1;
    have_frontier = true;
  }
  cert.valid = validate_covering(f, cert);
  return cert;
}

bool validate_covering(const Signal& f, const CoveringCertificate& cert) {
  if (cert.lambda <= 0 || f.dimension() != 1) return false;
  if (cert.level != maximal_level_set(f, Op::OneSided, cert.lambda)) return false;
  if (cert.mass != l1_norm(f)) return false;
  MassIndex idx(f);
  Rational suffix_total(0), covered(0);
  long long prev_end = 0;
  bool have_prev = false;
  size_t next_anchor = 0;
  for (const auto& b : cert.blocks) {
    long long r = b.anchor + b.radius;
    if (b.radius < 0 || b.cut < b.anchor || b.cut > r) return false;
    if (have_prev && b.cut <= prev_end) return false;  // suffixes must be disjoint
    if (idx.sum(b.anchor, r) != b.window_sum) return false;
    if (b.window_sum < cert.lambda * rat(b.radius + 1)) return false;
    if (b.radius > 0 && idx.minimal_radius(b.anchor, cert.lambda) != b.radius) return false;
    if (idx.sum(b.cut, r) != b.suffix_sum) return false;
    // minimality makes the removed prefix [anchor, cut-1] carry < lambda per
    // point, so the suffix keeps at least lambda per point
    if (b.suffix_sum < cert.lambda * rat(r - b.cut + 1)) return false;
    suffix_total += b.suffix_sum;
    covered += rat(r - b.cut + 1);
    // every level point up to this block's right edge must be covered; an
    // unconsumed point already lies past the previous block's right edge
    while (next_anchor < cert.level.size() && cert.level[next_anchor] <= r) {
      if (cert.level[next_anchor] < b.anchor) return false;
      ++next_anchor;
    }
    prev_end = r;
    have_prev = true;
  }
  if (next_anchor != cert.level.size()) return false;
  if (covered != cert.covered) return false;
  if (cert.lambda * rat(static_cast<long long>(cert.level.size())) > suffix_total) return false;
  return suffix_total <= cert.mass;
}

}  // namespace ergomax
