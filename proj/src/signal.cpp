#include "ergomax/signal.hpp"

namespace ergomax {

void Signal::bounding_box(Point& lo, Point& hi) const {
  if (vals_.empty()) throw domain_error("bounding box of an empty signal");
  lo.assign(d_, 0);
  hi.assign(d_, 0);
  bool first = true;
  for (const auto& [x, v] : vals_) {
    (void)v;
    if (first) {
      lo = x;
      hi = x;
      first = false;
      continue;
    }
    for (int i = 0; i < d_; ++i) {
      if (x[i] < lo[i]) lo[i] = x[i];
      if (x[i] > hi[i]) hi[i] = x[i];
    }
  }
}

Signal signal1(const std::vector<std::pair<long long, Rational>>& entries) {
  Signal f(1);
  for (const auto& [pos, val] : entries) f.add({pos}, val);
  return f;
}

Signal delta(const Point& x, const Rational& v) {
  Signal f(static_cast<int>(x.size()));
  f.set(x, v);
  return f;
}

}  // namespace ergomax
