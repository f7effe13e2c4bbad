#pragma once

#include <map>
#include <vector>

#include "ergomax/rational.hpp"

namespace ergomax {

using Point = std::vector<long long>;

// Finitely supported f : Z^d -> Q under counting measure. Zero values are
// never stored, so support() is exactly the nonzero set; evaluation off the
// support is total and returns 0.
class Signal {
 public:
  explicit Signal(int dimension = 1) : d_(dimension) {
    if (dimension < 1) throw domain_error("signal dimension must be >= 1");
  }

  int dimension() const { return d_; }
  size_t support_size() const { return vals_.size(); }
  bool empty() const { return vals_.empty(); }

  void set(const Point& x, const Rational& v) {
    check_point(x);
    if (v == 0)
      vals_.erase(x);
    else
      vals_[x] = v;
  }
  void add(const Point& x, const Rational& v) { set(x, eval(x) + v); }

  Rational eval(const Point& x) const {
    check_point(x);
    auto it = vals_.find(x);
    return it == vals_.end() ? Rational(0) : it->second;
  }

  // Ordered by the lexicographic point order; deterministic iteration.
  const std::map<Point, Rational>& entries() const { return vals_; }

  Signal scaled(const Rational& c) const {
    Signal out(d_);
    if (c == 0) return out;
    for (const auto& [x, v] : vals_) out.vals_.emplace(x, c * v);
    return out;
  }

  Signal shifted(const Point& by) const {
    check_point(by);
    Signal out(d_);
    for (const auto& [x, v] : vals_) {
      Point y = x;
      for (int i = 0; i < d_; ++i) y[i] += by[i];
      out.vals_.emplace(std::move(y), v);
    }
    return out;
  }

  Signal plus(const Signal& o) const {
    if (o.d_ != d_) throw domain_error("dimension mismatch in signal sum");
    Signal out = *this;
    for (const auto& [x, v] : o.vals_) out.add(x, v);
    return out;
  }

  Signal abs() const {
    Signal out(d_);
    for (const auto& [x, v] : vals_) out.vals_.emplace(x, rabs(v));
    return out;
  }

  bool nonnegative() const {
    for (const auto& [x, v] : vals_)
      if (v < 0) return false;
    return true;
  }

  // Componentwise bounding box [lo, hi] of the support; requires nonempty.
  void bounding_box(Point& lo, Point& hi) const;

  bool operator==(const Signal& o) const { return d_ == o.d_ && vals_ == o.vals_; }

 private:
  void check_point(const Point& x) const {
    if (static_cast<int>(x.size()) != d_) throw domain_error("point dimension mismatch");
  }

  int d_;
  std::map<Point, Rational> vals_;
};

// f : Z_L -> Q with uniform atom weight w > 0; index arithmetic is mod L and
// the total measure is L*w.
class CyclicSignal {
 public:
  explicit CyclicSignal(long L, Rational w = Rational(1))
      : L_(L), w_(std::move(w)), vals_(static_cast<size_t>(L), Rational(0)) {
    if (L < 1) throw domain_error("cyclic period must be >= 1");
    if (w_ <= 0) throw domain_error("atom weight must be positive");
  }
  CyclicSignal(std::vector<Rational> values, Rational w = Rational(1))
      : L_(static_cast<long>(values.size())), w_(std::move(w)), vals_(std::move(values)) {
    if (L_ < 1) throw domain_error("cyclic period must be >= 1");
    if (w_ <= 0) throw domain_error("atom weight must be positive");
  }

  long period() const { return L_; }
  const Rational& weight() const { return w_; }
  const std::vector<Rational>& values() const { return vals_; }

  long mod(long long i) const {
    long long r = i % L_;
    return static_cast<long>(r < 0 ? r + L_ : r);
  }
  const Rational& eval(long long i) const { return vals_[mod(i)]; }
  void set(long long i, const Rational& v) { vals_[mod(i)] = v; }

  CyclicSignal scaled(const Rational& c) const {
    CyclicSignal out(L_, w_);
    for (long i = 0; i < L_; ++i) out.vals_[i] = c * vals_[i];
    return out;
  }

  CyclicSignal rotated(long long by) const {
    CyclicSignal out(L_, w_);
    for (long i = 0; i < L_; ++i) out.vals_[i] = eval(i + by);
    return out;
  }

  bool nonnegative() const {
    for (const auto& v : vals_)
      if (v < 0) return false;
    return true;
  }
  bool zero() const {
    for (const auto& v : vals_)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const CyclicSignal& o) const {
    return L_ == o.L_ && w_ == o.w_ && vals_ == o.vals_;
  }

 private:
  long L_;
  Rational w_;
  std::vector<Rational> vals_;
};

// Convenience builder for d=1 signals from (position, value) pairs.
Signal signal1(const std::vector<std::pair<long long, Rational>>& entries);

// Indicator of a single point.
Signal delta(const Point& x, const Rational& v = Rational(1));

}  // namespace ergomax
