#include "ergomax/maximal.hpp"

#include <algorithm>

#include "ergomax/norms.hpp"

namespace ergomax {

const char* op_name(Op op) {
  switch (op) {
    case Op::OneSided: return "os";
    case Op::Centered: return "c";
    case Op::Uncentered: return "u";
  }
  return "?";
}

Op parse_op(const std::string& text) {
  if (text == "os") return Op::OneSided;
  if (text == "c") return Op::Centered;
  if (text == "u") return Op::Uncentered;
  throw domain_error("unknown operator '" + text + "' (expected os, c, or u)");
}

long default_nmax(Op op, long L) {
  return op == Op::OneSided ? std::max(0L, L - 1) : 2 * L;
}

CyclicSignal maximal_cyclic(const CyclicSignal& f, Op op, long N_max) {
  long L = f.period();
  if (N_max < 0) N_max = default_nmax(op, L);
  CyclicSignal out(L, f.weight());
  for (long x = 0; x < L; ++x) {
    Rational best(0);
    auto consider = [&](const Rational& sum, long len) {
      Rational a = rabs(sum) / rat(len);
      if (a > best) best = a;
    };
    if (op == Op::OneSided) {
      Rational sum(0);
      for (long N = 0; N <= N_max; ++N) {
        sum += f.eval(x + N);
        consider(sum, N + 1);
      }
    } else if (op == Op::Centered) {
      Rational sum = f.eval(x);
      consider(sum, 1);
      for (long N = 1; N <= N_max; ++N) {
        sum += f.eval(x - N) + f.eval(x + N);
        consider(sum, 2 * N + 1);
      }
    } else {
      for (long rl = 0; rl <= N_max; ++rl) {
        Rational sum(0);
        for (long n = -rl; n <= 0; ++n) sum += f.eval(x + n);
        consider(sum, rl + 1);
        for (long rr = 1; rr <= N_max; ++rr) {
          sum += f.eval(x + rr);
          consider(sum, rl + rr + 1);
        }
      }
    }
    out.set(x, best);
  }
  return out;
}

MaximalEvaluator::MaximalEvaluator(const Signal& f, Op op) : op_(op), total_abs_(0) {
  if (f.dimension() != 1) throw domain_error("maximal operators on Z take d = 1 signals");
  positions_.reserve(f.support_size());
  prefix_.reserve(f.support_size() + 1);
  prefix_.push_back(Rational(0));
  for (const auto& [x, v] : f.entries()) {
    positions_.push_back(x[0]);
    prefix_.push_back(prefix_.back() + v);
    total_abs_ += rabs(v);
  }
  if (positions_.empty()) return;
  lo_ = positions_.front();
  hi_ = positions_.back();
  // Maximal runs of constant value over [lo_, hi_], zero gaps included.
  for (const auto& [pt, v] : f.entries()) {
    long long p = pt[0];
    if (!runs_.empty() && runs_.back().end + 1 < p)
      runs_.push_back(Run{runs_.back().end + 1, p - 1, Rational(0)});
    if (!runs_.empty() && runs_.back().value == v && runs_.back().end + 1 == p)
      runs_.back().end = p;
    else
      runs_.push_back(Run{p, p, v});
  }
}

Rational MaximalEvaluator::sum(long long u, long long v) const {
  if (u > v || positions_.empty()) return Rational(0);
  auto lo = std::lower_bound(positions_.begin(), positions_.end(), u);
  auto hi = std::upper_bound(positions_.begin(), positions_.end(), v);
  size_t a = static_cast<size_t>(lo - positions_.begin());
  size_t b = static_cast<size_t>(hi - positions_.begin());
  return prefix_[b] - prefix_[a];
}

Rational MaximalEvaluator::avg_abs(long long u, long long v) const {
  return rabs(sum(u, v)) / rat(v - u + 1);
}

Rational MaximalEvaluator::one_sided_at(long long x) const {
  if (runs_.empty() || x > hi_) return Rational(0);
  Rational best = x >= lo_ ? rabs(sum(x, x)) : Rational(0);
  for (const auto& run : runs_) {
    if (run.end < x) continue;
    long long start = std::max(run.start, x);
    Rational a = avg_abs(x, start);
    if (a > best) best = a;
    a = avg_abs(x, run.end);
    if (a > best) best = a;
  }
  return best;
}

Rational MaximalEvaluator::centered_at(long long x) const {
  if (runs_.empty()) return Rational(0);
  Rational best = rabs(sum(x, x));
  std::vector<long long> radii;
  radii.reserve(2 * runs_.size() + 2);
  for (const auto& run : runs_) {
    for (long long t : {run.start, run.end}) {
      long long N = t <= x ? x - t : t - x;
      radii.push_back(N);
    }
  }
  for (long long N : radii) {
    if (N <= 0) continue;
    Rational a = avg_abs(x - N, x + N);
    if (a > best) best = a;
  }
  return best;
}

Rational MaximalEvaluator::uncentered_at(long long x) const {
  if (runs_.empty()) return Rational(0);
  Rational best = rabs(sum(x, x));
  std::vector<long long> lefts{x}, rights{x};
  for (const auto& run : runs_) {
    for (long long t : {run.start, run.end}) {
      if (t <= x) lefts.push_back(t);
      if (t >= x) rights.push_back(t);
    }
  }
  for (long long a : lefts) {
    for (long long b : rights) {
      Rational v = avg_abs(a, b);
      if (v > best) best = v;
    }
  }
  return best;
}

Rational MaximalEvaluator::at(long long x) const {
  switch (op_) {
    case Op::OneSided: return one_sided_at(x);
    case Op::Centered: return centered_at(x);
    case Op::Uncentered: return uncentered_at(x);
  }
  return Rational(0);
}

std::vector<Rational> MaximalEvaluator::profile(long long lo, long long hi) const {
  std::vector<Rational> out;
  if (lo > hi) return out;
  out.reserve(static_cast<size_t>(hi - lo + 1));
  if (op_ != Op::Uncentered || runs_.empty()) {
    for (long long x = lo; x <= hi; ++x) out.push_back(at(x));
    return out;
  }
  std::vector<long long> B;
  B.reserve(2 * runs_.size());
  for (const auto& run : runs_) {
    B.push_back(run.start);
    if (run.end != run.start) B.push_back(run.end);
  }
  size_t nb = B.size();
  // SM[i][j] = max window average over boundary pairs a <= B[i], b >= B[j];
  // for x inside a run the candidate pairs not touching x form exactly such
  // a rectangle (left boundaries stop at the run start, right ones at its
  // end), so the per-point work drops to the windows with x as an endpoint.
  std::vector<std::vector<Rational>> SM(nb, std::vector<Rational>(nb, Rational(-1)));
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = i; j < nb; ++j) SM[i][j] = avg_abs(B[i], B[j]);
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = nb; j-- > 0;) {
      if (i > 0 && SM[i - 1][j] > SM[i][j]) SM[i][j] = SM[i - 1][j];
      if (j + 1 < nb && SM[i][j + 1] > SM[i][j]) SM[i][j] = SM[i][j + 1];
    }
  size_t run_idx = 0;
  for (long long x = lo; x <= hi; ++x) {
    Rational best = x >= lo_ && x <= hi_ ? rabs(sum(x, x)) : Rational(0);
    for (size_t i = 0; i < nb; ++i) {
      if (B[i] <= x) {
        Rational a = avg_abs(B[i], x);
        if (a > best) best = a;
      }
      if (B[i] >= x) {
        Rational a = avg_abs(x, B[i]);
        if (a > best) best = a;
      }
    }
    if (x >= lo_ && x <= hi_) {
      while (runs_[run_idx].end < x) ++run_idx;
      const Run& r = runs_[run_idx];
      size_t i = std::upper_bound(B.begin(), B.end(), r.start) - B.begin();
      size_t j = std::lower_bound(B.begin(), B.end(), r.end) - B.begin();
      if (SM[i - 1][j] > best) best = SM[i - 1][j];
    }
    out.push_back(best);
  }
  return out;
}

std::pair<long long, long long> MaximalEvaluator::level_range(const Rational& lambda) const {
  if (lambda <= 0) throw domain_error("level_range needs lambda > 0");
  if (runs_.empty()) return {0, -1};
  long long D = static_cast<long long>(ceil_int(total_abs_ / lambda).get_si()) + 1;
  if (op_ == Op::OneSided) return {lo_ - D, hi_};
  return {lo_ - D, hi_ + D};
}

Rational maximal_value(const Signal& f, Op op, long long x) {
  return MaximalEvaluator(f, op).at(x);
}

Signal maximal_restrict(const Signal& f, Op op, long long lo, long long hi) {
  MaximalEvaluator ev(f, op);
  Signal out(1);
  std::vector<Rational> vals = ev.profile(lo, hi);
  for (long long x = lo; x <= hi; ++x) out.set({x}, vals[static_cast<size_t>(x - lo)]);
  return out;
}

std::vector<long long> maximal_level_set(const Signal& f, Op op, const Rational& lambda) {
  if (lambda <= 0) throw domain_error("maximal_level_set needs lambda > 0");
  MaximalEvaluator ev(f, op);
  std::vector<long long> out;
  if (ev.zero_signal()) return out;
  auto [lo, hi] = ev.level_range(lambda);
  if (hi - lo > 20'000'000)
    throw budget_error("level set range too large; raise lambda or shrink the signal");
  std::vector<Rational> vals = ev.profile(lo, hi);
  for (long long x = lo; x <= hi; ++x)
    if (vals[static_cast<size_t>(x - lo)] >= lambda) out.push_back(x);
  return out;
}

Rational maximal_value_windows(const Signal& f, Op op, long long x, long long bound) {
  auto window_sum = [&](long long u, long long v) {
    Rational s(0);
    for (const auto& [pt, val] : f.entries())
      if (pt[0] >= u && pt[0] <= v) s += val;
    return s;
  };
  Rational best(0);
  auto consider = [&](long long u, long long v) {
    Rational a = rabs(window_sum(u, v)) / rat(v - u + 1);
    if (a > best) best = a;
  };
  if (op == Op::OneSided) {
    for (long long N = 0; N <= bound; ++N) consider(x, x + N);
  } else if (op == Op::Centered) {
    for (long long N = 0; N <= bound; ++N) consider(x - N, x + N);
  } else {
    for (long long rl = 0; rl <= bound; ++rl)
      for (long long rr = 0; rr <= bound; ++rr) consider(x - rl, x + rr);
  }
  return best;
}

}  // namespace ergomax
