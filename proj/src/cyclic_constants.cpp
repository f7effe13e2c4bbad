#include "ergomax/cyclic_constants.hpp"

#include <algorithm>

#include "ergomax/norms.hpp"

namespace ergomax {

namespace {

constexpr long long kCellBudget = 4'000'000;

long norm_mod(long long v, long L) {
  long long r = v % L;
  return static_cast<long>(r < 0 ? r + L : r);
}

std::vector<Rational> window_row(long L, long long start, long W) {
  std::vector<Rational> row(L, Rational(0));
  for (long t = 0; t < W; ++t) row[norm_mod(start + t, L)] += 1;
  return row;
}

// Residues an uncentered window (start, W) certifies: offsets t that fit the
// per-side cap, i.e. t <= n_max and W - 1 - t <= n_max.
unsigned long coverage_mask(long L, long start, long W, long n_max) {
  long tlo = std::max(0L, W - 1 - n_max);
  long thi = std::min(W - 1, n_max);
  unsigned long mask = 0;
  for (long t = tlo; t <= thi; ++t) mask |= 1ul << norm_mod(start + t, L);
  return mask;
}

std::vector<long> mask_bits(unsigned long mask, long L) {
  std::vector<long> out;
  for (long x = 0; x < L; ++x)
    if (mask >> x & 1) out.push_back(x);
  return out;
}

// m >= W / ceil(W/L) for any feasible f of one row, so a cell is hopeless
// once |E| divided by the strongest such bound cannot pass `best`.
Rational row_mass_bound(long L, long W) { return rat(W) / rat((W + L - 1) / L); }

struct CellScan {
  long L = 1;
  long n_max = 0;
  long long lps = 0;
  ConstantCell best;
  bool have_best = false;

  void try_cell(const std::vector<std::pair<long, long>>& windows, const std::vector<long>& level) {
    Rational bound(0);
    for (const auto& [s, W] : windows) bound = std::max(bound, row_mass_bound(L, W));
    if (have_best && rat(static_cast<long long>(level.size())) <= best.value * bound) return;
    LpProblem prob;
    prob.c.assign(L, Rational(1));
    for (const auto& [s, W] : windows) {
      prob.A.push_back(window_row(L, s, W));
      prob.b.push_back(rat(W));
    }
    LpSolution sol = lp_solve(prob);
    ++lps;
    if (sol.status != LpStatus::Optimal || !sol.cert.ok())
      throw domain_error("cell lp did not certify");
    Rational value = rat(static_cast<long long>(level.size())) / sol.objective;
    if (have_best && !(value > best.value)) return;  // ties keep the first cell in scan order
    best.windows = windows;
    best.level = level;
    best.lp_min = sol.objective;
    best.value = value;
    best.extremizer = sol.x;
    best.cert = sol.cert;
    best.cross_checked = false;
    have_best = true;
  }
};

unsigned long rotate_mask(unsigned long mask, long r, long L) {
  unsigned long out = 0;
  for (long x = 0; x < L; ++x)
    if (mask >> x & 1) out |= 1ul << norm_mod(x + r, L);
  return out;
}

bool canonical_mask(unsigned long mask, long L) {
  for (long r = 1; r < L; ++r)
    if (rotate_mask(mask, r, L) < mask) return false;
  return true;
}

// Anchored operators: every anchor picks one window through itself.
void anchored_search(CellScan& scan, Op op, long L, long n_max) {
  long R = n_max + 1;
  long long cells = 0;
  for (unsigned long mask = 1; mask < (1ul << L); ++mask) {
    if (!canonical_mask(mask, L)) continue;
    long long tuples = 1;
    for (long b = 0; b < __builtin_popcountl(mask); ++b) {
      tuples *= R;
      if (tuples > kCellBudget) throw budget_error("constant search budget exhausted");
    }
    cells += tuples;
    if (cells > kCellBudget) throw budget_error("constant search budget exhausted");
  }
  for (unsigned long mask = 1; mask < (1ul << L); ++mask) {
    if (!canonical_mask(mask, L)) continue;
    std::vector<long> anchors = mask_bits(mask, L);
    size_t k = anchors.size();
    std::vector<long> radii(k, 0);
    while (true) {
      std::vector<std::pair<long, long>> windows;
      windows.reserve(k);
      for (size_t i = 0; i < k; ++i) {
        long N = radii[i];
        if (op == Op::Centered)
          windows.emplace_back(norm_mod(anchors[i] - N, L), 2 * N + 1);
        else
          windows.emplace_back(anchors[i], N + 1);
      }
      scan.try_cell(windows, anchors);
      size_t i = k;
      while (i > 0 && radii[i - 1] == R - 1) radii[--i] = 0;
      if (i == 0) break;
      ++radii[i - 1];
    }
  }
}

// Uncentered: a cell is any set of windows; it certifies the union of their
// coverages. Only short windows can beat the single-window seeds, and a
// window adding no coverage only raises the minimum mass.
void uncentered_search(CellScan& scan, long L, long n_max) {
  long Wmax = 2 * n_max + 1;
  for (long W = 1; W <= Wmax; ++W) {
    unsigned long cov = coverage_mask(L, 0, W, n_max);
    scan.try_cell({{0, W}}, mask_bits(cov, L));
  }
  std::vector<std::pair<long, long>> cand;
  for (long W = 1; W <= Wmax; ++W) {
    // a W-row forces mass >= W / ceil(W/L), so only W below L / best can help
    if (!(row_mass_bound(L, W) * scan.best.value < rat(L))) continue;
    for (long s = 0; s < L; ++s) cand.emplace_back(s, W);
  }
  std::sort(cand.begin(), cand.end());
  size_t n = cand.size();
  if (n > 22) throw budget_error("constant search budget exhausted");
  std::vector<unsigned long> cov(n);
  for (size_t i = 0; i < n; ++i) cov[i] = coverage_mask(L, cand[i].first, cand[i].second, n_max);
  // rotation acts as a permutation of the candidate list
  std::vector<std::vector<int>> perm(L, std::vector<int>(n));
  for (long r = 0; r < L; ++r)
    for (size_t i = 0; i < n; ++i) {
      auto target = std::make_pair(norm_mod(cand[i].first + r, L), cand[i].second);
      perm[r][i] = static_cast<int>(std::lower_bound(cand.begin(), cand.end(), target) - cand.begin());
    }
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    bool canon = true;
    for (long r = 1; r < L && canon; ++r) {
      unsigned long rm = 0;
      for (unsigned long m = mask; m; m &= m - 1)
        rm |= 1ul << perm[r][__builtin_ctzl(m)];
      canon = rm >= mask;
    }
    if (!canon) continue;
    unsigned long total = 0;
    for (unsigned long m = mask; m; m &= m - 1) total |= cov[__builtin_ctzl(m)];
    bool irredundant = true;
    for (unsigned long m = mask; m && irredundant; m &= m - 1) {
      size_t i = __builtin_ctzl(m);
      unsigned long others = 0;
      for (unsigned long m2 = mask & ~(1ul << i); m2; m2 &= m2 - 1) others |= cov[__builtin_ctzl(m2)];
      irredundant = (cov[i] & ~others) != 0;
    }
    if (!irredundant) continue;
    std::vector<std::pair<long, long>> windows;
    for (unsigned long m = mask; m; m &= m - 1) windows.push_back(cand[__builtin_ctzl(m)]);
    scan.try_cell(windows, mask_bits(total, L));
  }
}

bool cross_check_cell(long L, ConstantCell& cell) {
  LpProblem prob;
  prob.c.assign(L, Rational(1));
  long maxW = 1;
  for (const auto& [s, W] : cell.windows) {
    prob.A.push_back(window_row(L, s, W));
    prob.b.push_back(rat(W));
    maxW = std::max(maxW, W);
  }
  // every optimal vertex value sits in a tight row, so max rhs boxes them all
  prob.upper.assign(L, rat(maxW));
  VertexScan scan = vertex_enumerate_min(prob);
  cell.cross_checked = scan.found && scan.value == cell.lp_min;
  return cell.cross_checked;
}

}  // namespace

ConstantReport weak_constant_cyclic(Op op, long L, long n_max, bool cross_check) {
  if (L < 1 || L > 20) throw domain_error("constant search needs 1 <= L <= 20");
  if (n_max < 0) n_max = default_nmax(op, L);
  if (op == Op::OneSided) n_max = std::min<long>(n_max, L - 1);
  CellScan scan;
  scan.L = L;
  scan.n_max = n_max;
  if (op == Op::Uncentered)
    uncentered_search(scan, L, n_max);
  else
    anchored_search(scan, op, L, n_max);
  ConstantReport rep;
  rep.op = op;
  rep.L = L;
  rep.n_max = n_max;
  rep.best = scan.best;
  rep.constant = scan.best.value;
  rep.lps_solved = scan.lps;
  if (cross_check && !cross_check_cell(L, rep.best))
    throw domain_error("vertex oracle disagrees with the simplex");
  return rep;
}

Rational uncentered_weak_formula(long L) {
  if (L < 1) throw domain_error("period must be >= 1");
  long m = (L + 1) / 2;
  return rat(2 * m - 1, m);
}

bool verify_formula_extremizer(long L) {
  long m = (L + 1) / 2;
  CyclicSignal f(L);
  f.set(m % L, Rational(1));
  CyclicSignal mf = maximal_cyclic(f, Op::Uncentered);
  auto level = level_set(mf, rat(1, m));
  Rational ratio = rat(1, m) * rat(static_cast<long long>(level.size())) / l1_norm(f);
  return static_cast<long>(level.size()) == 2 * m - 1 && ratio == uncentered_weak_formula(L);
}

bool verify_constant_report(const ConstantReport& report) {
  const ConstantCell& cell = report.best;
  if (cell.windows.empty() || cell.level.empty()) return false;
  if (cell.value != report.constant) return false;
  if (rat(static_cast<long long>(cell.level.size())) != cell.value * cell.lp_min) return false;

  // route 1: fresh simplex on the rebuilt LP
  LpProblem prob;
  prob.c.assign(report.L, Rational(1));
  for (const auto& [s, W] : cell.windows) {
    prob.A.push_back(window_row(report.L, s, W));
    prob.b.push_back(rat(W));
  }
  LpSolution sol = lp_solve(prob);
  if (sol.status != LpStatus::Optimal || !sol.cert.ok() || sol.objective != cell.lp_min) return false;

  // route 2: exhaustive vertex scan
  ConstantCell copy = cell;
  if (!cross_check_cell(report.L, copy)) return false;

  // route 3: the extremizer replayed through the operator itself
  CyclicSignal f(cell.extremizer);
  CyclicSignal mf = maximal_cyclic(f, report.op, report.n_max);
  auto level = level_set(mf, Rational(1));
  if (level != cell.level) return false;
  return rat(static_cast<long long>(level.size())) == report.constant * l1_norm(f);
}

}  // namespace ergomax
