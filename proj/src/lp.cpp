#include "ergomax/lp.hpp"

#include <algorithm>
#include <numeric>

#include "ergomax/errors.hpp"

namespace ergomax {

namespace {

constexpr long kPivotBudget = 200000;

void check_shapes(const LpProblem& prob) {
  int m = prob.rows(), n = prob.cols();
  if (n < 1) throw domain_error("lp needs at least one variable");
  if (static_cast<int>(prob.b.size()) != m) throw domain_error("lp rhs size mismatch");
  for (const auto& row : prob.A)
    if (static_cast<int>(row.size()) != n) throw domain_error("lp row width mismatch");
  if (!prob.upper.empty()) {
    if (static_cast<int>(prob.upper.size()) != n) throw domain_error("lp bound size mismatch");
    for (const auto& u : prob.upper)
      if (u && *u < 0) throw domain_error("lp upper bound below zero");
  }
}

struct Simplex {
  std::vector<std::vector<Rational>> T;  // R x (C + 1), last column is rhs
  std::vector<Rational> zrow;
  Rational zval;
  std::vector<int> basis;
  std::vector<Rational> cost;
  int C = 0;
  long pivots = 0;

  void recompute_z() {
    zrow = cost;
    zval = 0;
    for (size_t r = 0; r < T.size(); ++r) {
      const Rational& cb = cost[basis[r]];
      if (cb == 0) continue;
      for (int j = 0; j < C; ++j)
        if (T[r][j] != 0) zrow[j] -= cb * T[r][j];
      zval += cb * T[r][C];
    }
  }

  void pivot(int r, int e) {
    Rational d = T[r][e];
    for (int j = 0; j <= C; ++j) T[r][j] /= d;
    for (size_t r2 = 0; r2 < T.size(); ++r2) {
      if (static_cast<int>(r2) == r || T[r2][e] == 0) continue;
      Rational f = T[r2][e];
      for (int j = 0; j <= C; ++j) T[r2][j] -= f * T[r][j];
    }
    basis[r] = e;
    if (++pivots > kPivotBudget) throw budget_error("simplex pivot budget exhausted");
  }

  // Bland's rule; returns the entering column on unboundedness, -1 at optimum.
  int run() {
    recompute_z();
    while (true) {
      int e = -1;
      for (int j = 0; j < C; ++j)
        if (zrow[j] < 0) {
          e = j;
          break;
        }
      if (e < 0) return -1;
      int leave = -1;
      Rational best;
      for (size_t r = 0; r < T.size(); ++r) {
        if (T[r][e] <= 0) continue;
        Rational ratio = T[r][C] / T[r][e];
        if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave]))
          leave = static_cast<int>(r), best = ratio;
      }
      if (leave < 0) return e;
      pivot(leave, e);
      recompute_z();
    }
  }
};

// B^T y = c_B for the basis columns of rows x rows system.
std::optional<std::vector<Rational>> basis_duals(const std::vector<std::vector<Rational>>& Aeq,
                                                 const std::vector<Rational>& ceq,
                                                 const std::vector<int>& basis) {
  size_t R = Aeq.size();
  std::vector<std::vector<Rational>> Bt(R, std::vector<Rational>(R));
  std::vector<Rational> cb(R);
  for (size_t r = 0; r < R; ++r) {
    for (size_t i = 0; i < R; ++i) Bt[r][i] = Aeq[i][basis[r]];
    cb[r] = ceq[basis[r]];
  }
  return gauss_solve(std::move(Bt), std::move(cb));
}

}  // namespace

std::optional<std::vector<Rational>> gauss_solve(std::vector<std::vector<Rational>> mat,
                                                 std::vector<Rational> rhs) {
  size_t n = mat.size();
  if (rhs.size() != n) throw domain_error("gauss shape mismatch");
  for (auto& row : mat)
    if (row.size() != n) throw domain_error("gauss needs a square matrix");
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && mat[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(mat[col], mat[piv]);
    std::swap(rhs[col], rhs[piv]);
    Rational d = mat[col][col];
    for (size_t j = col; j < n; ++j) mat[col][j] /= d;
    rhs[col] /= d;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || mat[r][col] == 0) continue;
      Rational f = mat[r][col];
      for (size_t j = col; j < n; ++j) mat[r][j] -= f * mat[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

EqualityForm build_equality_form(const LpProblem& prob) {
  check_shapes(prob);
  int m = prob.rows(), n = prob.cols();
  std::vector<int> bounded;
  if (!prob.upper.empty())
    for (int j = 0; j < n; ++j)
      if (prob.upper[j]) bounded.push_back(j);
  int k = static_cast<int>(bounded.size());
  EqualityForm eq;
  eq.n = n;
  eq.total = n + m + k;
  eq.A.assign(m + k, std::vector<Rational>(eq.total, Rational(0)));
  eq.b.assign(m + k, Rational(0));
  eq.c.assign(eq.total, Rational(0));
  for (int j = 0; j < n; ++j) eq.c[j] = prob.c[j];
  for (int i = 0; i < m; ++i) {
    bool flip = prob.b[i] < 0;
    for (int j = 0; j < n; ++j) eq.A[i][j] = flip ? -prob.A[i][j] : prob.A[i][j];
    eq.A[i][n + i] = flip ? Rational(1) : Rational(-1);
    eq.b[i] = flip ? -prob.b[i] : prob.b[i];
  }
  for (int r = 0; r < k; ++r) {
    eq.A[m + r][bounded[r]] = 1;
    eq.A[m + r][n + m + r] = 1;
    eq.b[m + r] = *prob.upper[bounded[r]];
  }
  return eq;
}

LpSolution lp_solve(const LpProblem& prob) {
  EqualityForm eq = build_equality_form(prob);
  int n = eq.n, N = eq.total;
  int m = prob.rows();
  int R = static_cast<int>(eq.A.size());
  LpSolution sol;

  // Phase 1: unit vectors come free from positive slacks and bound slacks;
  // the remaining rows get artificial columns with cost 1.
  std::vector<int> artcol(R, -1);
  int C1 = N;
  for (int i = 0; i < R; ++i) {
    bool has_unit = false;
    if (i < m && eq.A[i][n + i] == 1)
      has_unit = true;  // flipped row, slack is already a basis column
    else if (i >= m)
      has_unit = true;  // bound slack
    if (!has_unit) artcol[i] = C1++;
  }
  Simplex sx;
  sx.C = C1;
  sx.T.assign(R, std::vector<Rational>(C1 + 1, Rational(0)));
  sx.basis.assign(R, 0);
  sx.cost.assign(C1, Rational(0));
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < N; ++j) sx.T[i][j] = eq.A[i][j];
    sx.T[i][C1] = eq.b[i];
    if (artcol[i] >= 0) {
      sx.T[i][artcol[i]] = 1;
      sx.cost[artcol[i]] = 1;
      sx.basis[i] = artcol[i];
    } else {
      sx.basis[i] = i < m ? n + i : n + m + (i - m);
    }
  }
  if (sx.run() >= 0) throw domain_error("phase 1 cannot be unbounded");
  sol.pivots = sx.pivots;

  if (sx.zval != 0) {
    sol.status = LpStatus::Infeasible;
    // phase-1 duals: y.Aeq <= 0 on every real column, y.beq = optimum > 0
    auto column_entry = [&](int row, int col) -> Rational {
      if (col < N) return eq.A[row][col];
      return artcol[row] == col ? Rational(1) : Rational(0);  // artificial unit column
    };
    std::vector<std::vector<Rational>> A1(R, std::vector<Rational>(R));
    std::vector<Rational> c1(R);
    for (int r = 0; r < R; ++r) {
      c1[r] = sx.cost[sx.basis[r]];
      for (int i = 0; i < R; ++i) A1[r][i] = column_entry(i, sx.basis[r]);
    }
    auto y = gauss_solve(std::move(A1), std::move(c1));
    if (!y) throw domain_error("singular phase-1 basis");
    sol.farkas = *y;
    sol.farkas_checked = lp_check_farkas(prob, sol.farkas);
    return sol;
  }

  // Feasible: drive leftover artificials out, dropping dependent rows.
  std::vector<std::vector<Rational>> Aeq = eq.A;
  std::vector<Rational> beq = eq.b;
  std::vector<bool> keep(R, true);
  for (int r = 0; r < R; ++r) {
    if (sx.basis[r] < N) continue;
    int enter = -1;
    for (int j = 0; j < N && enter < 0; ++j)
      if (sx.T[r][j] != 0) enter = j;
    if (enter >= 0)
      sx.pivot(r, enter);
    else
      keep[r] = false;
  }
  auto drop_rows = [&](auto& vec) {
    size_t out = 0;
    for (size_t r = 0; r < vec.size(); ++r) {
      if (!keep[r]) continue;
      if (out != r) vec[out] = std::move(vec[r]);
      ++out;
    }
    vec.resize(out);
  };
  std::vector<int> kept_ids;
  for (int r = 0; r < R; ++r)
    if (keep[r]) kept_ids.push_back(r);
  drop_rows(sx.T);
  drop_rows(sx.basis);
  drop_rows(Aeq);
  drop_rows(beq);
  for (auto& row : sx.T) {
    row[N] = row[C1];  // move rhs next to the surviving columns
    row.resize(N + 1);
  }
  sx.C = N;
  sx.cost = eq.c;

  int unb = sx.run();
  sol.pivots = sx.pivots;
  int Rk = static_cast<int>(sx.T.size());

  if (unb >= 0) {
    sol.status = LpStatus::Unbounded;
    std::vector<Rational> dir(N, Rational(0));
    dir[unb] = 1;
    for (int r = 0; r < Rk; ++r) dir[sx.basis[r]] = -sx.T[r][unb];
    sol.ray.assign(dir.begin(), dir.begin() + n);
    return sol;
  }

  sol.status = LpStatus::Optimal;
  std::vector<Rational> xhat(N, Rational(0));
  for (int r = 0; r < Rk; ++r) xhat[sx.basis[r]] = sx.T[r][N];
  sol.x.assign(xhat.begin(), xhat.begin() + n);
  sol.objective = 0;
  for (int j = 0; j < n; ++j) sol.objective += prob.c[j] * sol.x[j];

  auto y = basis_duals(Aeq, eq.c, sx.basis);
  if (!y) throw domain_error("singular optimal basis");
  sol.y.assign(R, Rational(0));
  for (int r = 0; r < Rk; ++r) sol.y[kept_ids[r]] = (*y)[r];
  sol.reduced.assign(N, Rational(0));
  for (int j = 0; j < N; ++j) {
    sol.reduced[j] = eq.c[j];
    for (int r = 0; r < Rk; ++r) sol.reduced[j] -= (*y)[r] * Aeq[r][j];
  }
  sol.cert = lp_validate(prob, sol);
  return sol;
}

LpCertificate lp_validate(const LpProblem& prob, const LpSolution& sol) {
  LpCertificate cert;
  if (sol.status != LpStatus::Optimal) return cert;
  EqualityForm eq = build_equality_form(prob);
  int n = eq.n, N = eq.total, m = prob.rows();
  int R = static_cast<int>(eq.A.size());
  if (static_cast<int>(sol.x.size()) != n || static_cast<int>(sol.y.size()) != R) return cert;

  // slack values follow from x in both row orientations: s = A x - b, t = u - x
  std::vector<Rational> xhat(N, Rational(0));
  for (int j = 0; j < n; ++j) xhat[j] = sol.x[j];
  for (int i = 0; i < m; ++i) {
    Rational ax(0);
    for (int j = 0; j < n; ++j) ax += prob.A[i][j] * sol.x[j];
    xhat[n + i] = ax - prob.b[i];
  }
  for (int r = m; r < R; ++r) {
    int j = -1;
    for (int jj = 0; jj < n; ++jj)
      if (eq.A[r][jj] == 1) {
        j = jj;
        break;
      }
    xhat[n + m + (r - m)] = eq.b[r] - sol.x[j];
  }

  cert.primal_feasible = true;
  for (int j = 0; j < N; ++j)
    if (xhat[j] < 0) cert.primal_feasible = false;
  for (int i = 0; i < R; ++i) {
    Rational lhs(0);
    for (int j = 0; j < N; ++j)
      if (eq.A[i][j] != 0) lhs += eq.A[i][j] * xhat[j];
    if (lhs != eq.b[i]) cert.primal_feasible = false;
  }

  std::vector<Rational> rc(N);
  cert.dual_feasible = true;
  for (int j = 0; j < N; ++j) {
    rc[j] = eq.c[j];
    for (int i = 0; i < R; ++i)
      if (eq.A[i][j] != 0) rc[j] -= sol.y[i] * eq.A[i][j];
    if (rc[j] < 0) cert.dual_feasible = false;
  }

  cert.complementary = true;
  for (int j = 0; j < N; ++j)
    if (xhat[j] != 0 && rc[j] != 0) cert.complementary = false;

  Rational primal(0), dual(0);
  for (int j = 0; j < N; ++j) primal += eq.c[j] * xhat[j];
  for (int i = 0; i < R; ++i) dual += sol.y[i] * eq.b[i];
  cert.gap_zero = primal == dual && primal == sol.objective;
  return cert;
}

bool lp_check_farkas(const LpProblem& prob, const std::vector<Rational>& y) {
  EqualityForm eq = build_equality_form(prob);
  int R = static_cast<int>(eq.A.size());
  if (static_cast<int>(y.size()) != R) return false;
  for (int j = 0; j < eq.total; ++j) {
    Rational dot(0);
    for (int i = 0; i < R; ++i)
      if (eq.A[i][j] != 0) dot += y[i] * eq.A[i][j];
    if (dot > 0) return false;
  }
  Rational rhs(0);
  for (int i = 0; i < R; ++i) rhs += y[i] * eq.b[i];
  return rhs > 0;
}

VertexScan vertex_enumerate_min(const LpProblem& prob, long long budget) {
  check_shapes(prob);
  int m = prob.rows(), n = prob.cols();
  if (static_cast<int>(prob.upper.size()) != n) throw domain_error("vertex scan needs a boxed problem");
  for (const auto& u : prob.upper)
    if (!u) throw domain_error("vertex scan needs a boxed problem");

  // constraints: m inequality rows, then x_j >= 0, then x_j <= u_j
  int total = m + 2 * n;
  long long combos = 1;
  for (int i = 0; i < n; ++i) {
    combos = combos * (total - i) / (i + 1);
    if (combos > budget) throw budget_error("vertex enumeration budget exhausted");
  }

  auto row_of = [&](int cid, std::vector<Rational>& out, Rational& rhs) {
    out.assign(n, Rational(0));
    if (cid < m) {
      out = prob.A[cid];
      rhs = prob.b[cid];
    } else if (cid < m + n) {
      out[cid - m] = 1;
      rhs = 0;
    } else {
      out[cid - m - n] = 1;
      rhs = *prob.upper[cid - m - n];
    }
  };

  VertexScan scan;
  std::vector<int> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<std::vector<Rational>> mat(n);
    std::vector<Rational> rhs(n);
    for (int i = 0; i < n; ++i) row_of(pick[i], mat[i], rhs[i]);
    if (auto x = gauss_solve(std::move(mat), std::move(rhs))) {
      bool feasible = true;
      for (int j = 0; j < n && feasible; ++j)
        feasible = (*x)[j] >= 0 && (*x)[j] <= *prob.upper[j];
      for (int i = 0; i < m && feasible; ++i) {
        Rational ax(0);
        for (int j = 0; j < n; ++j) ax += prob.A[i][j] * (*x)[j];
        feasible = ax >= prob.b[i];
      }
      if (feasible) {
        ++scan.feasible_vertices;
        Rational val(0);
        for (int j = 0; j < n; ++j) val += prob.c[j] * (*x)[j];
        if (!scan.found || val < scan.value) {
          scan.found = true;
          scan.value = val;
          scan.x = *x;
        }
      }
    }
    int i = n - 1;
    while (i >= 0 && pick[i] == total - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return scan;
}

}  // namespace ergomax
