#pragma once

#include <optional>
#include <vector>

#include "ergomax/rational.hpp"

namespace ergomax {

// minimize c.x subject to A x >= b, 0 <= x, and x_j <= upper_j where given.
struct LpProblem {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::vector<std::optional<Rational>> upper;  // empty vector = no upper bounds

  int rows() const { return static_cast<int>(A.size()); }
  int cols() const { return static_cast<int>(c.size()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpCertificate {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool complementary = false;
  bool gap_zero = false;

  bool ok() const { return primal_feasible && dual_feasible && complementary && gap_zero; }
};

// Equality standard form shared by the solver and the independent validator:
// columns are [structural | inequality slacks | bound slacks], rows are the
// >= rows (sign-normalized to rhs >= 0) followed by the x + t = u rows.
struct EqualityForm {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
  int n = 0;      // structural prefix
  int total = 0;  // total columns
};

EqualityForm build_equality_form(const LpProblem& prob);

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  std::vector<Rational> x;  // structural values, Optimal only
  Rational objective;
  std::vector<Rational> y;        // equality-form duals, zero on dropped rows
  std::vector<Rational> reduced;  // reduced costs over equality-form columns
  LpCertificate cert;
  std::vector<Rational> farkas;  // Infeasible: equality-form multipliers
  bool farkas_checked = false;
  std::vector<Rational> ray;  // Unbounded: structural improving direction
  long pivots = 0;
};

// Exact two-phase simplex with Bland's rule; the returned certificate is
// recomputed from the original data through lp_validate, not read off the
// final tableau.
LpSolution lp_solve(const LpProblem& prob);

// KKT check that never touches solver internals: reconstructs slack values
// from sol.x, then verifies feasibility, nonnegative reduced costs,
// complementary slackness and a zero duality gap, all in exact arithmetic.
LpCertificate lp_validate(const LpProblem& prob, const LpSolution& sol);

// y proves infeasibility when y.Aeq <= 0 columnwise and y.beq > 0.
bool lp_check_farkas(const LpProblem& prob, const std::vector<Rational>& y);

// Exhaustive basic-solution scan for fully boxed problems (every variable
// needs a finite upper bound). Independent oracle for lp_solve.
struct VertexScan {
  bool found = false;
  Rational value;
  std::vector<Rational> x;
  long long feasible_vertices = 0;
};

VertexScan vertex_enumerate_min(const LpProblem& prob, long long budget = 200000);

// Exact Gaussian elimination; nullopt when the matrix is singular.
std::optional<std::vector<Rational>> gauss_solve(std::vector<std::vector<Rational>> mat,
                                                 std::vector<Rational> rhs);

}  // namespace ergomax
