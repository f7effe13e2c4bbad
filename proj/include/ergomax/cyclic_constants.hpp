#pragma once

#include <utility>
#include <vector>

#include "ergomax/lp.hpp"
#include "ergomax/maximal.hpp"
#include "ergomax/signal.hpp"

namespace ergomax {

// One candidate configuration in the sharp weak (1,1) constant search: a set
// of orbit windows (with wrap multiplicities), the level set they cover, and
// the exact minimum mass that makes every covered atom pass level 1.
struct ConstantCell {
  std::vector<std::pair<long, long>> windows;  // (start residue, length)
  std::vector<long> level;                     // covered residues, sorted
  Rational lp_min;
  Rational value;  // |level| / lp_min
  std::vector<Rational> extremizer;
  LpCertificate cert;
  bool cross_checked = false;  // vertex oracle reproduced lp_min
};

struct ConstantReport {
  Op op = Op::Centered;
  long L = 1;
  long n_max = 0;
  Rational constant;
  ConstantCell best;
  long long cells_scanned = 0;
  long long lps_solved = 0;
};

// Sharp C^op(X_L, 1) = sup_f lambda * mu{Mf >= lambda} / ||f||_1 by exhaustive
// cell enumeration: anchor sets x window assignments for the anchored
// operators, irredundant window sets for the uncentered one. Every cell is an
// exact LP; the winning cell carries KKT certificates and, when cross_check
// is set, an independent vertex-enumeration confirmation.
ConstantReport weak_constant_cyclic(Op op, long L, long n_max = -1, bool cross_check = true);

// (2 ceil(L/2) - 1) / ceil(L/2): the closed-form candidate for the uncentered
// constant. It is always attained (see verify below) and agrees with the
// search for odd L; for even L wrap windows beat it.
Rational uncentered_weak_formula(long L);

// Replays the formula's extremizer through the operator itself: a point mass
// at level 1/ceil(L/2) covers exactly 2 ceil(L/2) - 1 atoms.
bool verify_formula_extremizer(long L);

// Rebuilds the winning cell's LP from its windows and reruns both solver
// routes plus the operator-level replay of the extremizer.
bool verify_constant_report(const ConstantReport& report);

}  // namespace ergomax
