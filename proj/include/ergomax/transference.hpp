#pragma once

#include <optional>
#include <vector>

#include "ergomax/average.hpp"
#include "ergomax/functional.hpp"
#include "ergomax/norms.hpp"

namespace ergomax {

// Minimal R with |P_{i,j}(n)| <= R for every entry of the family and every
// ||n||_inf <= K, floored at 1. The witness locates an attaining entry and
// point, so R - 1 provably violates the bound whenever max_abs >= 1.
struct RadiusBound {
  long long R_K = 1;
  Integer max_abs;
  int wi = 0, wj = 0;
  std::vector<long long> witness;
};

RadiusBound compute_RK(const PolynomialFamily& P, long K, long long budget = 10'000'000);

// Exact p_j-th-power form of the norm-scaling identity
// ||F_j||_{p_j}^{p_j} = (K R_K)^d ||f_j||_{p_j}^{p_j}, applicable when p_j is
// a positive integer. The value-multiset check on the build covers every
// exponent at once, so non-integer p_j lose nothing.
struct PowerScaling {
  bool applicable = false;
  bool ok = false;
  Rational lhs;
  Rational rhs;
};

// The Calderon transfer of a cyclic tuple into the canonical system: each
// F_j lives on Z_L x Z^d (coordinate 0 is x) with
// F_j(x, l) = f_j(T^(-K R_K + l_1) ... T^(-K R_K + l_d) x) for l in [K R_K]^d.
struct TransferenceBuild {
  long K;
  long long R_K;
  SystemModel system;
  PolynomialFamily P;
  std::vector<CyclicSignal> f;
  ExponentTuple p;
  std::vector<Signal> F;
  bool multiset_ok;  // count_F(v) = (K R_K)^d count_f(v) for every v != 0
  std::vector<PowerScaling> scaling;

  bool scaling_ok() const {
    if (!multiset_ok) return false;
    for (const auto& s : scaling)
      if (s.applicable && !s.ok) return false;
    return true;
  }
};

// K >= 3, cyclic source, product support L (K R_K)^d within budget. Both
// scaling checks are recomputed from scratch on the constructed signals.
TransferenceBuild build_transfer(const SystemModel& system, const PolynomialFamily& P,
                                 const std::vector<CyclicSignal>& f, long K,
                                 const ExponentTuple& p, long long budget = 10'000'000);

// A_N F(x, l) on the product side: the Z^d shifts act on the l coordinates,
// x rides along. Exact.
Rational average_value_product(const TransferenceBuild& build, long N, long x,
                               const std::vector<long long>& l);

struct InnerMismatch {
  long x = 0;
  std::vector<long long> l;
  Rational product_value;
  Rational cyclic_value;
};

struct InnerIdentityReport {
  bool ok = false;
  long long points_checked = 0;
  long long mismatch_count = 0;
  std::vector<InnerMismatch> mismatches;  // truncated to the first 64
};

// Checks O(A_N F(x,l) : N in N_list) = O(A_N f(x - d K R_K + sum_i l_i) : N)
// exactly for every x in Z_L and every l in the inner box
// {R_K + 1, ..., (K-1) R_K}^d. Max compares the values themselves, integer-
// order variation compares r-th powers; other functionals have no exact
// comparison and are rejected. O's truncation is N_list.size().
InnerIdentityReport verify_inner_identity(const TransferenceBuild& build,
                                          const std::vector<long>& N_list,
                                          const FunctionalSpec& O,
                                          long long budget = 10'000'000);

enum class TransferNorm { Strong, Weak };

// Both sides of the transfer inequality
//   ||O(A_N F : N in [K])||_{p0} >= ((K-2) R_K)^(d/p0) ||O(A_N f : N in [K])||_{p0}
// in exact p0-th powers, together with the scaling factor
// ((K-2) R_K)^(-d/p0) (K R_K)^(d/p1 + ... + d/pm), whose p0-th power reduces
// to (K/(K-2))^d under the Hoelder identity of the exponent tuple.
struct TransferStep {
  long K = 3;
  long long R_K = 1;
  Rational lhs_power;
  Rational rhs_power;  // includes the ((K-2) R_K)^d factor
  Rational cyclic_power;
  bool holds = false;
  Rational factor_power;
  std::optional<Rational> factor_exact;  // the factor itself when rational
};

TransferStep transfer_bound_step(const TransferenceBuild& build, const FunctionalSpec& O,
                                 TransferNorm norm = TransferNorm::Strong,
                                 long long budget = 10'000'000);

struct TransferDemo {
  TransferNorm norm = TransferNorm::Strong;
  std::vector<TransferStep> steps;
  bool all_hold = false;
};

// Builds the transfer for each K in K_list and reports the inequality ledger.
// p.p0 must be a positive integer; Max allows any such p0, variation requires
// p0 equal to its integer order.
TransferDemo transfer_bound_demo(const SystemModel& system, const PolynomialFamily& P,
                                 const std::vector<CyclicSignal>& f, const FunctionalSpec& O,
                                 const ExponentTuple& p, const std::vector<long>& K_list,
                                 TransferNorm norm = TransferNorm::Strong,
                                 long long budget = 10'000'000);

}  // namespace ergomax
