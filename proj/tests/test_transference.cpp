#include "doctest.h"

#include "ergomax/transference.hpp"

using namespace ergomax;

namespace {

CyclicSignal delta_cyclic(long L) {
  CyclicSignal f(L);
  f.set(0, rat(1));
  return f;
}

}  // namespace

TEST_CASE("compute_RK with witness") {
  RadiusBound r = compute_RK(PolynomialFamily::linear1(), 5);
  CHECK(r.R_K == 5);
  CHECK(r.max_abs == 5);
  CHECK(r.witness == std::vector<long long>{5});

  RadiusBound sq = compute_RK(PolynomialFamily::power1(2), 4);
  CHECK(sq.R_K == 16);

  // n - 2 dips negative; the bound is on |P| with a floor at 1
  PolynomialFamily shifted(1, 1, 1);
  shifted.at(0, 0) = Polynomial::variable();
  shifted.at(0, 0).add_term({0}, Integer(-2));
  RadiusBound sh = compute_RK(shifted, 3);
  CHECK(sh.R_K == 1);  // values -1, 0, 1
  CHECK(sh.max_abs == 1);
}

TEST_CASE("build_transfer scaling ledger") {
  for (long K : {3, 4, 5}) {
    TransferenceBuild b = build_transfer(SystemModel::cyclic(2), PolynomialFamily::linear1(),
                                         {delta_cyclic(2)}, K,
                                         ExponentTuple::diagonal(Exponent::of(1)));
    CHECK(b.K == K);
    CHECK(b.R_K == K);
    CHECK(b.multiset_ok);
    CHECK(b.scaling_ok());
    REQUIRE(b.scaling.size() == 1);
    CHECK(b.scaling[0].applicable);
    // ||F||_1 = K R_K ||f||_1 in d = 1
    CHECK(b.scaling[0].lhs == b.scaling[0].rhs);
    CHECK(static_cast<long long>(b.F[0].support_size()) == b.K * b.R_K / 2);
  }
}

TEST_CASE("inner identity holds for max and variation") {
  std::vector<long> N_list{1, 2, 3};
  for (long L : {2L, 3L}) {
    for (long K : {3L, 4L}) {
      TransferenceBuild b = build_transfer(SystemModel::cyclic(L), PolynomialFamily::linear1(),
                                           {delta_cyclic(L)}, K,
                                           ExponentTuple::diagonal(Exponent::of(2)));
      InnerIdentityReport max_rep =
          verify_inner_identity(b, N_list, FunctionalSpec::max(3));
      CHECK(max_rep.ok);
      CHECK(max_rep.mismatch_count == 0);
      CHECK(max_rep.points_checked == L * (K - 2) * b.R_K);

      InnerIdentityReport var_rep =
          verify_inner_identity(b, N_list, FunctionalSpec::variation(rat(2), 3));
      CHECK(var_rep.ok);
      CHECK(var_rep.mismatch_count == 0);
    }
  }
}

TEST_CASE("identity check detects a corrupted build") {
  TransferenceBuild b = build_transfer(SystemModel::cyclic(2), PolynomialFamily::linear1(),
                                       {delta_cyclic(2)}, 3,
                                       ExponentTuple::diagonal(Exponent::of(1)));
  // the lowest cell the averages read from the inner box is R_K + 2
  Point pt{0, b.R_K + 2};
  b.F[0].set(pt, b.F[0].eval(pt) + 1);
  InnerIdentityReport rep = verify_inner_identity(b, {1, 2, 3}, FunctionalSpec::max(3));
  CHECK(!rep.ok);
  CHECK(rep.mismatch_count > 0);
  REQUIRE(!rep.mismatches.empty());
  CHECK(rep.mismatches[0].product_value != rep.mismatches[0].cyclic_value);
}

TEST_CASE("square polynomial transfers too") {
  TransferenceBuild b = build_transfer(SystemModel::cyclic(3), PolynomialFamily::power1(2),
                                       {delta_cyclic(3)}, 3,
                                       ExponentTuple::diagonal(Exponent::of(1)));
  CHECK(b.R_K == 9);
  CHECK(b.multiset_ok);
  InnerIdentityReport rep = verify_inner_identity(b, {1, 2, 3}, FunctionalSpec::max(3));
  CHECK(rep.ok);
}

TEST_CASE("transfer inequality with the K/(K-2) factor") {
  const Rational factors[] = {rat(3), rat(2), rat(5, 3)};
  int i = 0;
  for (long K : {3, 4, 5}) {
    TransferenceBuild b = build_transfer(SystemModel::cyclic(2), PolynomialFamily::linear1(),
                                         {delta_cyclic(2)}, K,
                                         ExponentTuple::diagonal(Exponent::of(1)));
    TransferStep s = transfer_bound_step(b, FunctionalSpec::max(K), TransferNorm::Strong);
    CHECK(s.holds);
    CHECK(s.lhs_power >= s.rhs_power);
    REQUIRE(s.factor_exact.has_value());
    CHECK(*s.factor_exact == factors[i]);
    CHECK(s.factor_power == factors[i]);  // p0 = 1, d = 1
    ++i;
  }
}

TEST_CASE("weak transfer bound") {
  TransferenceBuild b = build_transfer(SystemModel::cyclic(2), PolynomialFamily::linear1(),
                                       {delta_cyclic(2)}, 4,
                                       ExponentTuple::diagonal(Exponent::of(1)));
  TransferStep s = transfer_bound_step(b, FunctionalSpec::max(4), TransferNorm::Weak);
  CHECK(s.holds);
}

TEST_CASE("demo sweeps the schedule") {
  TransferDemo d = transfer_bound_demo(SystemModel::cyclic(2), PolynomialFamily::linear1(),
                                       {delta_cyclic(2)}, FunctionalSpec::max(3),
                                       ExponentTuple::diagonal(Exponent::of(1)), {3, 4, 5});
  CHECK(d.all_hold);
  REQUIRE(d.steps.size() == 3);
  CHECK(d.steps[0].K == 3);
  CHECK(d.steps[2].K == 5);
}

TEST_CASE("K below 3 is rejected") {
  CHECK_THROWS_AS(build_transfer(SystemModel::cyclic(2), PolynomialFamily::linear1(),
                                 {delta_cyclic(2)}, 2,
                                 ExponentTuple::diagonal(Exponent::of(1))),
                  domain_error);
}
