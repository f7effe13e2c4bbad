#include "doctest.h"

#include "ergomax/embed.hpp"

using namespace ergomax;

TEST_CASE("rokhlin placement lands forward ordered") {
  // F supported on [1, 3] goes to residues M-1, M-2, M-3 reversed:
  // f(M - l) = F(L + 1 - l)
  Signal F = signal1({{1, rat(5)}, {2, rat(7)}, {3, rat(11)}});
  EmbedReport r = rokhlin_embed(F, 3, 10, 1);
  CHECK(r.build.disjoint_ok);
  CHECK(r.build.f.eval(9) == 11);  // M - 1 <- F(3)
  CHECK(r.build.f.eval(8) == 7);
  CHECK(r.build.f.eval(7) == 5);
  CHECK(r.build.f.eval(0) == 0);
}

TEST_CASE("embedding preserves norms exactly") {
  Signal F = signal1({{1, rat(1, 2)}, {2, rat(3)}, {4, rat(2, 5)}});
  for (unsigned long p : {1ul, 2ul, 3ul}) {
    EmbedReport r = rokhlin_embed(F, 4, 11, p);
    CHECK(r.norm_equal);
    CHECK(r.f_norm_power == r.F_norm_power);
    CHECK(r.ok());
  }
}

TEST_CASE("host maximal dominates along the tower") {
  Signal F = signal1({{1, rat(2)}, {3, rat(1)}});
  EmbedReport r = rokhlin_embed(F, 3, 9, 2);
  CHECK(r.dominates_pointwise);
  CHECK(r.ratio_no_decrease);
  CHECK(r.host_ratio_power >= r.restricted_ratio_power);
}

TEST_CASE("minimal cycle length M = 2L") {
  Signal F = signal1({{1, rat(1)}, {2, rat(1)}});
  EmbedReport r = rokhlin_embed(F, 2, 4, 1);
  CHECK(r.ok());
  CHECK_THROWS_AS(rokhlin_embed(F, 2, 3, 1), domain_error);
}

TEST_CASE("support must sit inside the window") {
  Signal F = signal1({{0, rat(1)}});
  CHECK_THROWS_AS(rokhlin_embed(F, 2, 8, 1), domain_error);
  Signal G = signal1({{3, rat(1)}});
  CHECK_THROWS_AS(rokhlin_embed(G, 2, 8, 1), domain_error);
  Signal Z(1);
  CHECK_THROWS_AS(rokhlin_embed(Z, 2, 8, 1), domain_error);
}

TEST_CASE("ratio transfer on a stretch of ones") {
  // the flat profile is the weak extremizer shape; its restricted ratio
  // must survive the trip into the cycle at every integer p
  Signal F(1);
  for (long long l = 1; l <= 5; ++l) F.set({l}, rat(1));
  for (unsigned long p : {1ul, 2ul}) {
    EmbedReport r = rokhlin_embed(F, 5, 12, p);
    CHECK(r.ok());
    CHECK(r.host_ratio_power >= 1);
  }
}
