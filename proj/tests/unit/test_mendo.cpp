#include "doctest.h"

#include "mennicke/mendo.hpp"
#include "mennicke/sampling.hpp"

using namespace mennicke;

TEST_CASE("relation check") {
  CHECK_FALSE(relation_check(MEndo::identity()).has_value());
  CHECK_FALSE(relation_check(theta()).has_value());
  MEndo bad{MElem{2, 0, 0}, MElem::y(), MElem::z()};
  REQUIRE(relation_check(bad).has_value());
  CHECK(*relation_check(bad) == MRelation::ZX);
  CHECK_THROWS_AS(make_endo_checked(MElem{2, 0, 0}, MElem::y(), MElem::z()),
                  std::invalid_argument);
}

TEST_CASE("theta and the kernel generators") {
  CHECK(apply(theta(), MElem::x()) == MElem::y());
  CHECK(apply(theta(), MElem{1, 1, 1}) == MElem{-1, 1, -1});
  CHECK(apply(a_endo(), MElem::x()) == MElem{1, 0, 2});
  CHECK(apply(a_endo(), MElem::y()) == MElem::y());
  CHECK(m2_matrix(a_endo()) == identity_matrix3());
  IntMatrix3 ix = m2_matrix(inner(MElem::x()));
  CHECK(ix == IntMatrix3{{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}});
}

TEST_CASE("composition is left to right") {
  Sampler s(3);
  for (int n = 0; n < 200; ++n) {
    MElem g = s.melem(5), h = s.melem(5), p = s.melem(9);
    MEndo e = compose(inner(g), inner(h));
    CHECK(apply(e, p) == apply(inner(h), apply(inner(g), p)));
    CHECK(e == inner(mul(g, h)));
    CHECK(m2_matrix(e) == matmul(m2_matrix(inner(g)), m2_matrix(inner(h))));
  }
}

TEST_CASE("inner detection") {
  CHECK(is_inner(inner(MElem{2, -1, 3})) == MElem{2, -1, 3});
  CHECK_FALSE(is_inner(theta()).has_value());
  CHECK_FALSE(is_inner(a_endo()).has_value());
  for (int r : {0, 2})
    for (int s : {0, 2})
      for (int t : {0, 2}) {
        bool trivial = r == 0 && s == 0 && t == 0;
        CHECK(is_inner(kernel_rep(r, s, t)).has_value() == trivial);
      }
}

TEST_CASE("orbit partition of the eight cosets") {
  std::vector<MEndo> gens = {theta(), a_endo(), b_endo(), c_endo(), inner(MElem::x()),
                             inner(MElem::y()), inner(MElem::z())};
  CHECK(to_string(orbits(gens)) == "{1} {xyz} {x,y,z} {xy,yz,zx}");
}

TEST_CASE("endomorphism text round trip") {
  MEndo e = theta();
  CHECK(parse_mendo(to_string(e)) == e);
}
