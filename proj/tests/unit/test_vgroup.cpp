#include "doctest.h"

#include "mennicke/pgroup.hpp"
#include "mennicke/sampling.hpp"
#include "mennicke/vgroup.hpp"

using namespace mennicke;

namespace {

GElem word(const char* text) { return eval_g(parse_word(text, GroupId::G)); }

// Psi^-1 e Psi, left to right.
VEndo psi_conjugate(const VEndo& e) { return vcompose(vcompose(psi_inv(), e), psi()); }

}  // namespace

TEST_CASE("V membership and generators") {
  CHECK(VElem::u().m() == MElem{1, 1, 0});
  CHECK(VElem::w().m() == mul(MElem::z(), MElem::x()));
  CHECK_THROWS_AS(VElem(MElem::x()), std::invalid_argument);
  CHECK(vpow(VElem::u(), 2).m() == MElem{0, 2, 0});
  CHECK(vpow(VElem::w(), 2).m() == MElem{2, 0, 0});
}

TEST_CASE("Psi") {
  CHECK(vapply(psi(), VElem::u()).m() == MElem{-1, 1, 0});
  CHECK_FALSE(v_relation_check(psi()).has_value());
  CHECK_FALSE(v_relation_check(psi_inv()).has_value());
  CHECK(vcompose(psi(), psi_inv()) == VEndo::identity());
  CHECK(vcompose(psi_inv(), psi()) == VEndo::identity());
  CHECK(pi_perm(psi()) == VPerm{0, 1, 3, 2});
  CHECK_FALSE(extend_to_M(psi()).has_value());
  CHECK(vcompose(psi(), psi()) == restrict(psi_square_cocycle()));
  CHECK(psi_square_cocycle() == word("A B C"));
}

TEST_CASE("bad V endomorphism is rejected") {
  VElem u2 = vpow(VElem::u(), 2);
  CHECK(v_relation_check(VEndo{u2, VElem::v(), VElem::w()}).has_value());
}

TEST_CASE("tau on generators") {
  CHECK(tau(GElem::X()) == word("Y^-1 A B C"));
  CHECK(tau(GElem::Y()) == word("X^-1 A B C"));
  CHECK(tau(GElem::Z()) == word("Z^-1 A B C"));
  CHECK(tau(GElem::A()) == GElem::B());
  CHECK(tau(GElem::B()) == GElem::A());
  CHECK(tau(GElem::C()) == GElem::C());
  CHECK(tau(GElem::D()) == gpow(GElem::D(), 2));
  for (const GElem& g : g_generators()) {
    CHECK(restrict(tau(g)) == psi_conjugate(restrict(g)));
    CHECK(tau_inv(tau(g)) == g);
  }
}

TEST_CASE("tau is multiplicative and restriction round trips") {
  Sampler s(23);
  for (int n = 0; n < 300; ++n) {
    GElem g = s.gelem(5), h = s.gelem(5);
    CHECK(tau(gmul(g, h)) == gmul(tau(g), tau(h)));
    CHECK(extend_to_M(restrict(g)) == g);
    CHECK(vcompose(restrict(g), restrict(h)) == restrict(gmul(g, h)));
  }
}

TEST_CASE("tau leaves Inn(G)<E>") {
  // Conjugation and E both fix the D-exponent of D, tau squares it.
  Sampler s(29);
  for (int n = 0; n < 300; ++n) {
    PElem p{s.gelem(5), s.bit()};
    CHECK(act(p, GElem::D()).l == 1);
  }
  CHECK(tau(GElem::D()).l == 2);
}

TEST_CASE("V classes") {
  CHECK(v_class(VElem::identity()) == 0);
  CHECK(v_class(VElem::u()) == 1);
  CHECK(v_class(VElem::v()) == 2);
  CHECK(v_class(VElem::w()) == 3);
  CHECK(v_class(vpow(VElem::w(), 6)) == 0);
}
