#include "doctest.h"

#include "mennicke/collector.hpp"
#include "mennicke/ggroup.hpp"
#include "mennicke/sampling.hpp"

using namespace mennicke;

TEST_CASE("generators act as stated") {
  CHECK(semantic(GElem::D()) == theta());
  CHECK(semantic(GElem::A()) == a_endo());
  CHECK(semantic(GElem::B()) == b_endo());
  CHECK(semantic(GElem::C()) == c_endo());
  CHECK(semantic(GElem::X()) == inner(MElem::x()));
  CHECK(recognize(inner(MElem{1, 1, 0})) == gmul(GElem::X(), GElem::Y()));
}

TEST_CASE("presentation relations hold under the semantic functor") {
  auto check = [](const GRelation& r) {
    Word lhs = parse_word(r.lhs, GroupId::G), rhs = parse_word(r.rhs, GroupId::G);
    INFO(r.name);
    CHECK(semantic_word(lhs) == semantic_word(rhs));
    CHECK(eval_g(lhs) == eval_g(rhs));
    CHECK(collect(lhs, GroupId::G) == collect(rhs, GroupId::G));
  };
  CHECK(g_defining_relations().size() == 13);
  CHECK(g_consequence_relations().size() == 12);
  for (const auto& r : g_defining_relations()) check(r);
  for (const auto& r : g_consequence_relations()) check(r);
}

TEST_CASE("multiplication matches composition of automorphisms") {
  Sampler s(17);
  for (int n = 0; n < 1000; ++n) {
    GElem g = s.gelem(6), h = s.gelem(6);
    CHECK(semantic(gmul(g, h)) == compose(semantic(g), semantic(h)));
    CHECK(recognize(semantic(g)) == g);
    CHECK(gmul(g, ginv(g)).is_identity());
  }
}

TEST_CASE("normal form words") {
  GElem g = GElem::make(2, -1, 0, 1, 0, 1, 2);
  CHECK(to_string(g) == "X^2 Y^-1 A C D^2");
  CHECK(from_normal_form(to_word(g)) == g);
  CHECK_THROWS_AS(GElem::make(0, 0, 0, 2, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(recognize(MEndo{MElem{2, 0, 0}, MElem::y(), MElem::z()}), RecognitionError);
}

TEST_CASE("subgroup membership") {
  CHECK(subgroup_membership(GElem::X(), GSubgroup::InnM));
  CHECK_FALSE(subgroup_membership(GElem::A(), GSubgroup::InnM));
  CHECK(subgroup_membership(GElem::A(), GSubgroup::R));
  CHECK_FALSE(subgroup_membership(GElem::D(), GSubgroup::U));
  CHECK(subgroup_membership(gpow(GElem::X(), 2), GSubgroup::M2));
  for (GSubgroup sub : kGSubgroups)
    for (const GElem& g : subgroup_generators(sub)) CHECK(subgroup_membership(g, sub));
}
