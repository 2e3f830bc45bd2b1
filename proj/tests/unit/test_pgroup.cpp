#include "doctest.h"

#include "mennicke/collector.hpp"
#include "mennicke/pgroup.hpp"
#include "mennicke/sampling.hpp"

using namespace mennicke;

namespace {

GElem word(const char* text) { return eval_g(parse_word(text, GroupId::G)); }

}  // namespace

TEST_CASE("E relations") {
  PElem X = PElem::of(GElem::X()), E = PElem::E();
  CHECK(pcomm(X, E) == PElem::of(GElem::A()));
  CHECK(pmul(E, E) == PElem::of(word("A B C")));
  CHECK(e_action(GElem::X()) == word("X A"));
  CHECK(e_action(GElem::D()) == GElem::D());
  CHECK(e_inverse_action(e_action(word("X^3 Y B D"))) == word("X^3 Y B D"));
  CHECK(to_string(E) == "E");
  CHECK(to_string(PElem{GElem::A(), true}) == "A E");
}

TEST_CASE("P arithmetic") {
  Sampler s(31);
  for (int n = 0; n < 500; ++n) {
    PElem p{s.gelem(4), s.bit()}, q{s.gelem(4), s.bit()}, r{s.gelem(4), s.bit()};
    GElem h = s.gelem(4);
    CHECK(pmul(pmul(p, q), r) == pmul(p, pmul(q, r)));
    CHECK(pmul(p, pinv(p)).is_identity());
    CHECK(act(pmul(p, q), h) == act(q, act(p, h)));
    CHECK(act(p, gmul(h, GElem::D())) == gmul(act(p, h), act(p, GElem::D())));
  }
}

TEST_CASE("P words") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Word w = random_word(seed, GroupId::P, 16, 3);
    CHECK(eval_p(collect(w, GroupId::P)) == eval_p(w));
    PElem p = eval_p(w);
    CHECK(eval_p(to_word(p)) == p);
  }
}

TEST_CASE("E is an automorphism of G") {
  for (const auto& r : g_defining_relations()) {
    INFO(r.name);
    Word lhs = parse_word(r.lhs, GroupId::G), rhs = parse_word(r.rhs, GroupId::G);
    GElem a, b;
    for (const Letter& l : lhs) a = gmul(a, gpow(e_action(g_generator(l.gen)), l.exp));
    for (const Letter& l : rhs) b = gmul(b, gpow(e_action(g_generator(l.gen)), l.exp));
    CHECK(a == b);
  }
}
