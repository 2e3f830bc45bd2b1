#include "doctest.h"

#include <set>

#include "mennicke/f2quot.hpp"
#include "mennicke/sampling.hpp"

using namespace mennicke;

namespace {

// Set of elements of span{a, b, c} as a 64-bit mask.
std::uint64_t span_mask(F2Vec a, F2Vec b, F2Vec c) {
  std::uint64_t m = 0;
  for (int s = 0; s < 8; ++s) {
    F2Vec v = ((s & 1) ? a : 0) ^ ((s & 2) ? b : 0) ^ ((s & 4) ? c : 0);
    m |= std::uint64_t{1} << v;
  }
  return m;
}

std::uint64_t mask_of(const F2Subspace& s) {
  std::uint64_t m = 0;
  for (F2Vec v : s.elements()) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace

TEST_CASE("three-dimensional subspaces against brute force") {
  std::set<std::uint64_t> brute;
  for (int a = 1; a < 64; ++a)
    for (int b = 1; b < 64; ++b)
      for (int c = 1; c < 64; ++c) {
        std::uint64_t m = span_mask(a, b, c);
        if (__builtin_popcountll(m) == 8) brute.insert(m);
      }
  CHECK(brute.size() == 1395);
  auto subs = enumerate_3subspaces();
  CHECK(subs.size() == 1395);
  std::set<std::uint64_t> ours;
  for (const auto& s : subs) {
    CHECK(s.dim() == 3);
    ours.insert(mask_of(s));
  }
  CHECK(ours == brute);
}

TEST_CASE("subspace canonical form and serialization") {
  F2Subspace r = F2Subspace::span({0b001000, 0b010000, 0b100000});
  CHECK(to_string(r) == "000100 000010 000001");
  CHECK(parse_f2subspace(to_string(r)) == r);
  F2Subspace q = F2Subspace::span({0b001001, 0b010010, 0b100100, 0b011011});
  CHECK(q.dim() == 3);
  CHECK(to_string(q) == "100100 010010 001001");
  CHECK(F2Subspace::span({0b000011, 0b000101}) == F2Subspace::span({0b000110, 0b000011}));
  CHECK(to_string(F2Subspace::span({})) == "0");
  for (const auto& s : enumerate_3subspaces()) CHECK(parse_f2subspace(to_string(s)) == s);
}

TEST_CASE("lift and reduction") {
  for (int v = 0; v < 64; ++v) CHECK(s_image(lift(v)) == v);
  CHECK(f2vec_label(0b001001) == "X A");
  CHECK(f2vec_label(0) == "1");
}

TEST_CASE("quotient orders") {
  CHECK(materialize(QuotientId::GModGG2).order() == 192);
  CHECK(materialize(QuotientId::GModGG).order() == 12);
  CHECK(materialize(QuotientId::PModM2).order() == 384);
  CHECK(materialize(QuotientId::PModPP).order() == 12);
}

TEST_CASE("group axioms exhaustively on 192 and sampled on 384") {
  CHECK(materialize(QuotientId::GModGG2).check_axioms(1, 0));
  CHECK(materialize(QuotientId::GModGG).check_axioms(1, 0));
  CHECK(materialize(QuotientId::PModPP).check_axioms(1, 0));
  CHECK(materialize(QuotientId::PModM2).check_axioms(1, 1000000));
}

TEST_CASE("reduction is a homomorphism") {
  Sampler s(41);
  for (QuotientId id : {QuotientId::GModGG2, QuotientId::GModGG, QuotientId::PModM2,
                        QuotientId::PModPP}) {
    const auto& t = materialize(id);
    bool with_e = id == QuotientId::PModM2 || id == QuotientId::PModPP;
    for (int n = 0; n < 500; ++n) {
      PElem p{s.gelem(9), with_e && s.bit()}, q{s.gelem(9), with_e && s.bit()};
      CHECK(t.locate(pmul(p, q)) == t.mul(t.locate(p), t.locate(q)));
    }
  }
}

TEST_CASE("finite group helpers") {
  const auto& t = materialize(QuotientId::GModGG2);
  auto g = t.all();
  CHECK(g.size() == 192);
  CHECK(t.derived(g).size() == 16);
  CHECK(t.is_normal(t.derived(g), g));
  CHECK(t.exponent(g) == 6);
  CHECK(t.element_order(t.locate(PElem::of(GElem::D()))) == 3);
  CHECK(t.is_abelian(t.derived(g)));
  CHECK_FALSE(t.is_abelian(g));
}

TEST_CASE("commutator lattices of the two survivors in the orbit of M") {
  Lattice3 m2 = Lattice3::full();
  CHECK(commutator_lattice({GElem::X(), GElem::Y(), GElem::Z()}) == m2);
  CHECK(commutator_lattice({lift(0b001001), lift(0b010010), lift(0b100100)}) == m2);
  Lattice3 four = Lattice3::span({IntVec3{2, 0, 0}, IntVec3{0, 2, 0}, IntVec3{0, 0, 2}});
  CHECK(commutator_lattice({lift(0b010001), lift(0b100010), lift(0b001100)}) == four);
}
