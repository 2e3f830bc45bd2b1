#include "doctest.h"

#include "mennicke/collector.hpp"
#include "mennicke/mgroup.hpp"
#include "mennicke/sampling.hpp"

using namespace mennicke;

namespace {

// D_inf as affine maps t -> eps t + shift of Z, composed as functions.
struct Affine {
  Int eps, shift;
  bool operator==(const Affine&) const = default;
};

Affine affine_of(const DInfElem& d) { return {d.j ? Int(-1) : Int(1), d.i}; }

Affine compose_affine(const Affine& p, const Affine& q) {
  return {p.eps * q.eps, p.shift + p.eps * q.shift};
}

}  // namespace

TEST_CASE("multiplication examples") {
  CHECK(mul(MElem{1, 1, 0}, MElem{1, 0, -1}) == MElem{0, 1, -1});
  CHECK(inv(MElem{1, 1, 0}) == MElem{1, -1, 0});
  CHECK(mul(MElem::x(), MElem::y(), MElem::z(), MElem::x()) == MElem{0, 1, -1});
  CHECK(conj(MElem::x(), MElem::y()) == MElem{-1, 0, 0});
  CHECK(conj(MElem::y(), MElem::z()) == MElem{0, -1, 0});
  CHECK(conj(MElem::z(), MElem::x()) == MElem{0, 0, -1});
}

TEST_CASE("coset classes") {
  CHECK(coset_class(MElem{3, -2, 5}) == CosetClass::ZX);
  CHECK(coset_label(CosetClass::ZX) == "zx");
  CHECK(in_M2(MElem{2, -4, 0}));
  CHECK_FALSE(in_M2(MElem{2, -4, 1}));
  CHECK(in_V(MElem{1, 1, 0}));
  CHECK(in_gamma(MElem{4, 4, -8}, 3));
  CHECK_FALSE(in_gamma(MElem{2, 0, 0}, 3));
}

TEST_CASE("D_inf maps") {
  CHECK(f1(MElem{1, 1, 1}) == DInfElem{1, true});
  CHECK(dinf_mul(DInfElem{1, true}, DInfElem{1, true}) == DInfElem{0, false});
  Sampler s(5);
  for (int n = 0; n < 500; ++n) {
    DInfElem p{s.uniform(20), s.bit()}, q{s.uniform(20), s.bit()};
    CHECK(affine_of(dinf_mul(p, q)) == compose_affine(affine_of(p), affine_of(q)));
  }
}

TEST_CASE("f1, f2, f3 are homomorphisms and jointly faithful") {
  Sampler s(11);
  for (int n = 0; n < 2000; ++n) {
    MElem p = s.melem(30), q = s.melem(30);
    MElem pq = mul(p, q);
    CHECK(f1(pq) == dinf_mul(f1(p), f1(q)));
    CHECK(f2(pq) == dinf_mul(f2(p), f2(q)));
    CHECK(f3(pq) == dinf_mul(f3(p), f3(q)));
  }
  // f1 and f2 give i and j; f3 gives v^i u^k = u^(+-k) v^i. So the joint map
  // recovers every coordinate and is injective.
  for (int n = 0; n < 200; ++n) {
    MElem p = s.melem(30);
    DInfElem a = f1(p), b = f2(p), c = f3(p);
    MElem back{a.i, b.i, signed_by(c.i, a.i)};
    CHECK(back == p);
  }
}

TEST_CASE("closed form against the collector") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Word w = random_word(seed, GroupId::M, 32, 6);
    CHECK(from_normal_word(collect(w, GroupId::M)) == eval_m(w));
  }
}

TEST_CASE("orders") {
  CHECK(order(MElem::identity()) == Order::One);
  CHECK(order(MElem{1, 1, 1}) == Order::Two);
  CHECK(order(MElem{3, -5, 7}) == Order::Two);
  CHECK(order(MElem{1, 0, 0}) == Order::Infinite);
  CHECK(order(MElem{1, 1, 2}) == Order::Infinite);
  CHECK(pow(MElem{3, -5, 7}, 2).is_identity());
}

TEST_CASE("center is trivial on a box") {
  for (long i = -3; i <= 3; ++i)
    for (long j = -3; j <= 3; ++j)
      for (long k = -3; k <= 3; ++k) {
        MElem p{i, j, k};
        bool brute = mul(p, MElem::x()) == mul(MElem::x(), p) &&
                     mul(p, MElem::y()) == mul(MElem::y(), p) &&
                     mul(p, MElem::z()) == mul(MElem::z(), p);
        CHECK(brute == p.is_identity());
        CHECK(is_central(p) == brute);
      }
}
