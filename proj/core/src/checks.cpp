#include "mennicke/checks.hpp"

#include "mennicke/collector.hpp"
#include "mennicke/ggroup.hpp"
#include "mennicke/mendo.hpp"
#include "mennicke/sampling.hpp"

#include <string>

namespace mennicke {

namespace {

std::string failures(std::size_t bad, std::size_t of) {
  return std::to_string(bad) + " failures in " + std::to_string(of);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t n) { return seed * 0x9e3779b97f4a7c15ULL + n; }

const MElem x = MElem::x(), y = MElem::y(), z = MElem::z();

}  // namespace

Report m2_structure_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  rep.check("[y,x] = x^2", comm(y, x) == MElem{2, 0, 0});
  rep.check("[z,y] = y^2", comm(z, y) == MElem{0, 2, 0});
  rep.check("[x,z] = z^2", comm(x, z) == MElem{0, 0, 2});
  Sampler s(seed);
  std::size_t sq = 0, cm = 0, m2ab = 0, cls = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const MElem p = s.melem(20), q = s.melem(20);
    if (!in_M2(mul(p, p))) ++sq;
    if (!in_M2(comm(p, q))) ++cm;
    const MElem a{2 * s.uniform(10), 2 * s.uniform(10), 2 * s.uniform(10)};
    const MElem b{2 * s.uniform(10), 2 * s.uniform(10), 2 * s.uniform(10)};
    if (mul(a, b) != mul(b, a) || mul(a, b) != MElem{a.i + b.i, a.j + b.j, a.k + b.k}) ++m2ab;
    // The class map is a homomorphism onto C2^3.
    if (static_cast<unsigned>(coset_class(mul(p, q))) !=
        (static_cast<unsigned>(coset_class(p)) ^ static_cast<unsigned>(coset_class(q))))
      ++cls;
  }
  rep.check("squares lie in M^2", sq == 0, failures(sq, samples));
  rep.check("commutators lie in M^2", cm == 0, failures(cm, samples));
  rep.check("M^2 free abelian on x^2, y^2, z^2", m2ab == 0, failures(m2ab, samples));
  rep.check("M/M^2 = C2 x C2 x C2 with 8 cosets", cls == 0 && kCosetClasses.size() == 8,
            failures(cls, samples));
  return rep;
}

Report normal_form_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  std::size_t bad = 0, confl = 0;
  const std::size_t confl_samples = std::min<std::size_t>(samples, 2000);
  for (std::size_t n = 0; n < samples; ++n) {
    const Word a = random_word(sub_seed(seed, 2 * n), GroupId::M, 64, 8);
    const Word b = random_word(sub_seed(seed, 2 * n + 1), GroupId::M, 64, 8);
    const Word ab = collect(a * b, GroupId::M);
    if (from_normal_word(ab) != mul(eval_m(a), eval_m(b))) ++bad;
    if (n < confl_samples && collect_randomized(a * b, GroupId::M, n) != ab) ++confl;
  }
  rep.check("closed-form mul matches the collector", bad == 0, failures(bad, samples));
  rep.check("collection order does not change the normal form", confl == 0,
            failures(confl, confl_samples));
  rep.check("x y z x collects to y z^-1",
            to_string(collect(parse_word("x y z x", GroupId::M), GroupId::M)) == "y z^-1");
  rep.check("(xyz)^2 = 1", mul(MElem{1, 1, 1}, MElem{1, 1, 1}).is_identity());

  Sampler s(seed);
  std::size_t assoc = 0, inverse = 0, fhom = 0, finj = 0, dinf = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const MElem p = s.melem(30), q = s.melem(30), r = s.melem(30);
    if (mul(mul(p, q), r) != mul(p, mul(q, r))) ++assoc;
    if (!mul(p, inv(p)).is_identity() || !mul(inv(p), p).is_identity() || mul(MElem{}, p) != p) ++inverse;
    for (auto f : {f1, f2, f3})
      if (f(mul(p, q)) != dinf_mul(f(p), f(q))) ++fhom;
    if (p != q && f1(p) == f1(q) && f2(p) == f2(q) && f3(p) == f3(q)) ++finj;
    const DInfElem d1{s.uniform(20), s.bit()}, d2{s.uniform(20), s.bit()}, d3{s.uniform(20), s.bit()};
    if (dinf_mul(dinf_mul(d1, d2), d3) != dinf_mul(d1, dinf_mul(d2, d3)) ||
        !(dinf_mul(d1, dinf_inv(d1)) == DInfElem{}))
      ++dinf;
  }
  rep.check("associativity", assoc == 0, failures(assoc, samples));
  rep.check("identity and inverse laws", inverse == 0, failures(inverse, samples));
  bool frel = true;
  for (auto f : {f1, f2, f3}) {
    const auto conj_d = [](const DInfElem& a, const DInfElem& g) { return dinf_mul(dinf_inv(g), dinf_mul(a, g)); };
    if (conj_d(f(x), f(y)) != dinf_inv(f(x)) || conj_d(f(y), f(z)) != dinf_inv(f(y)) ||
        conj_d(f(z), f(x)) != dinf_inv(f(z)))
      frel = false;
  }
  rep.check("f1, f2, f3 preserve the defining relations", frel);
  rep.check("f1, f2, f3 multiplicative", fhom == 0, failures(fhom, samples));
  rep.check("f1, f2, f3 jointly injective", finj == 0, failures(finj, samples));
  rep.check("D_inf group law", dinf == 0, failures(dinf, samples));
  rep.check("f1(xyz) = uv and f2(xyz) = uv",
            f1(MElem{1, 1, 1}) == DInfElem{1, true} && f2(MElem{1, 1, 1}) == DInfElem{1, true});
  return rep;
}

Report center_gamma_check(std::uint64_t seed, std::size_t samples, long box) {
  Report rep;
  bool exact = true;
  std::string detail;
  for (const auto& e : conjugator_solutions({{x, x}, {y, y}, {z, z}})) {
    if (e.solution && !e.solution->is_identity()) exact = false;
    if (e.solution) detail += coset_label(e.parity) + ": " + to_string(*e.solution) + " ";
  }
  rep.check("Z(M) = 1 by exact solve", exact, detail);
  std::size_t central = 0, disagree = 0;
  for (long i = -box; i <= box; ++i)
    for (long j = -box; j <= box; ++j)
      for (long k = -box; k <= box; ++k) {
        const MElem p{i, j, k};
        const bool c = comm(p, x).is_identity() && comm(p, y).is_identity() && comm(p, z).is_identity();
        if (c != is_central(p)) ++disagree;
        if (c && !p.is_identity()) ++central;
      }
  rep.check("box search: only 1 is central", central == 0 && disagree == 0,
            "box " + std::to_string(box) + ", " + std::to_string(disagree) + " disagreements");
  Sampler s(seed);
  std::size_t filt = 0;
  for (std::size_t t = 0; t < samples; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(s.below(8));
    const Int scale = Int(1) << (n - 1);
    const MElem g = s.melem(20);
    MElem h = s.melem(20);
    if (n > 1) h = {h.i * scale, h.j * scale, h.k * scale};
    if (!in_gamma(h, n) || !in_gamma(comm(g, h), n + 1) || !in_gamma(comm(h, g), n + 1)) ++filt;
  }
  rep.check("[M, gamma_n] lies in gamma_(n+1)", filt == 0, failures(filt, samples));
  bool index8 = true;
  for (unsigned n = 1; n <= 10; ++n) {
    // The conditions are coordinatewise; count along each axis.
    const long side = 1L << (n + 1);
    Int ratio = 1;
    for (int axis = 0; axis < 3; ++axis) {
      long in_n = 0, in_n1 = 0;
      for (long t = 0; t < side; ++t) {
        const MElem p{axis == 0 ? t : 0, axis == 1 ? t : 0, axis == 2 ? t : 0};
        in_n += in_gamma(p, n);
        in_n1 += in_gamma(p, n + 1);
      }
      if (in_n1 == 0 || in_n % in_n1 != 0) index8 = false;
      else ratio *= in_n / in_n1;
    }
    if (ratio != 8) index8 = false;
  }
  rep.check("[gamma_n : gamma_(n+1)] = 8 for n <= 10", index8);
  rep.check("gamma_3 contains x^4 y^4 z^-8", in_gamma(MElem{4, 4, -8}, 3));
  return rep;
}

Report torsion_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  Sampler s(seed);
  std::size_t mismatch = 0, odd_fail = 0, finite = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const MElem p = s.melem(25);
    const Order o = order(p);
    const Order by_square = p.is_identity() ? Order::One
                            : mul(p, p).is_identity() ? Order::Two
                                                      : Order::Infinite;
    if (o != by_square) ++mismatch;
    const MElem odd{2 * s.uniform(25) + 1, 2 * s.uniform(25) + 1, 2 * s.uniform(25) + 1};
    if (!mul(odd, odd).is_identity()) ++odd_fail;
    if (coset_class(p) != CosetClass::XYZ && !p.is_identity()) {
      MElem acc = p;
      for (int k = 1; k <= 16; ++k, acc = mul(acc, p))
        if (acc.is_identity()) {
          ++finite;
          break;
        }
    }
  }
  rep.check("order() matches explicit squaring", mismatch == 0, failures(mismatch, samples));
  rep.check("all-odd elements square to 1", odd_fail == 0, failures(odd_fail, samples));
  rep.check("no element outside xyzM^2 other than 1 has order <= 16", finite == 0,
            failures(finite, samples));
  rep.check("order(x^-1 y z) = 2, order(x) infinite",
            order(MElem{-1, 1, 1}) == Order::Two && order(x) == Order::Infinite &&
                order(MElem{}) == Order::One);
  return rep;
}

Report conjugation_formulas_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  Sampler s(seed);
  std::size_t bad = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const Int a = s.uniform(30), c = s.uniform(30);
    const Int sa = is_odd(a) ? -c : c;
    // (z^c)^(x^a) = z^(c(-1)^a) and its cyclic images.
    if (conj(MElem{0, 0, c}, MElem{a, 0, 0}) != MElem{0, 0, sa}) ++bad;
    if (conj(MElem{c, 0, 0}, MElem{0, a, 0}) != MElem{sa, 0, 0}) ++bad;
    if (conj(MElem{0, c, 0}, MElem{0, 0, a}) != MElem{0, sa, 0}) ++bad;
    // x^2 commutes with x, y^2 with y, z^2 with z, and (x^2c)^z = x^2c.
    if (conj(MElem{2 * c, 0, 0}, MElem{0, 0, a}) != MElem{2 * c, 0, 0}) ++bad;
  }
  rep.check("(z^c)^(x^a) = z^(c(-1)^a) and cyclic images", bad == 0, failures(bad, samples));
  rep.check("x^y = x^-1, y^z = y^-1, z^x = z^-1",
            conj(x, y) == inv(x) && conj(y, z) == inv(y) && conj(z, x) == inv(z));
  return rep;
}

Report lambda_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  Sampler s(seed);
  std::size_t fixes = 0, inner_trivial = 0, transposition = 0, functor = 0, autom = 0;
  const auto idx = [](CosetClass c) { return static_cast<unsigned>(c); };
  for (std::size_t n = 0; n < samples; ++n) {
    const GElem g = s.gelem(4), h = s.gelem(4);
    const MEndo e = semantic(g), f = semantic(h);
    const ClassPerm p = lambda_perm(e);
    if (p[idx(CosetClass::One)] != CosetClass::One || p[idx(CosetClass::XYZ)] != CosetClass::XYZ) ++fixes;
    // A transposition of {xy, yz, zx} fixes exactly one of them.
    int fixed = 0;
    for (auto c : {CosetClass::XY, CosetClass::YZ, CosetClass::ZX}) fixed += p[idx(c)] == c;
    if (fixed == 1) ++transposition;
    const ClassPerm q = lambda_perm(inner(s.melem(20)));
    for (auto c : kCosetClasses)
      if (q[idx(c)] != c) {
        ++inner_trivial;
        break;
      }
    if (m2_matrix(compose(e, f)) != matmul(m2_matrix(e), m2_matrix(f))) ++functor;
    if (!is_automorphism(e) || compose(e, semantic(ginv(g))) != MEndo::identity()) ++autom;
  }
  rep.check("every automorphism fixes 1 and xyzM^2", fixes == 0, failures(fixes, samples));
  rep.check("no automorphism induces a transposition on {xy, yz, zx}", transposition == 0,
            failures(transposition, samples));
  rep.check("inner automorphisms act trivially on M/M^2", inner_trivial == 0,
            failures(inner_trivial, samples));
  rep.check("m2_matrix respects composition", functor == 0, failures(functor, samples));
  rep.check("is_automorphism agrees with explicit inverses", autom == 0, failures(autom, samples));
  const MEndo squares{MElem{2, 0, 0}, y, z};
  rep.check("x -> x^2 is rejected by the relation check",
            relation_check(squares) == MRelation::ZX);
  return rep;
}

Report orbit_partition_check() {
  Report rep;
  const std::vector<MEndo> gens = {theta(),  a_endo(),  b_endo(), c_endo(),
                                   inner(x), inner(y), inner(z)};
  const std::string got = to_string(orbits(gens));
  rep.check("Aut(M)-orbits on M/M^2 are {1} {xyz} {x,y,z} {xy,yz,zx}",
            got == "{1} {xyz} {x,y,z} {xy,yz,zx}", got);
  const ClassPerm t = lambda_perm(theta());
  const auto idx = [](CosetClass c) { return static_cast<unsigned>(c); };
  rep.check("theta permutes (x y z)(xy yz zx)",
            t[idx(CosetClass::X)] == CosetClass::Y && t[idx(CosetClass::Y)] == CosetClass::Z &&
                t[idx(CosetClass::Z)] == CosetClass::X && t[idx(CosetClass::XY)] == CosetClass::YZ &&
                t[idx(CosetClass::YZ)] == CosetClass::ZX && t[idx(CosetClass::ZX)] == CosetClass::XY);
  return rep;
}

Report kernel_structure_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  const auto rep_of = [](int bits) { return kernel_rep(2 * (bits & 1), 2 * (bits >> 1 & 1), 2 * (bits >> 2 & 1)); };
  const auto inverse = [](const MEndo& e) { return semantic(ginv(recognize(e))); };
  bool valid = true, non_inner = true, squares = true, table = true, trivial = true;
  for (int a = 0; a < 8; ++a) {
    const MEndo e = rep_of(a);
    if (relation_check(e) || !is_automorphism(e)) valid = false;
    for (auto c : kCosetClasses)
      if (lambda_perm(e)[static_cast<unsigned>(c)] != c) trivial = false;
    if (a != 0 && is_inner(e)) non_inner = false;
    if (!is_inner(compose(e, e))) squares = false;
    for (int b = 0; b < 8; ++b)
      if (!is_inner(compose(compose(e, rep_of(b)), inverse(rep_of(a ^ b))))) table = false;
  }
  rep.check("representatives (r,s,t in {0,2}) are automorphisms", valid);
  rep.check("representatives act trivially on M/M^2", trivial);
  rep.check("squares are inner", squares);
  rep.check("products agree with XOR modulo inner automorphisms", table);
  rep.check("the 7 nonzero representatives are not inner", non_inner);
  rep.check("identity representative is inner", is_inner(rep_of(0)).has_value());
  Sampler s(seed);
  std::size_t round = 0, fam = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const MElem m = s.melem(20);
    const auto w = is_inner(inner(m));
    if (!w || *w != m) ++round;
    const MEndo p = p_family(s.uniform(6), s.uniform(6), s.uniform(6));
    if (relation_check(p) || !is_automorphism(p)) ++fam;
  }
  rep.check("is_inner(inner(m)) recovers m", round == 0, failures(round, samples));
  rep.check("every P(c,d,g) is an automorphism", fam == 0, failures(fam, samples));
  rep.check("theta is not inner", !is_inner(theta()));
  return rep;
}

Report g_arithmetic_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  rep.merge(consequence_relations_check());
  Sampler s(seed);
  std::size_t round = 0, functor = 0, collector = 0, distinct = 0, member = 0, inverse = 0;
  const std::size_t words = std::min<std::size_t>(samples, 3000);
  for (std::size_t n = 0; n < samples; ++n) {
    const GElem g = s.gelem(6), h = s.gelem(6);
    if (recognize(semantic(g)) != g) ++round;
    if (semantic(gmul(g, h)) != compose(semantic(g), semantic(h))) ++functor;
    if (g != h && semantic(g) == semantic(h)) ++distinct;
    if (!gmul(g, ginv(g)).is_identity()) ++inverse;
    if (n < words) {
      const Word w = random_word(sub_seed(seed, n), GroupId::G, 12, 3);
      const Word c = collect(w, GroupId::G);
      if (from_normal_form(c) != eval_g(w) || semantic_word(w) != semantic(eval_g(w))) ++collector;
    }
    // Random products of the listed generators stay inside each subgroup.
    for (GSubgroup sub : kGSubgroups) {
      const auto gens = subgroup_generators(sub);
      GElem acc;
      for (int t = 0; t < 4; ++t) acc = gmul(acc, gpow(gens[s.below(static_cast<long>(gens.size()))], s.uniform(2)));
      if (!subgroup_membership(acc, sub)) ++member;
    }
  }
  rep.check("recognize(semantic(g)) = g", round == 0, failures(round, samples));
  rep.check("semantic(gh) = semantic(g) semantic(h)", functor == 0, failures(functor, samples));
  rep.check("distinct normal forms give distinct automorphisms", distinct == 0, failures(distinct, samples));
  rep.check("ginv is an inverse", inverse == 0, failures(inverse, samples));
  rep.check("gmul and semantic match the collector on random words", collector == 0,
            failures(collector, words));
  rep.check("membership predicates contain products of generators", member == 0,
            failures(member, samples));
  rep.check("recognize(theta) = D", recognize(theta()) == GElem::D());
  rep.check("A A = Z^2", to_string(collect(parse_word("A A", GroupId::G), GroupId::G)) == "Z^2");
  rep.check("D ranks: D in G^2, not in [G,G]",
            subgroup_membership(GElem::D(), GSubgroup::G2) && !subgroup_membership(GElem::D(), GSubgroup::GG));
  return rep;
}

}  // namespace mennicke
