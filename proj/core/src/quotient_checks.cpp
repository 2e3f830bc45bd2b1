#include "mennicke/f2quot.hpp"
#include "mennicke/sampling.hpp"
#include "mennicke/vgroup.hpp"

#include <algorithm>
#include <functional>

namespace mennicke {

namespace {

using Elem = FiniteGroupTable::Elem;
using Subgroup = FiniteGroupTable::Subgroup;

std::string size_str(std::size_t n) { return std::to_string(n); }

Elem at(const FiniteGroupTable& t, const GElem& g) { return t.locate(PElem::of(g)); }

Subgroup gen_sub(const FiniteGroupTable& t, const std::vector<PElem>& gens) {
  std::vector<Elem> keys;
  for (const auto& p : gens) keys.push_back(t.locate(p));
  return t.generate(keys);
}

std::string_view q_group_label(QuotientId q) {
  return q == QuotientId::PModM2 || q == QuotientId::PModPP ? "P" : "G";
}

PElem G(const GElem& g) { return PElem::of(g); }

}  // namespace

Report materialize_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  struct Expect {
    QuotientId id;
    std::size_t order;
    bool abelian;
    std::size_t assoc;  // 0: exhaustive
  };
  const Expect expects[] = {{QuotientId::GModGG2, 192, false, 0},
                            {QuotientId::GModGG, 12, true, 0},
                            {QuotientId::PModM2, 384, false, std::max<std::size_t>(samples, 1000)},
                            {QuotientId::PModPP, 12, true, 0}};
  Sampler s(seed);
  for (const auto& x : expects) {
    const auto& t = materialize(x.id);
    const std::string name(quotient_name(x.id));
    rep.check(name + " order", t.order() == x.order, size_str(t.order()));
    rep.check(name + (x.abelian ? " abelian" : " nonabelian"), t.is_abelian(t.all()) == x.abelian);
    rep.check(name + " group axioms", t.check_axioms(seed, x.assoc),
              x.assoc ? size_str(x.assoc) + " sampled triples" : "all triples");
    std::size_t bad = 0;
    const bool with_e = q_group_label(x.id) == "P";
    for (std::size_t n = 0; n < samples; ++n) {
      const PElem p{s.gelem(6), with_e && s.bit()}, q{s.gelem(6), with_e && s.bit()};
      if (t.locate(pmul(p, q)) != t.mul(t.locate(p), t.locate(q))) ++bad;
    }
    rep.check(name + " reduction is a homomorphism", bad == 0,
              size_str(bad) + " failures in " + size_str(samples));
  }
  return rep;
}

Report quotient_invariants() {
  Report rep;
  const auto& t = materialize(QuotientId::GModGG2);
  const Subgroup all = t.all();
  rep.check("|G/[G,G]^2| = 192", t.order() == 192);
  const Subgroup dg = t.derived(all);
  const Subgroup gg_expected = gen_sub(t, [] {
    std::vector<PElem> v;
    for (const auto& g : subgroup_generators(GSubgroup::GG)) v.push_back(G(g));
    return v;
  }());
  rep.check("[G,G]/M^2 = <XY,YZ,ZX,AB,BC,CA> of order 16", dg == gg_expected && dg.size() == 16,
            "order " + size_str(dg.size()));
  rep.check("|G/[G,G]| = 12", t.order() / dg.size() == 12 && materialize(QuotientId::GModGG).order() == 12);
  const Subgroup g2 = t.squares(all);
  const Subgroup g2_expected = gen_sub(t, [] {
    std::vector<PElem> v;
    for (const auto& g : subgroup_generators(GSubgroup::G2)) v.push_back(G(g));
    return v;
  }());
  rep.check("G^2 = <XY,YZ,ZX,AB,BC,CA,D>", g2 == g2_expected, "order " + size_str(g2.size()));
  rep.check("|G/G^2| = 4", t.order() / g2.size() == 4);
  const Subgroup m_img = gen_sub(t, {G(GElem::X()), G(GElem::Y()), G(GElem::Z())});
  rep.check("|M/M^2| = 8", m_img.size() == 8);
  rep.check("G not isomorphic to M: |G/G^2| = 4 but |M/M^2| = 8",
            t.order() / g2.size() != m_img.size());

  // Structure C2^6 x| C3.
  Subgroup two_elements;
  for (Elem a : all)
    if ((t.element_order(a) & (t.element_order(a) - 1)) == 0) two_elements.push_back(a);
  const Subgroup sylow = t.generate(two_elements);
  rep.check("unique Sylow 2-subgroup of order 64", two_elements.size() == 64 && sylow.size() == 64,
            size_str(two_elements.size()) + " elements of 2-power order");
  rep.check("Sylow 2-subgroup is elementary abelian", t.is_abelian(sylow) && t.exponent(sylow) == 2);
  const Subgroup u_img = gen_sub(t, {G(GElem::X()), G(GElem::Y()), G(GElem::Z()), G(GElem::A()),
                                     G(GElem::B()), G(GElem::C())});
  rep.check("Sylow 2-subgroup is U/M^2", sylow == u_img);
  rep.check("exponent 6", t.exponent(all) == 6, std::to_string(t.exponent(all)));
  const Elem d = at(t, GElem::D());
  bool two_cycles = true;
  const GElem cyc[2][3] = {{GElem::X(), GElem::Y(), GElem::Z()}, {GElem::A(), GElem::B(), GElem::C()}};
  for (const auto& c : cyc)
    for (int n = 0; n < 3; ++n)
      if (t.conj(at(t, c[n]), d) != at(t, c[(n + 1) % 3])) two_cycles = false;
  rep.check("D permutes the basis of S as (X Y Z)(A B C)", two_cycles && t.element_order(d) == 3);

  // Out(M) = G/Inn(M) = (K/Inn(M)) x| C3 with K/Inn(M) = C2^3.
  rep.check("Inn(M) normal in G", t.is_normal(m_img, all));
  rep.check("|Out(M)| = 24", t.order() / m_img.size() == 24);
  const Subgroup k_img = u_img;
  rep.check("K/Inn(M) elementary abelian of order 8",
            k_img.size() / m_img.size() == 8 && t.is_abelian(k_img) && t.exponent(k_img) == 2);
  rep.check("Out(M) nonabelian: [G,G] not inside Inn(M)",
            !std::includes(m_img.begin(), m_img.end(), dg.begin(), dg.end()));
  return rep;
}

Report e_not_inner_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  const auto& t = materialize(QuotientId::GModGG);
  const GElem ex = gmul(ginv(GElem::X()), e_action(GElem::X()));
  rep.check("X^-1 E(X) = A", ex == GElem::A(), to_string(ex));
  rep.check("A nontrivial in G/[G,G]", at(t, GElem::A()) != 0);
  Sampler s(seed);
  std::size_t moved = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const GElem g = s.gelem(6), h = s.gelem(6);
    if (at(t, gconj(h, g)) != at(t, h)) ++moved;
  }
  rep.check("inner automorphisms act trivially on G/[G,G]", moved == 0,
            size_str(moved) + " moved in " + size_str(samples));
  rep.check("E acts nontrivially on G/[G,G]", at(t, e_action(GElem::X())) != at(t, GElem::X()));
  rep.check("E^2 inner (conjugation by ABC), so E has order 2 in Out(G)",
            pmul(PElem::E(), PElem::E()) == G(gmul(GElem::A(), GElem::B(), GElem::C())));
  return rep;
}

Report section18_case_checks() {
  Report rep;
  const GElem X = GElem::X(), Y = GElem::Y(), Z = GElem::Z();
  const GElem A = GElem::A(), B = GElem::B(), C = GElem::C();
  const Lattice3 full = Lattice3::full();
  const Lattice3 fourth = Lattice3::span({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  const Lattice3 xc = Lattice3::span({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}});

  const auto case_line = [&](const std::string& label, const std::vector<GElem>& gens,
                             const Lattice3& expect, const std::string& expect_name) {
    const Lattice3 got = commutator_lattice(gens);
    rep.check(label + " has [Q,Q] = " + expect_name, got == expect, "[Q,Q] = " + to_string(got));
  };
  case_line("M = <X,Y,Z>M^2", {X, Y, Z}, full, "M^2");
  case_line("M^E = <XA,YB,ZC>M^2", {gmul(X, A), gmul(Y, B), gmul(Z, C)}, full, "M^2");
  case_line("<XB,YC,ZA>M^2", {gmul(X, B), gmul(Y, C), gmul(Z, A)}, fourth, "<X^4,Y^4,Z^4>");
  case_line("<XC,YA,ZB>M^2", {gmul(X, C), gmul(Y, A), gmul(Z, B)}, xc,
            "<X^2Z^2,Y^2X^2,Y^2Z^2,X^4,Y^4,Z^4>");
  rep.check("M^E = E(M)", s_image(e_action(X)) == s_image(gmul(X, A)) &&
                              s_image(e_action(Y)) == s_image(gmul(Y, B)) &&
                              s_image(e_action(Z)) == s_image(gmul(Z, C)));

  // Reductions through E, modulo M^2.
  const auto e_sends = [&](const GElem& from, const GElem& to) {
    return s_image(e_action(from)) == s_image(to);
  };
  rep.check("E maps XAB to XB mod M^2", e_sends(gmul(X, A, B), gmul(X, B)));
  rep.check("E maps XAC to XC mod M^2", e_sends(gmul(X, A, C), gmul(X, C)));
  rep.check("E maps XBC to XABC mod M^2", e_sends(gmul(X, B, C), gmul(X, A, B, C)));

  // The D-closed candidate containing XABC.
  const GElem abc = gmul(A, B, C);
  const std::vector<GElem> q_abc = {gmul(X, abc), gmul(Y, abc), gmul(Z, abc)};
  const F2Subspace w = F2Subspace::span({s_image(q_abc[0]), s_image(q_abc[1]), s_image(q_abc[2])});
  rep.check("<XABC,YABC,ZABC>M^2 contains X", w.contains(s_image(X)),
            "Q/M^2 = " + to_string(w) + " is 3-dimensional with [Q,Q] = " +
                to_string(commutator_lattice(q_abc)));
  const GElem tx = tau(X);
  rep.check("tau(M) = <XABC,YABC,ZABC>M^2",
            w == F2Subspace::span({s_image(tx), s_image(tau(Y)), s_image(tau(Z))}),
            "tau(X) = " + to_string(tx));
  return rep;
}

Report r_uniqueness_scan() {
  Report rep;
  const auto& t = materialize(QuotientId::GModGG2);
  const Elem conj_by[] = {at(t, GElem::X()), at(t, GElem::A()), at(t, GElem::D())};
  const std::vector<GElem> m2 = {GElem::make(2, 0, 0, 0, 0, 0, 0), GElem::make(0, 2, 0, 0, 0, 0, 0),
                                 GElem::make(0, 0, 2, 0, 0, 0, 0)};
  const auto subspaces = enumerate_3subspaces();
  std::size_t normal = 0;
  std::vector<F2Subspace> passing;
  for (const auto& sub : subspaces) {
    bool is_normal = true;
    for (F2Vec v : sub.elements())
      for (Elem s : conj_by) {
        const Elem c = t.conj(static_cast<Elem>(v), s);
        if (c >= 64 || !sub.contains(static_cast<F2Vec>(c))) is_normal = false;
      }
    if (!is_normal) continue;
    ++normal;
    bool abelian = true;
    for (F2Vec a : sub.rows())
      for (F2Vec b : sub.rows())
        if (t.comm(a, b) != 0) abelian = false;
    std::vector<GElem> gens;
    for (F2Vec r : sub.rows()) gens.push_back(lift(r));
    gens.insert(gens.end(), m2.begin(), m2.end());
    for (std::size_t a = 0; a < gens.size() && abelian; ++a)
      for (std::size_t b = a + 1; b < gens.size() && abelian; ++b)
        if (!gcomm(gens[a], gens[b]).is_identity()) abelian = false;
    if (abelian) passing.push_back(sub);
  }
  const F2Subspace r = F2Subspace::span({s_image(GElem::A()), s_image(GElem::B()), s_image(GElem::C())});
  const F2Subspace m = F2Subspace::span({s_image(GElem::X()), s_image(GElem::Y()), s_image(GElem::Z())});
  rep.check("scanned 1395 subspaces", subspaces.size() == 1395, size_str(normal) + " normal");
  rep.check("exactly one normal subspace with abelian preimage", passing.size() == 1,
            size_str(passing.size()) + " pass");
  rep.check("the passing subspace is span{A,B,C}", passing.size() == 1 && passing[0] == r,
            passing.empty() ? "none" : to_string(passing[0]));
  rep.check("span{X,Y,Z} rejected: M is not abelian",
            std::find(passing.begin(), passing.end(), m) == passing.end() &&
                !gcomm(GElem::X(), GElem::Y()).is_identity());
  return rep;
}

Report orbit_of_M_scan() {
  Report rep;
  const auto& t = materialize(QuotientId::GModGG2);
  const Elem conj_by[] = {at(t, GElem::X()), at(t, GElem::A()), at(t, GElem::D())};
  // U and R are characteristic, so an image Q of M satisfies QR = U.
  const std::vector<F2Vec> r_rows = {s_image(GElem::A()), s_image(GElem::B()), s_image(GElem::C())};
  std::vector<F2Subspace> survivors;
  std::size_t normal = 0, complements = 0;
  for (const auto& sub : enumerate_3subspaces()) {
    bool is_normal = true;
    for (F2Vec v : sub.elements())
      for (Elem s : conj_by) {
        const Elem c = t.conj(static_cast<Elem>(v), s);
        if (c >= 64 || !sub.contains(static_cast<F2Vec>(c))) is_normal = false;
      }
    if (!is_normal) continue;
    ++normal;
    std::vector<F2Vec> joined = sub.rows();
    joined.insert(joined.end(), r_rows.begin(), r_rows.end());
    if (F2Subspace::span(joined).dim() != kSDim) continue;
    ++complements;
    std::vector<GElem> gens;
    for (F2Vec r : sub.rows()) gens.push_back(lift(r));
    if (commutator_lattice(gens) == Lattice3::full()) survivors.push_back(sub);
  }
  const auto image = [](const std::function<GElem(const GElem&)>& f) {
    return F2Subspace::span({s_image(f(GElem::X())), s_image(f(GElem::Y())), s_image(f(GElem::Z()))});
  };
  const F2Subspace m = image([](const GElem& g) { return g; });
  const F2Subspace me = image(e_action);
  std::string listing;
  for (const auto& s : survivors) listing += (listing.empty() ? "" : ", ") + to_string(s);
  rep.note(size_str(normal) + " normal subspaces, " + size_str(complements) +
           " with QR = U, survivors with [Q,Q] = M^2: " + listing);
  const auto has = [&](const F2Subspace& s) {
    return std::find(survivors.begin(), survivors.end(), s) != survivors.end();
  };
  rep.check("M survives", has(m), to_string(m));
  rep.check("M^E survives", has(me), to_string(me));
  const F2Subspace xb = F2Subspace::span(
      {s_image(gmul(GElem::X(), GElem::B())), s_image(gmul(GElem::Y(), GElem::C())),
       s_image(gmul(GElem::Z(), GElem::A()))});
  rep.check("<XB,YC,ZA>M^2 excluded", !has(xb));
  rep.check("survivors are exactly {M, M^E}", survivors.size() == 2 && has(m) && has(me),
            size_str(survivors.size()) + " survivors: " + listing);

  // Each survivor is the image of M under one of 1, E, tau, tau then E.
  const std::vector<std::pair<std::string, std::function<GElem(const GElem&)>>> auts = {
      {"1", [](const GElem& g) { return g; }},
      {"E", e_action},
      {"tau", tau},
      {"tau then E", [](const GElem& g) { return e_action(tau(g)); }},
  };
  bool all_certified = true;
  for (const auto& s : survivors) {
    std::string how;
    for (const auto& [name, f] : auts)
      if (image(f) == s) {
        how = name;
        break;
      }
    if (how.empty()) all_certified = false;
    rep.note(to_string(s) + " = image of M under " + (how.empty() ? "?" : how));
  }
  rep.check("every survivor is an image of M under 1, E, tau or tau then E", all_certified);
  return rep;
}

Report section20_chain_check() {
  Report rep;
  const auto& t = materialize(QuotientId::PModM2);
  const PElem X = G(GElem::X()), Y = G(GElem::Y()), Z = G(GElem::Z());
  const PElem A = G(GElem::A()), B = G(GElem::B()), C = G(GElem::C()), D = G(GElem::D());
  const PElem E = PElem::E();
  const Subgroup all = t.all();
  const Subgroup pp = t.derived(all);
  const Subgroup pp_expected =
      gen_sub(t, {A, B, C, pmul(X, Y), pmul(Y, Z), pmul(Z, X)});
  rep.check("[P,P] = <A,B,C,XY,YZ,ZX> mod M^2", pp == pp_expected, "order " + size_str(pp.size()));
  const auto& pq = materialize(QuotientId::PModPP);
  rep.check("|P/[P,P]| = 12", t.order() / pp.size() == 12 && pq.order() == 12);
  rep.check("P/[P,P] = C2 x C2 x C3", pq.is_abelian(pq.all()) && pq.exponent(pq.all()) == 6 &&
                                          pq.squares(pq.all()).size() == 3);

  const auto index2 = t.index2_subgroups(all);
  rep.check("exactly 3 subgroups of index 2", index2.size() == 3, size_str(index2.size()));
  const Subgroup g = gen_sub(t, {X, D, A, B, C, pmul(X, Y), pmul(Y, Z)});
  const Subgroup g1 = gen_sub(t, {E, D, A, B, C, pmul(X, Y), pmul(Y, Z)});
  const Subgroup g2 = gen_sub(t, {pmul(E, X), D, A, B, C, pmul(X, Y), pmul(Y, Z)});
  const auto listed = [&](const Subgroup& h) {
    return std::find(index2.begin(), index2.end(), h) != index2.end();
  };
  rep.check("they are G, G1 = [P,P]<E,D>, G2 = [P,P]<EX,D>",
            listed(g) && listed(g1) && listed(g2) && g != g1 && g1 != g2 && g != g2);

  const Subgroup gg = gen_sub(t, {pmul(A, B), pmul(B, C), pmul(X, Y), pmul(Y, Z)});
  const Subgroup u_expected = gen_sub(t, {A, B, C, X, Y, Z});
  const Subgroup u1_expected = gen_sub(t, {A, B, C, pmul(X, Y), pmul(Y, Z), pmul(Z, X), E});
  const Subgroup u2_expected = gen_sub(t, {A, B, C, pmul(X, Y), pmul(Y, Z), pmul(Z, X), pmul(X, E)});
  const Subgroup* us[3] = {&u_expected, &u1_expected, &u2_expected};
  const Subgroup* hs[3] = {&g, &g1, &g2};
  const char* names[3] = {"G", "G1", "G2"};
  const char* unames[3] = {"U", "U1", "U2"};
  std::size_t uu_order[3] = {0, 0, 0};
  for (int n = 0; n < 3; ++n) {
    const Subgroup& h = *hs[n];
    const Subgroup dh = t.derived(h);
    rep.check(std::string("[") + names[n] + "," + names[n] + "] = <AB,BC,AC,XY,YZ,ZX> mod M^2",
              dh == gg && h.size() / dh.size() == 12);
    // The normal subgroups of index 3 are the preimages of the Sylow 2-part
    // of the abelian quotient of order 12.
    const Subgroup u = t.power_torsion(h, dh, 4);
    rep.check(std::string(unames[n]) + " is the subgroup of index 3 in " + names[n],
              u == *us[n] && h.size() == 3 * u.size() && t.is_normal(u, h));
    uu_order[n] = t.derived(u).size();
  }
  rep.check("[U,U] M^2/M^2 trivial", uu_order[0] == 1, size_str(uu_order[0]));
  const Subgroup abbc = gen_sub(t, {pmul(A, B), pmul(B, C)});
  rep.check("[U1,U1] M^2/M^2 = [U2,U2] M^2/M^2 = <AB,BC,AC> of order 4",
            uu_order[1] == 4 && uu_order[2] == 4 && t.derived(u1_expected) == abbc &&
                t.derived(u2_expected) == abbc);
  rep.check("[P,[P,P]] = [G,G] mod M^2", t.commutator(all, pp) == gg);

  // M^2 lies in [U,U]: exact commutators of generators.
  const GElem xa = gcomm(GElem::X(), GElem::A());
  const GElem yb = gcomm(GElem::Y(), GElem::B());
  const GElem zc = gcomm(GElem::Z(), GElem::C());
  const auto c1 = m2_coords(xa), c2 = m2_coords(yb), c3 = m2_coords(zc);
  rep.check("[X,A] = Z^2", xa == GElem::make(0, 0, 2, 0, 0, 0, 0), to_string(xa));
  rep.check("[X,A], [Y,B], [Z,C] generate M^2",
            c1 && c2 && c3 && Lattice3::span({*c1, *c2, *c3}) == Lattice3::full(),
            to_string(yb) + ", " + to_string(zc));
  rep.check("[X,E] = A", pcomm(X, E) == A);
  const bool characteristic = uu_order[0] == 1 && uu_order[1] != 1 && uu_order[2] != 1;
  rep.check("G characteristic in P", characteristic,
            "M^2 = [P,[P,P]]^2 is characteristic and [U,U] = M^2 differs from [U1,U1], [U2,U2]");
  rep.note("Burnside: a centerless H with Inn(H) characteristic in Aut(H) has Aut(H) complete");
  return rep;
}

}  // namespace mennicke
