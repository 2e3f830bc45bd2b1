#include "mennicke/pgroup.hpp"

#include "mennicke/collector.hpp"
#include "mennicke/sampling.hpp"
#include "mennicke/vgroup.hpp"

#include <array>
#include <stdexcept>

namespace mennicke {

namespace {

const GElem& abc() {
  static const GElem v = gmul(GElem::A(), GElem::B(), GElem::C());
  return v;
}

GElem substitute(const std::array<GElem, 7>& img, const GElem& g) {
  return gmul(gmul(gpow(img[0], g.a), gpow(img[1], g.b), gpow(img[2], g.c)),
              gmul(gpow(img[3], g.i), gpow(img[4], g.j), gpow(img[5], g.k)), gpow(img[6], g.l));
}

GElem substitute_word(const std::array<GElem, 7>& img, const Word& w) {
  GElem acc;
  for (const auto& l : w) acc = gmul(acc, gpow(img[generator_rank(GroupId::G, l.gen)], l.exp));
  return acc;
}

std::array<GElem, 7> e_images(bool inverse) {
  const auto s = [&](const GElem& gen, const GElem& r) { return gmul(gen, inverse ? ginv(r) : r); };
  return {s(GElem::X(), GElem::A()), s(GElem::Y(), GElem::B()), s(GElem::Z(), GElem::C()),
          GElem::A(), GElem::B(), GElem::C(), GElem::D()};
}

const std::array<GElem, 7>& e_table() {
  static const auto t = e_images(false);
  return t;
}

const std::array<GElem, 7>& e_inv_table() {
  static const auto t = e_images(true);
  return t;
}

}  // namespace

GElem e_action(const GElem& g) { return substitute(e_table(), g); }
GElem e_inverse_action(const GElem& g) { return substitute(e_inv_table(), g); }

PElem pmul(const PElem& p1, const PElem& p2) {
  // E g = e^-1(g) E and E^2 = ABC, which E fixes.
  GElem g = gmul(p1.g, p1.e ? e_inverse_action(p2.g) : p2.g);
  if (p1.e && p2.e) g = gmul(g, abc());
  return {g, p1.e != p2.e};
}

PElem pinv(const PElem& p) {
  if (!p.e) return {ginv(p.g), false};
  return {gmul(ginv(abc()), e_inverse_action(ginv(p.g))), true};
}

PElem ppow(const PElem& p, const Int& n) {
  PElem base = n < 0 ? pinv(p) : p;
  Int k = n < 0 ? Int(-n) : n;
  PElem acc;
  while (k > 0) {
    if (is_odd(k)) acc = pmul(acc, base);
    base = pmul(base, base);
    k >>= 1;
  }
  return acc;
}

PElem pconj(const PElem& p, const PElem& q) { return pmul(pinv(q), p, q); }
PElem pcomm(const PElem& p, const PElem& q) { return pmul(pinv(p), pinv(q), p, q); }

PElem eval_p(const Word& w) {
  PElem acc;
  for (const auto& l : w) {
    const PElem gen = l.gen == 'E' ? PElem::E() : PElem::of(g_generator(l.gen));
    acc = pmul(acc, ppow(gen, l.exp));
  }
  return acc;
}

Word to_word(const PElem& p) {
  Word w = to_word(p.g);
  if (p.e) w.append('E', 1);
  return w;
}

std::string to_string(const PElem& p) { return to_string(to_word(p)); }

GElem act(const PElem& p, const GElem& h) {
  const GElem c = gconj(h, p.g);
  return p.e ? e_action(c) : c;
}

Report e_action_relations_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  for (const auto& rels : {&g_defining_relations(), &g_consequence_relations()})
    for (const auto& r : *rels) {
      const bool ok = substitute_word(e_table(), parse_word(r.lhs, GroupId::G)) ==
                      substitute_word(e_table(), parse_word(r.rhs, GroupId::G));
      rep.check("E preserves " + r.name, ok);
    }
  const auto& gens = g_generators();
  bool inverse = true;
  for (const auto& s : gens)
    if (e_inverse_action(e_action(s)) != s || e_action(e_inverse_action(s)) != s) inverse = false;
  rep.check("e_inverse_action inverts e_action on generators", inverse);
  rep.check("E fixes ABC", e_action(abc()) == abc());
  rep.check("E E = ABC", pmul(PElem::E(), PElem::E()) == PElem::of(abc()));

  Sampler s(seed);
  std::size_t sq_fail = 0, hom_fail = 0, law_fail = 0, inv_fail = 0, coll_fail = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const GElem g = s.gelem(5), h = s.gelem(5);
    if (e_action(e_action(g)) != gconj(g, abc())) ++sq_fail;
    if (e_action(gmul(g, h)) != gmul(e_action(g), e_action(h))) ++hom_fail;
    const PElem p{s.gelem(4), s.bit()}, q{s.gelem(4), s.bit()};
    const GElem t = s.gelem(4);
    if (act(pmul(p, q), t) != act(q, act(p, t))) ++law_fail;
    if (!pmul(p, pinv(p)).is_identity()) ++inv_fail;
    if (n < std::min<std::size_t>(samples, 2000)) {
      const Word w = random_word(seed + n, GroupId::P, 16, 3);
      if (collect(w, GroupId::P) != to_word(eval_p(w))) ++coll_fail;
    }
  }
  const auto cnt = [](std::size_t k, std::size_t of) {
    return std::to_string(k) + " failures in " + std::to_string(of);
  };
  rep.check("e_action^2 = conjugation by ABC", sq_fail == 0, cnt(sq_fail, samples));
  rep.check("e_action multiplicative", hom_fail == 0, cnt(hom_fail, samples));
  rep.check("pmul matches composition of actions", law_fail == 0, cnt(law_fail, samples));
  rep.check("pinv is a two-sided inverse", inv_fail == 0, cnt(inv_fail, samples));
  rep.check("pmul matches the P collector", coll_fail == 0,
            cnt(coll_fail, std::min<std::size_t>(samples, 2000)));
  const PElem X = PElem::of(GElem::X()), E = PElem::E();
  rep.check("[X,E] = A", pcomm(X, E) == PElem::of(GElem::A()), to_string(pcomm(X, E)));
  const Word xe = parse_word("X^-1 E^-1 X E", GroupId::P);
  rep.check("X^-1 E^-1 X E collects to A", to_string(collect(xe, GroupId::P)) == "A",
            to_string(collect(xe, GroupId::P)));
  return rep;
}

namespace {

constexpr long kH0Bound = 4;

std::optional<GElem> find_h0() {
  const auto& gens = g_generators();
  const auto& taus = tau_generator_images();
  for (long a = -kH0Bound; a <= kH0Bound; ++a)
    for (long b = -kH0Bound; b <= kH0Bound; ++b)
      for (long c = -kH0Bound; c <= kH0Bound; ++c)
        for (int bits = 0; bits < 24; ++bits) {
          const GElem h = GElem::make(a, b, c, bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, bits >> 3);
          bool ok = true;
          // D first: it is the cheapest generator to rule a candidate out.
          for (std::size_t n = gens.size(); n-- > 0 && ok;)
            ok = gconj(e_action(gens[n]), h) == taus[n];
          if (ok) return h;
        }
  return std::nullopt;
}

}  // namespace

Report omega_correspondence(std::uint64_t seed, std::size_t samples) {
  Report rep;
  const GElem td = tau(GElem::D());
  rep.check("tau(D) computed", true, "tau(D) = " + to_string(td));
  const auto h0 = find_h0();
  rep.check("witness h0 with tau = E then conjugation by h0", h0.has_value(),
            h0 ? "h0 = " + to_string(*h0)
               : "none with |a|,|b|,|c| <= " + std::to_string(kH0Bound) +
                     "; E fixes D and conjugation maps D into D U, but tau(D) = " + to_string(td));
  Sampler s(seed);
  std::size_t g_fail = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const GElem g = s.gelem(5), h = s.gelem(5);
    const VAutElem prod = vaut_mul({g, false}, {h, false});
    if (PElem::of(prod.g) != pmul(PElem::of(g), PElem::of(h)) || prod.psi) ++g_fail;
  }
  rep.check("Theta on the G part is multiplicative", g_fail == 0,
            std::to_string(g_fail) + " failures in " + std::to_string(samples));
  if (!h0) {
    rep.check("Theta multiplicative on random pairs", false, "Theta(Psi) undefined without h0");
    return rep;
  }
  const auto theta = [&](const VAutElem& p) {
    return p.psi ? pmul(PElem::of(p.g), PElem{*h0, true}) : PElem::of(p.g);
  };
  std::size_t fail = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const VAutElem p{s.gelem(4), s.bit()}, q{s.gelem(4), s.bit()};
    if (theta(vaut_mul(p, q)) != pmul(theta(p), theta(q))) ++fail;
  }
  rep.check("Theta multiplicative on random pairs", fail == 0,
            std::to_string(fail) + " failures in " + std::to_string(samples));
  return rep;
}

Report aut_g_closure_check() {
  Report rep;
  const auto& gens = g_generators();
  const auto& taus = tau_generator_images();
  bool round_trip = true, relations = true;
  for (std::size_t n = 0; n < gens.size(); ++n)
    if (tau_inv(taus[n]) != gens[n] || tau(tau_inv(gens[n])) != gens[n]) round_trip = false;
  for (const auto& rels : {&g_defining_relations(), &g_consequence_relations()})
    for (const auto& r : *rels)
      if (substitute_word(taus, parse_word(r.lhs, GroupId::G)) !=
          substitute_word(taus, parse_word(r.rhs, GroupId::G)))
        relations = false;
  rep.check("tau preserves the relations of G", relations);
  rep.check("tau is bijective on G", round_trip, "tau_inv computed from Psi g Psi^-1");
  // Inner automorphisms act trivially on G/U (order 3, D l-part) and E
  // fixes D, so every element of Inn(G)<E> sends D into D U.
  rep.check("E fixes D", e_action(GElem::D()) == GElem::D());
  const GElem td = tau(GElem::D());
  rep.check("tau in Inn(G)<E>", td.l == 1,
            "tau(D) = " + to_string(td) + " lies in D^" + std::to_string(td.l) +
                " U, while Inn(G)<E> maps D into D U");
  return rep;
}

Report g_center_check(long box) {
  Report rep;
  const GElem X = GElem::X(), A = GElem::A(), D = GElem::D();
  std::size_t central = 0, scanned = 0;
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= box; ++b)
      for (long c = -box; c <= box; ++c)
        for (int bits = 0; bits < 24; ++bits) {
          const GElem g = GElem::make(a, b, c, bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, bits >> 3);
          if (g.is_identity()) continue;
          ++scanned;
          bool commutes = true;
          for (const auto& s : {D, X, A})
            if (gmul(g, s) != gmul(s, g)) { commutes = false; break; }
          if (commutes) ++central;
        }
  rep.check("box search: no nonidentity element commutes with X, A, D", central == 0,
            "box " + std::to_string(box) + ", " + std::to_string(scanned) + " elements");
  rep.check("D does not centralize X", gmul(D, X) != gmul(X, D));
  // g central in G commutes with every inner automorphism, so
  // g^-1 i_m g = i_(g(m)) = i_m; Z(M) = 1 gives g(m) = m, hence g = 1.
  bool zm = true;
  const std::vector<std::pair<MElem, MElem>> fix = {
      {MElem::x(), MElem::x()}, {MElem::y(), MElem::y()}, {MElem::z(), MElem::z()}};
  for (const auto& entry : conjugator_solutions(fix))
    if (entry.solution && !entry.solution->is_identity()) zm = false;
  rep.check("exact reduction: Z(M) = 1", zm);
  rep.check("exact reduction: semantic(g) = id forces g = 1",
            recognize(MEndo::identity()).is_identity());
  return rep;
}

Report p_center_check(long box) {
  Report rep;
  const PElem X = PElem::of(GElem::X()), A = PElem::of(GElem::A()), D = PElem::of(GElem::D());
  const PElem E = PElem::E();
  std::size_t central = 0, scanned = 0;
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= box; ++b)
      for (long c = -box; c <= box; ++c)
        for (int bits = 0; bits < 48; ++bits) {
          const PElem p{GElem::make(a, b, c, bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) % 3),
                        bits >= 24};
          if (p.is_identity()) continue;
          ++scanned;
          bool commutes = true;
          for (const auto& s : {D, X, A, E})
            if (pmul(p, s) != pmul(s, p)) { commutes = false; break; }
          if (commutes) ++central;
        }
  rep.check("box search: no nonidentity element commutes with X, A, D, E", central == 0,
            "box " + std::to_string(box) + ", " + std::to_string(scanned) + " elements");
  // (g,1) centralizes X iff g^-1 X g = e^-1(X) = X A^-1, which lies outside
  // the normal subgroup Inn(M); central elements are then in Z(G) = 1.
  rep.check("exact reduction: no g E centralizes X",
            !subgroup_membership(e_inverse_action(GElem::X()), GSubgroup::InnM),
            "e^-1(X) = " + to_string(e_inverse_action(GElem::X())));
  return rep;
}

}  // namespace mennicke
