#include "mennicke/vgroup.hpp"

#include "mennicke/lattice.hpp"
#include "mennicke/sampling.hpp"

#include <functional>
#include <stdexcept>

namespace mennicke {

VElem::VElem(const MElem& m) : m_(m) {
  if (!in_V(m)) throw std::invalid_argument("not an element of V: " + to_string(m));
}

VElem VElem::u() { return VElem(MElem{1, 1, 0}); }
VElem VElem::v() { return VElem(MElem{0, 1, 1}); }
VElem VElem::w() { return VElem(MElem{1, 0, -1}); }

VElem vmul(const VElem& p, const VElem& q) { return VElem(mul(p.m(), q.m())); }
VElem vinv(const VElem& p) { return VElem(inv(p.m())); }
VElem vpow(const VElem& p, const Int& n) { return VElem(pow(p.m(), n)); }

int v_class(const VElem& p) {
  switch (coset_class(p.m())) {
    case CosetClass::XY: return 1;
    case CosetClass::YZ: return 2;
    case CosetClass::ZX: return 3;
    default: return 0;
  }
}

namespace {

const VElem& class_rep(int c) {
  static const VElem reps[4] = {VElem::identity(), VElem::u(), VElem::v(), VElem::w()};
  return reps[c];
}

// p = rep * n with n = x^2s y^2t z^2r in M^2.
std::pair<int, MElem> split(const VElem& p) {
  const int c = v_class(p);
  const MElem n = mul(inv(class_rep(c).m()), p.m());
  return {c, {n.i / 2, n.j / 2, n.k / 2}};
}

VElem sq(const VElem& p) { return vmul(p, p); }
VElem vconj(const VElem& p, const VElem& g) { return vmul(vinv(g), vmul(p, g)); }
VElem vcomm(const VElem& p, const VElem& q) { return vmul(vmul(vinv(p), vinv(q)), vmul(p, q)); }
VElem prod(std::initializer_list<VElem> ps) {
  VElem acc;
  for (const auto& p : ps) acc = vmul(acc, p);
  return acc;
}

struct VRel {
  std::string name;
  std::function<bool(const VElem&, const VElem&, const VElem&)> holds;
};

const std::vector<VRel>& v_relations() {
  static const std::vector<VRel> rels = {
      {"[u,v]=w^2u^-2v^2",
       [](auto& u, auto& v, auto& w) { return vcomm(u, v) == prod({sq(w), vinv(sq(u)), sq(v)}); }},
      {"[v,w]=u^2v^-2w^2",
       [](auto& u, auto& v, auto& w) { return vcomm(v, w) == prod({sq(u), vinv(sq(v)), sq(w)}); }},
      {"[w,u]=v^2w^-2u^2",
       [](auto& u, auto& v, auto& w) { return vcomm(w, u) == prod({sq(v), vinv(sq(w)), sq(u)}); }},
      {"uvw=w^2u^2v^-2",
       [](auto& u, auto& v, auto& w) { return prod({u, v, w}) == prod({sq(w), sq(u), vinv(sq(v))}); }},
      {"vwu=u^2v^2w^-2",
       [](auto& u, auto& v, auto& w) { return prod({v, w, u}) == prod({sq(u), sq(v), vinv(sq(w))}); }},
      {"wuv=v^2w^2u^-2",
       [](auto& u, auto& v, auto& w) { return prod({w, u, v}) == prod({sq(v), sq(w), vinv(sq(u))}); }},
      {"(u^2)^v=u^-2", [](auto& u, auto& v, auto&) { return vconj(sq(u), v) == vinv(sq(u)); }},
      {"(u^2)^w=u^-2", [](auto& u, auto&, auto& w) { return vconj(sq(u), w) == vinv(sq(u)); }},
      {"(v^2)^w=v^-2", [](auto&, auto& v, auto& w) { return vconj(sq(v), w) == vinv(sq(v)); }},
      {"(v^2)^u=v^-2", [](auto& u, auto& v, auto&) { return vconj(sq(v), u) == vinv(sq(v)); }},
      {"(w^2)^u=w^-2", [](auto& u, auto&, auto& w) { return vconj(sq(w), u) == vinv(sq(w)); }},
      {"(w^2)^v=w^-2", [](auto&, auto& v, auto& w) { return vconj(sq(w), v) == vinv(sq(w)); }},
  };
  return rels;
}

const std::vector<VRel>& v_consequences() {
  static const std::vector<VRel> rels = {
      {"[u^2,v^2]=1", [](auto& u, auto& v, auto&) { return vcomm(sq(u), sq(v)) == VElem(); }},
      {"[v^2,w^2]=1", [](auto&, auto& v, auto& w) { return vcomm(sq(v), sq(w)) == VElem(); }},
      {"[w^2,u^2]=1", [](auto& u, auto&, auto& w) { return vcomm(sq(w), sq(u)) == VElem(); }},
  };
  return rels;
}

}  // namespace

Word to_v_word(const VElem& p) {
  const auto [c, half] = split(p);
  Word w;
  if (c) w.append("1uvw"[c], 1);
  w.append('w', 2 * half.i);
  w.append('u', 2 * half.j);
  w.append('v', 2 * half.k);
  return w;
}

std::string to_string(const VElem& p) {
  return to_string(to_v_word(p)) + " (" + to_string(p.m()) + ")";
}

const std::array<std::string, 12>& v_relation_names() {
  static const std::array<std::string, 12> names = [] {
    std::array<std::string, 12> out;
    for (std::size_t n = 0; n < 12; ++n) out[n] = v_relations()[n].name;
    return out;
  }();
  return names;
}

std::optional<std::string> v_relation_check(const VEndo& e) {
  for (const auto& r : v_relations())
    if (!r.holds(e.img_u, e.img_v, e.img_w)) return r.name;
  return std::nullopt;
}

VEndo make_vendo_checked(const VElem& iu, const VElem& iv, const VElem& iw) {
  VEndo e{iu, iv, iw};
  if (auto bad = v_relation_check(e))
    throw std::invalid_argument("not an endomorphism of V: fails " + *bad);
  return e;
}

VElem vapply(const VEndo& e, const VElem& p) {
  const auto [c, half] = split(p);
  const VElem rep_img = c == 0 ? VElem() : c == 1 ? e.img_u : c == 2 ? e.img_v : e.img_w;
  // x^2 = w^2, y^2 = u^2, z^2 = v^2
  return prod({rep_img, vpow(e.img_w, 2 * half.i), vpow(e.img_u, 2 * half.j),
               vpow(e.img_v, 2 * half.k)});
}

VEndo vcompose(const VEndo& e1, const VEndo& e2) {
  return {vapply(e2, e1.img_u), vapply(e2, e1.img_v), vapply(e2, e1.img_w)};
}

std::string to_string(const VEndo& e) {
  return "u -> " + to_string(to_v_word(e.img_u)) + ", v -> " + to_string(to_v_word(e.img_v)) +
         ", w -> " + to_string(to_v_word(e.img_w));
}

Report v_presentation_check() {
  Report rep;
  const VElem u = VElem::u(), v = VElem::v(), w = VElem::w();
  for (const auto& r : v_relations()) rep.check("defining " + r.name, r.holds(u, v, w));
  for (const auto& r : v_consequences()) rep.check("consequence " + r.name, r.holds(u, v, w));
  rep.check("u^2=y^2, v^2=z^2, w^2=x^2",
            sq(u).m() == MElem{0, 2, 0} && sq(v).m() == MElem{0, 0, 2} && sq(w).m() == MElem{2, 0, 0});
  // V^2 lies in M^2 since every square is in M^2; the three squares above
  // give the basis of M^2, so V^2 = M^2 and V/V^2 has order 4.
  bool squares_in_m2 = true;
  Sampler s(7);
  for (int n = 0; n < 2000; ++n) {
    MElem m = s.melem(50);
    if (!in_V(m)) m = mul(m, MElem::x());
    if (!in_M2(sq(VElem(m)).m())) squares_in_m2 = false;
  }
  rep.check("V^2 = M^2", squares_in_m2, "x^2, y^2, z^2 are squares of w, u, v");
  bool closed = true;
  for (int n = 0; n < 2000; ++n) {
    const MElem a = s.melem(50), b = s.melem(50);
    if (in_V(a) && in_V(b) && (!in_V(mul(a, b)) || !in_V(inv(a)))) closed = false;
    if (in_V(a) != !in_V(mul(a, MElem::x()))) closed = false;
  }
  rep.check("V closed under mul and inv; index 2 in M", closed);
  return rep;
}

VEndo psi() {
  const VElem u = VElem::u(), v = VElem::v(), w = VElem::w();
  return {vmul(u, sq(w)), vmul(w, sq(v)), vmul(v, sq(u))};
}

VEndo psi_inv() {
  const VElem u = VElem::u(), v = VElem::v(), w = VElem::w();
  return {vmul(u, vinv(sq(v))), vmul(w, vinv(sq(u))), vmul(v, vinv(sq(w)))};
}

VEndo restrict(const GElem& g) {
  const MEndo e = semantic(g);
  return {VElem(apply(e, VElem::u().m())), VElem(apply(e, VElem::v().m())),
          VElem(apply(e, VElem::w().m()))};
}

Report gamma_injectivity_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  Sampler s(seed);
  std::size_t distinct = 0, collisions = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const GElem g = s.gelem(6), h = s.gelem(6);
    if (g == h) continue;
    ++distinct;
    if (restrict(g) == restrict(h)) ++collisions;
  }
  rep.check("restriction to V injective on distinct pairs", collisions == 0,
            std::to_string(distinct) + " pairs, " + std::to_string(collisions) + " collisions");
  // Kernel of the restriction to M^2 is R = <X^2, Y^2, Z^2, A, B, C>; on R
  // the image of xy is xy x^(2j+4a) z^(2i+4c).
  std::size_t kernel_mismatch = 0, formula_mismatch = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    GElem g = s.gelem(6);
    if (n % 2 == 0) g = GElem::make(2 * s.uniform(6), 2 * s.uniform(6), 2 * s.uniform(6), s.bit(),
                                    s.bit(), s.bit(), 0);
    const bool trivial_on_m2 = m2_matrix(semantic(g)) == identity_matrix3();
    if (trivial_on_m2 != subgroup_membership(g, GSubgroup::R)) ++kernel_mismatch;
    if (subgroup_membership(g, GSubgroup::R)) {
      const MElem expect = mul(MElem{1, 1, 0}, MElem{2 * g.j + 2 * g.a, 0, 0},
                               MElem{0, 0, 2 * g.i + 2 * g.c});
      if (apply(semantic(g), MElem{1, 1, 0}) != expect) ++formula_mismatch;
    }
  }
  rep.check("kernel of restriction to M^2 equals <X^2,Y^2,Z^2,A,B,C>", kernel_mismatch == 0,
            std::to_string(kernel_mismatch) + " mismatches");
  rep.check("(xy)^(X^2a Y^2b Z^2c A^i B^j C^k) = xy x^(2j+4a) z^(2i+4c)", formula_mismatch == 0,
            std::to_string(formula_mismatch) + " mismatches");
  return rep;
}

VPerm pi_perm(const VEndo& e) {
  VPerm p{};
  for (int c = 0; c < 4; ++c) p[c] = v_class(vapply(e, class_rep(c)));
  return p;
}

std::string to_string(const VPerm& p) {
  static const char* names[4] = {"1", "u", "v", "w"};
  std::string out;
  for (int c = 0; c < 4; ++c) {
    if (c) out += ' ';
    out += std::string(names[c]) + "->" + names[p[c]];
  }
  return out;
}

std::optional<GElem> extend_to_M(const VEndo& e) {
  const VElem gens[3] = {VElem::u(), VElem::v(), VElem::w()};
  const MElem letters[3] = {MElem::x(), MElem::y(), MElem::z()};
  MElem images[3];
  for (int s = 0; s < 3; ++s) {
    // phi(s)^-1 e(g) phi(s) = e(s^-1 g s) for g in V.
    std::vector<std::pair<MElem, MElem>> pairs;
    for (const auto& g : gens)
      pairs.push_back({vapply(e, g).m(), vapply(e, VElem(conj(g.m(), letters[s]))).m()});
    const auto t = solve_conjugator(pairs);
    if (!t) return std::nullopt;
    images[s] = *t;
  }
  const MEndo phi{images[0], images[1], images[2]};
  if (relation_check(phi) || !is_automorphism(phi)) return std::nullopt;
  for (const auto& g : gens)
    if (apply(phi, g.m()) != vapply(e, g).m()) return std::nullopt;
  return recognize(phi);
}

VEndo act(const VAutElem& p) {
  const VEndo r = restrict(p.g);
  return p.psi ? vcompose(r, psi()) : r;
}

VPerm pi_perm(const VAutElem& p) { return pi_perm(act(p)); }

namespace {

struct TauTable {
  std::array<GElem, 7> fwd;
  std::array<GElem, 7> bwd;
  GElem c0;
};

GElem must_extend(const VEndo& e, const std::string& what) {
  auto g = extend_to_M(e);
  if (!g) throw std::logic_error(what + " does not extend to M");
  return *g;
}

const TauTable& tau_table() {
  static const TauTable table = [] {
    TauTable t;
    const auto& gens = g_generators();
    for (std::size_t n = 0; n < gens.size(); ++n) {
      const VEndo r = restrict(gens[n]);
      t.fwd[n] = must_extend(vcompose(vcompose(psi_inv(), r), psi()), "Psi^-1 g Psi");
      t.bwd[n] = must_extend(vcompose(vcompose(psi(), r), psi_inv()), "Psi g Psi^-1");
    }
    t.c0 = must_extend(vcompose(psi(), psi()), "Psi^2");
    return t;
  }();
  return table;
}

GElem extend_hom(const std::array<GElem, 7>& img, const GElem& g) {
  return gmul(gmul(gpow(img[0], g.a), gpow(img[1], g.b), gpow(img[2], g.c)),
              gmul(gpow(img[3], g.i), gpow(img[4], g.j), gpow(img[5], g.k)), gpow(img[6], g.l));
}

}  // namespace

GElem tau(const GElem& g) { return extend_hom(tau_table().fwd, g); }
GElem tau_inv(const GElem& g) { return extend_hom(tau_table().bwd, g); }
const GElem& psi_square_cocycle() { return tau_table().c0; }
const std::array<GElem, 7>& tau_generator_images() { return tau_table().fwd; }

VAutElem vaut_mul(const VAutElem& p1, const VAutElem& p2) {
  if (!p1.psi) return {gmul(p1.g, p2.g), p2.psi};
  // Psi r(h) = r(tau_inv(h)) Psi and Psi^2 = r(c0).
  const GElem moved = gmul(p1.g, tau_inv(p2.g));
  if (!p2.psi) return {moved, true};
  return {gmul(moved, psi_square_cocycle()), false};
}

Report psi_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  const VEndo p = psi(), q = psi_inv();
  rep.check("Psi preserves the defining relations", !v_relation_check(p).has_value());
  rep.check("Psi^-1 preserves the defining relations", !v_relation_check(q).has_value());
  rep.check("Psi Psi^-1 = Psi^-1 Psi = 1",
            vcompose(p, q) == VEndo::identity() && vcompose(q, p) == VEndo::identity());
  rep.check("Pi(Psi) is the transposition (v w)", pi_perm(p) == VPerm{0, 1, 3, 2}, to_string(pi_perm(p)));
  rep.check("Pi(restrict(D)) is the 3-cycle (u v w)", pi_perm(restrict(GElem::D())) == VPerm{0, 2, 3, 1},
            to_string(pi_perm(restrict(GElem::D()))));
  rep.check("Pi(restrict(X)) is trivial", pi_perm(restrict(GElem::X())) == VPerm{0, 1, 2, 3});
  rep.check("Psi does not extend to M", !extend_to_M(p).has_value());
  const VEndo p2 = vcompose(p, p);
  rep.check("Psi^2 lies in the kernel of Pi", pi_perm(p2) == VPerm{0, 1, 2, 3});
  rep.check("Psi^2 = restrict(c0) with c0 = ABC",
            restrict(psi_square_cocycle()) == p2 &&
                psi_square_cocycle() == gmul(GElem::A(), GElem::B(), GElem::C()),
            "c0 = " + to_string(psi_square_cocycle()));
  rep.check("(1,1)(1,1) = (c0,0)", vaut_mul({GElem::identity(), true}, {GElem::identity(), true}) ==
                                          VAutElem{psi_square_cocycle(), false});
  rep.check("extend_to_M(identity) = 1", extend_to_M(VEndo::identity()) == GElem::identity());
  Sampler s(seed);
  std::size_t round = 0, action = 0, assoc = 0;
  const std::size_t n_round = std::min<std::size_t>(samples, 2000);
  for (std::size_t n = 0; n < samples; ++n) {
    const VAutElem a{s.gelem(4), s.bit()}, b{s.gelem(4), s.bit()}, c{s.gelem(4), s.bit()};
    if (act(vaut_mul(a, b)) != vcompose(act(a), act(b))) ++action;
    if (vaut_mul(vaut_mul(a, b), c) != vaut_mul(a, vaut_mul(b, c))) ++assoc;
    if (n < n_round && extend_to_M(restrict(a.g)) != a.g) ++round;
  }
  const auto cnt = [](std::size_t k, std::size_t of) {
    return std::to_string(k) + " failures in " + std::to_string(of);
  };
  rep.check("extend_to_M(restrict(g)) = g", round == 0, cnt(round, n_round));
  rep.check("pair product acts as the composite on V", action == 0, cnt(action, samples));
  rep.check("pair product associative", assoc == 0, cnt(assoc, samples));
  return rep;
}

Report inn_m_not_characteristic_witness(std::uint64_t seed, std::size_t samples) {
  Report rep;
  const GElem tx = tau(GElem::X());
  const bool outside = tx.i || tx.j || tx.k || tx.l;
  rep.check("tau(X) lies outside <X,Y,Z>", outside, "tau(X) = " + to_string(tx));
  Sampler s(seed);
  std::size_t left = 0, inner_samples = 0, mult_fail = 0, def_fail = 0;
  const std::size_t n = std::max<std::size_t>(samples, 1000);
  for (std::size_t t = 0; t < n; ++t) {
    const GElem g = GElem::inner_of(s.melem(6));
    ++inner_samples;
    if (!subgroup_membership(tau(g), GSubgroup::InnM)) ++left;
    const GElem a = s.gelem(6), b = s.gelem(6);
    if (tau(gmul(a, b)) != gmul(tau(a), tau(b))) ++mult_fail;
    if (restrict(tau(a)) != vcompose(vcompose(psi_inv(), restrict(a)), psi())) ++def_fail;
  }
  rep.check("tau moves sampled elements of <X,Y,Z> outside it", left > 0,
            std::to_string(left) + " of " + std::to_string(inner_samples));
  rep.check("tau multiplicative on random pairs", mult_fail == 0,
            std::to_string(n) + " pairs, " + std::to_string(mult_fail) + " failures");
  rep.check("restrict(tau(g)) = Psi^-1 restrict(g) Psi", def_fail == 0,
            std::to_string(n) + " samples, " + std::to_string(def_fail) + " failures");
  return rep;
}

Report centralizer_triviality_check(std::uint64_t seed, std::size_t samples) {
  Report rep;
  const VAutElem X{GElem::X(), false}, A{GElem::A(), false}, D{GElem::D(), false};
  // (Y,1) commutes with (X,0) iff Y^-1 X Y = tau_inv(X); the left side lies
  // in the normal subgroup Inn(M), so no Y works when tau_inv(X) does not.
  const GElem tix = tau_inv(GElem::X());
  rep.check("no (Y,1) centralizes X", !subgroup_membership(tix, GSubgroup::InnM),
            "tau_inv(X) = " + to_string(tix) + " is outside Inn(M)");
  const VAutElem psi_only{GElem::identity(), true};
  rep.check("(1,1) does not centralize X", vaut_mul(psi_only, X) != vaut_mul(X, psi_only));
  rep.check("(D,0) does not centralize X", vaut_mul(D, X) != vaut_mul(X, D));
  Sampler s(seed);
  std::size_t missing = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const VAutElem p{s.gelem(6), n % 2 == 0};
    if (p.g.is_identity() && !p.psi) continue;
    bool witness = false;
    for (const auto& h : {X, A, D})
      if (vaut_mul(p, h) != vaut_mul(h, p)) witness = true;
    if (!witness) ++missing;
  }
  rep.check("random nonidentity pairs fail to centralize {X, A, D}", missing == 0,
            std::to_string(samples) + " samples, " + std::to_string(missing) + " without witness");
  return rep;
}

Report v_center_check(long box) {
  Report rep;
  const std::vector<std::pair<MElem, MElem>> fix = {
      {VElem::u().m(), VElem::u().m()}, {VElem::v().m(), VElem::v().m()}, {VElem::w().m(), VElem::w().m()}};
  bool exact = true;
  std::string detail;
  for (const auto& entry : conjugator_solutions(fix)) {
    if (!in_V(coset_rep(entry.parity))) continue;
    const bool only_identity =
        !entry.solution || (entry.rank == 3 && entry.solution->is_identity());
    if (!only_identity) exact = false;
    detail += coset_label(entry.parity) + ":rank" + std::to_string(entry.rank) +
              (entry.solution ? "=" + to_string(*entry.solution) : ":none") + " ";
  }
  rep.check("exact parity solve: only 1 commutes with u, v, w", exact, detail);
  std::size_t central = 0, scanned = 0;
  for (long i = -box; i <= box; ++i)
    for (long j = -box; j <= box; ++j)
      for (long k = -box; k <= box; ++k) {
        const MElem m{i, j, k};
        if (!in_V(m) || m.is_identity()) continue;
        ++scanned;
        if (comm(m, VElem::u().m()).is_identity() && comm(m, VElem::v().m()).is_identity()) ++central;
      }
  rep.check("box search finds no central nonidentity element", central == 0,
            "box " + std::to_string(box) + ", " + std::to_string(scanned) + " elements");
  return rep;
}

Report index2_subgroups_check() {
  Report rep;
  int torsion_free_two_gen = 0;
  for (unsigned c = 1; c < 8; ++c) {
    // H_c = {p : <c, parity(p)> = 0}.
    std::vector<MElem> reps;
    for (auto cls : kCosetClasses)
      if (__builtin_popcount(c & static_cast<unsigned>(cls)) % 2 == 0) reps.push_back(coset_rep(cls));
    const bool torsion_free = __builtin_popcount(c & 7u) % 2 == 1;
    // H^2 is spanned by q^2 and (q^-1 n q) n for coset reps q and n in M^2.
    std::vector<IntVec3> gens;
    for (const auto& q : reps) {
      const MElem q2 = mul(q, q);
      gens.push_back({q2.i / 2, q2.j / 2, q2.k / 2});
      for (const MElem& n : {MElem{2, 0, 0}, MElem{0, 2, 0}, MElem{0, 0, 2}}) {
        const MElem t = mul(conj(n, q), n);
        gens.push_back({t.i / 2, t.j / 2, t.k / 2});
      }
    }
    const Lattice3 h2 = Lattice3::span(gens);
    const Int quotient = 4 * h2.index();
    std::string name;
    for (const auto& q : reps)
      if (!q.is_identity()) name += (name.empty() ? "" : ",") + coset_label(coset_class(q));
    rep.note("H = <" + name + ">M^2: " + (torsion_free ? "torsion-free" : "has torsion") +
             ", |H/H^2| = " + quotient.str());
    if (torsion_free && quotient == 4) ++torsion_free_two_gen;
    if (c == 7) rep.check("V is torsion-free with |V/V^2| = 4", torsion_free && quotient == 4);
    if (c == 4)
      rep.check("W = <x,y,z^2> is torsion-free with |W/W^2| = 8", torsion_free && quotient == 8,
                "H^2 = " + to_string(h2));
  }
  rep.check("exactly one torsion-free index-2 subgroup with |H/H^2| = 4", torsion_free_two_gen == 1);
  return rep;
}

}  // namespace mennicke
