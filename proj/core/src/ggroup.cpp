#include "mennicke/ggroup.hpp"

#include "mennicke/collector.hpp"

#include <array>

namespace mennicke {
namespace {

const MEndo& theta_inv_endo() {
  static const MEndo e{MElem::z(), MElem::x(), MElem::y()};
  return e;
}

MElem theta_inv_pow(MElem m, int l) {
  for (int n = 0; n < l; ++n) m = apply(theta_inv_endo(), m);
  return m;
}

// Image of x^a y^b z^c under (A^i B^j C^k)^-1, using (x z^2e)^f = x^f z^(2e[f odd])
// and its rotations.
MElem r_inverse_apply(const MElem& m, int i, int j, int k) {
  const MElem xs = mul(MElem{m.i, 0, 0}, MElem{0, 0, is_odd(m.i) ? Int(-2 * i) : Int(0)});
  const MElem ys = mul(MElem{0, m.j, 0}, MElem{is_odd(m.j) ? Int(-2 * j) : Int(0), 0, 0});
  const MElem zs = mul(MElem{0, 0, m.k}, MElem{0, is_odd(m.k) ? Int(-2 * k) : Int(0), 0});
  return mul(xs, ys, zs);
}

// Conjugation by D: D (A^i B^j C^k) D^-1 = A^j B^k C^i.
std::array<int, 3> rotate_bits(std::array<int, 3> r, int l) {
  for (int n = 0; n < l; ++n) r = {r[1], r[2], r[0]};
  return r;
}

MEndo endo_pow(const MEndo& e, int n) {
  MEndo out = MEndo::identity();
  for (int t = 0; t < n; ++t) out = compose(out, e);
  return out;
}

const MEndo& a_inv_endo() {
  static const MEndo e{{1, 0, -2}, MElem::y(), MElem::z()};
  return e;
}
const MEndo& b_inv_endo() {
  static const MEndo e{MElem::x(), {2, 1, 0}, MElem::z()};
  return e;
}
const MEndo& c_inv_endo() {
  static const MEndo e{MElem::x(), MElem::y(), {0, 2, 1}};
  return e;
}

}  // namespace

GElem GElem::make(const Int& a, const Int& b, const Int& c, int i, int j, int k, int l) {
  auto bit = [](int v) { return v == 0 || v == 1; };
  if (!bit(i) || !bit(j) || !bit(k) || l < 0 || l > 2)
    throw std::invalid_argument("GElem: exponents of A, B, C must be bits and D mod 3");
  return {a, b, c, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
          static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(l)};
}

const std::vector<GElem>& g_generators() {
  static const std::vector<GElem> gens = {GElem::X(), GElem::Y(), GElem::Z(), GElem::A(),
                                          GElem::B(), GElem::C(), GElem::D()};
  return gens;
}

GElem g_generator(char name) {
  const int r = generator_rank(GroupId::G, name);
  if (r < 0) throw std::invalid_argument(std::string("not a generator of G: ") + name);
  return g_generators()[static_cast<std::size_t>(r)];
}

GElem gmul(const GElem& g1, const GElem& g2) {
  // g1 g2 = X(m1) R1 D^l1 X(m2) R2 D^l2. Move D^l1 right, then R1.
  const MElem m2t = theta_inv_pow(g2.m_part(), g1.l);
  const auto r2t = rotate_bits({g2.i, g2.j, g2.k}, g1.l);
  const MElem m2tt = r_inverse_apply(m2t, g1.i, g1.j, g1.k);
  const int i = g1.i + r2t[0], j = g1.j + r2t[1], k = g1.k + r2t[2];
  // A^2 = Z^2, B^2 = X^2, C^2 = Y^2 and these squares commute with R.
  const MElem squares{j == 2 ? 2 : 0, k == 2 ? 2 : 0, i == 2 ? 2 : 0};
  const MElem m = mul(g1.m_part(), m2tt, squares);
  return {m.i, m.j, m.k, static_cast<std::uint8_t>(i % 2), static_cast<std::uint8_t>(j % 2),
          static_cast<std::uint8_t>(k % 2), static_cast<std::uint8_t>((g1.l + g2.l) % 3)};
}

GElem ginv(const GElem& g) {
  // (X(m) R D^l)^-1 = D^-l R^-1 X(m^-1), with R^-1 = X^-2j Y^-2k Z^-2i R.
  const GElem d{0, 0, 0, 0, 0, 0, static_cast<std::uint8_t>((3 - g.l) % 3)};
  const GElem r{-2 * g.j, -2 * g.k, -2 * g.i, g.i, g.j, g.k, 0};
  return gmul(d, r, GElem::inner_of(inv(g.m_part())));
}

GElem gpow(const GElem& g, const Int& n) {
  GElem base = n < 0 ? ginv(g) : g;
  Int e = n < 0 ? Int(-n) : n;
  GElem acc = GElem::identity();
  while (e > 0) {
    if (is_odd(e)) acc = gmul(acc, base);
    e >>= 1;
    if (e > 0) base = gmul(base, base);
  }
  return acc;
}

GElem gconj(const GElem& g, const GElem& h) { return gmul(ginv(h), g, h); }

GElem gcomm(const GElem& g, const GElem& h) { return gmul(ginv(g), ginv(h), g, h); }

MEndo semantic(const GElem& g) {
  MEndo e = inner(g.m_part());
  if (g.i) e = compose(e, a_endo());
  if (g.j) e = compose(e, b_endo());
  if (g.k) e = compose(e, c_endo());
  return compose(e, endo_pow(theta(), g.l));
}

MEndo semantic_word(const Word& w) {
  MEndo out = MEndo::identity();
  for (const auto& l : w) {
    MEndo fwd, bwd;
    switch (l.gen) {
      case 'X': fwd = inner(MElem::x()); bwd = inner(inv(MElem::x())); break;
      case 'Y': fwd = inner(MElem::y()); bwd = inner(inv(MElem::y())); break;
      case 'Z': fwd = inner(MElem::z()); bwd = inner(inv(MElem::z())); break;
      case 'A': fwd = a_endo(); bwd = a_inv_endo(); break;
      case 'B': fwd = b_endo(); bwd = b_inv_endo(); break;
      case 'C': fwd = c_endo(); bwd = c_inv_endo(); break;
      case 'D': fwd = theta(); bwd = theta_inv_endo(); break;
      default: throw std::invalid_argument(std::string("semantic_word: generator ") + l.gen);
    }
    const MEndo& step = l.exp > 0 ? fwd : bwd;
    for (Int n = 0; n < (l.exp > 0 ? l.exp : Int(-l.exp)); ++n) out = compose(out, step);
  }
  return out;
}

GElem recognize(const MEndo& e) {
  if (relation_check(e) || !is_automorphism(e))
    throw RecognitionError("recognize: not an automorphism of M: " + to_string(e));
  // The class of x under e selects the power of theta.
  const CosetClass cx = coset_class(e.img_x);
  int l;
  if (cx == CosetClass::X) l = 0;
  else if (cx == CosetClass::Y) l = 1;
  else if (cx == CosetClass::Z) l = 2;
  else throw RecognitionError("recognize: x is sent to class " + coset_label(cx));
  const MEndo stripped = compose(e, endo_pow(theta_inv_endo(), l));
  for (int bits = 0; bits < 8; ++bits) {
    const int i = bits & 1, j = (bits >> 1) & 1, k = (bits >> 2) & 1;
    MEndo f = stripped;
    if (k) f = compose(f, c_inv_endo());
    if (j) f = compose(f, b_inv_endo());
    if (i) f = compose(f, a_inv_endo());
    if (auto m = is_inner(f)) return GElem::make(m->i, m->j, m->k, i, j, k, l);
  }
  throw RecognitionError("recognize: automorphism outside <X, A, D>: " + to_string(e));
}

GElem eval_g(const Word& w) {
  GElem acc = GElem::identity();
  for (const auto& l : w) acc = gmul(acc, gpow(g_generator(l.gen), l.exp));
  return acc;
}

GElem from_normal_form(const Word& w) {
  GElem g;
  int last = -1;
  for (const auto& l : w) {
    const int r = generator_rank(GroupId::G, l.gen);
    if (r <= last) throw std::invalid_argument("from_normal_form: word is not collected");
    last = r;
    switch (l.gen) {
      case 'X': g.a = l.exp; break;
      case 'Y': g.b = l.exp; break;
      case 'Z': g.c = l.exp; break;
      default: {
        const long v = static_cast<long>(l.exp);
        if ((l.gen == 'D' && (v < 1 || v > 2)) || (l.gen != 'D' && v != 1))
          throw std::invalid_argument("from_normal_form: exponent out of range");
        if (l.gen == 'A') g.i = 1;
        if (l.gen == 'B') g.j = 1;
        if (l.gen == 'C') g.k = 1;
        if (l.gen == 'D') g.l = static_cast<std::uint8_t>(v);
      }
    }
  }
  return g;
}

Word to_word(const GElem& g) {
  Word w;
  w.append('X', g.a);
  w.append('Y', g.b);
  w.append('Z', g.c);
  w.append('A', g.i);
  w.append('B', g.j);
  w.append('C', g.k);
  w.append('D', g.l);
  return w;
}

std::string to_string(const GElem& g) { return to_string(to_word(g)); }

const std::vector<GRelation>& g_defining_relations() {
  static const std::vector<GRelation> rels = {
      {"X^Y=X^-1", "Y^-1 X Y", "X^-1"},  {"X^D=Y", "D^-1 X D", "Y"},
      {"Y^D=Z", "D^-1 Y D", "Z"},        {"Z^D=X", "D^-1 Z D", "X"},
      {"D^3=1", "D^3", "1"},             {"[A,B]=1", "A^-1 B^-1 A B", "1"},
      {"A^D=B", "D^-1 A D", "B"},        {"B^D=C", "D^-1 B D", "C"},
      {"C^D=A", "D^-1 C D", "A"},        {"A^2=Z^2", "A^2", "Z^2"},
      {"X^A=XZ^2", "A^-1 X A", "X Z^2"}, {"Y^A=Y", "A^-1 Y A", "Y"},
      {"Z^A=Z", "A^-1 Z A", "Z"},
  };
  return rels;
}

const std::vector<GRelation>& g_consequence_relations() {
  static const std::vector<GRelation> rels = {
      {"Y^Z=Y^-1", "Z^-1 Y Z", "Y^-1"},  {"Z^X=Z^-1", "X^-1 Z X", "Z^-1"},
      {"[B,C]=1", "B^-1 C^-1 B C", "1"}, {"[C,A]=1", "C^-1 A^-1 C A", "1"},
      {"B^2=X^2", "B^2", "X^2"},         {"C^2=Y^2", "C^2", "Y^2"},
      {"X^B=X", "B^-1 X B", "X"},        {"Y^B=YX^2", "B^-1 Y B", "Y X^2"},
      {"Z^B=Z", "B^-1 Z B", "Z"},        {"X^C=X", "C^-1 X C", "X"},
      {"Y^C=Y", "C^-1 Y C", "Y"},        {"Z^C=ZY^2", "C^-1 Z C", "Z Y^2"},
  };
  return rels;
}

Report consequence_relations_check() {
  Report rep;
  auto run = [&](const std::vector<GRelation>& rels, const std::string& kind) {
    for (const auto& r : rels) {
      const Word lhs = parse_word(r.lhs, GroupId::G);
      const Word rhs = parse_word(r.rhs, GroupId::G);
      const bool by_gmul = eval_g(lhs) == eval_g(rhs);
      const bool by_collector = collect(lhs, GroupId::G) == collect(rhs, GroupId::G);
      const bool by_semantic = semantic_word(lhs) == semantic_word(rhs);
      rep.check(kind + " " + r.name, by_gmul && by_collector && by_semantic,
                std::string("gmul=") + (by_gmul ? "ok" : "no") +
                    " collector=" + (by_collector ? "ok" : "no") +
                    " semantic=" + (by_semantic ? "ok" : "no"));
    }
  };
  run(g_defining_relations(), "defining");
  run(g_consequence_relations(), "consequence");

  // <A, B, C>: pairwise commuting, and (A^p B^q C^r)^2 = Z^2p X^2q Y^2r lies in
  // the free abelian M^2 on the basis x^2, y^2, z^2. So the map from Z^3 is
  // injective and the group is free abelian of rank 3.
  const GElem a = GElem::A(), b = GElem::B(), c = GElem::C();
  const bool commute = gmul(a, b) == gmul(b, a) && gmul(b, c) == gmul(c, b) &&
                       gmul(a, c) == gmul(c, a);
  bool squares_ok = true;
  bool injective = true;
  for (int p = -3; p <= 3; ++p)
    for (int q = -3; q <= 3; ++q)
      for (int r = -3; r <= 3; ++r) {
        const GElem g = gmul(gpow(a, p), gpow(b, q), gpow(c, r));
        const GElem sq = gmul(g, g);
        if (sq != GElem{2 * q, 2 * r, 2 * p}) squares_ok = false;
        if ((p || q || r) && g.is_identity()) injective = false;
      }
  const IntMatrix3 img = {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  rep.check("<A,B,C> free abelian of rank 3", commute && squares_ok && injective && det(img) != 0,
            "commuting generators; squares Z^2, X^2, Y^2 independent in M^2");
  return rep;
}

std::string_view subgroup_name(GSubgroup s) {
  switch (s) {
    case GSubgroup::InnM: return "InnM";
    case GSubgroup::K: return "K";
    case GSubgroup::R: return "R";
    case GSubgroup::U: return "U";
    case GSubgroup::GG: return "[G,G]";
    case GSubgroup::G2: return "G^2";
    case GSubgroup::M2: return "M^2";
  }
  return "?";
}

bool subgroup_membership(const GElem& g, GSubgroup s) {
  const bool abc_even = is_even(g.a) && is_even(g.b) && is_even(g.c);
  const bool sum_even = is_even(g.a + g.b + g.c);
  const bool bits_even = (g.i + g.j + g.k) % 2 == 0;
  const bool no_bits = g.i == 0 && g.j == 0 && g.k == 0;
  switch (s) {
    case GSubgroup::InnM: return no_bits && g.l == 0;
    case GSubgroup::K:
    case GSubgroup::U: return g.l == 0;
    case GSubgroup::R: return abc_even && g.l == 0;
    case GSubgroup::GG: return sum_even && bits_even && g.l == 0;
    case GSubgroup::G2: return sum_even && bits_even;
    case GSubgroup::M2: return abc_even && no_bits && g.l == 0;
  }
  return false;
}

std::vector<GElem> subgroup_generators(GSubgroup s) {
  const GElem X = GElem::X(), Y = GElem::Y(), Z = GElem::Z();
  const GElem A = GElem::A(), B = GElem::B(), C = GElem::C(), D = GElem::D();
  switch (s) {
    case GSubgroup::InnM: return {X, Y, Z};
    case GSubgroup::K:
    case GSubgroup::U: return {X, Y, Z, A, B, C};
    case GSubgroup::R: return {A, B, C};
    case GSubgroup::GG:
      return {gmul(X, Y), gmul(Y, Z), gmul(Z, X), gmul(A, B), gmul(B, C), gmul(C, A)};
    case GSubgroup::G2:
      return {gmul(X, Y), gmul(Y, Z), gmul(Z, X), gmul(A, B), gmul(B, C), gmul(C, A), D};
    case GSubgroup::M2: return {gmul(X, X), gmul(Y, Y), gmul(Z, Z)};
  }
  return {};
}

}  // namespace mennicke
