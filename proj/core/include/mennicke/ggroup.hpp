#pragma once

#include "mennicke/mendo.hpp"
#include "mennicke/report.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mennicke {

// X^a Y^b Z^c A^i B^j C^k D^l in G = Aut(M), with i, j, k in {0, 1} and
// l in {0, 1, 2}. X, Y, Z are the inner automorphisms of x, y, z.
struct GElem {
  Int a, b, c;
  std::uint8_t i = 0, j = 0, k = 0, l = 0;

  // Throws std::invalid_argument when i, j, k, l are out of range.
  static GElem make(const Int& a, const Int& b, const Int& c, int i, int j, int k, int l);
  static GElem identity() { return {}; }
  static GElem inner_of(const MElem& m) { return {m.i, m.j, m.k}; }
  static GElem X() { return {1, 0, 0}; }
  static GElem Y() { return {0, 1, 0}; }
  static GElem Z() { return {0, 0, 1}; }
  static GElem A() { return {0, 0, 0, 1, 0, 0, 0}; }
  static GElem B() { return {0, 0, 0, 0, 1, 0, 0}; }
  static GElem C() { return {0, 0, 0, 0, 0, 1, 0}; }
  static GElem D() { return {0, 0, 0, 0, 0, 0, 1}; }

  MElem m_part() const { return {a, b, c}; }
  bool is_identity() const { return a == 0 && b == 0 && c == 0 && i == 0 && j == 0 && k == 0 && l == 0; }
  friend bool operator==(const GElem&, const GElem&) = default;
};

// X, Y, Z, A, B, C, D in this order.
const std::vector<GElem>& g_generators();
GElem g_generator(char name);

GElem gmul(const GElem& g1, const GElem& g2);
GElem ginv(const GElem& g);
GElem gpow(const GElem& g, const Int& n);
GElem gconj(const GElem& g, const GElem& h);  // h^-1 g h
GElem gcomm(const GElem& g, const GElem& h);  // g^-1 h^-1 g h

template <typename... Rest>
GElem gmul(const GElem& g1, const GElem& g2, const Rest&... rest) {
  return gmul(gmul(g1, g2), rest...);
}

MEndo semantic(const GElem& g);
// Product of generator endomorphisms along the word; independent of gmul.
MEndo semantic_word(const Word& w);

class RecognitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The unique g with semantic(g) == e. Throws RecognitionError otherwise.
GElem recognize(const MEndo& e);

GElem eval_g(const Word& w);         // letter by letter with gmul
GElem from_normal_form(const Word& w);  // requires a collected G word
Word to_word(const GElem& g);
std::string to_string(const GElem& g);

// Defining and consequence relations of the presentation, as word pairs.
struct GRelation {
  std::string name;
  std::string lhs;
  std::string rhs;
};
const std::vector<GRelation>& g_defining_relations();
const std::vector<GRelation>& g_consequence_relations();

// Evaluates every relation under gmul, the word collector and the semantic
// functor; also the rank-3 free abelian check for <A, B, C>.
Report consequence_relations_check();

enum class GSubgroup { InnM, K, R, U, GG, G2, M2 };
inline constexpr GSubgroup kGSubgroups[] = {GSubgroup::InnM, GSubgroup::K,  GSubgroup::R,
                                            GSubgroup::U,    GSubgroup::GG, GSubgroup::G2,
                                            GSubgroup::M2};
std::string_view subgroup_name(GSubgroup s);
bool subgroup_membership(const GElem& g, GSubgroup s);
std::vector<GElem> subgroup_generators(GSubgroup s);

// Orders and isomorphism types of G/[G,G]^2, G/[G,G], G/G^2, M/M^2 and
// Out(M), computed from the finite quotient tables.
Report quotient_invariants();  // defined with the f2quot checks

}  // namespace mennicke
