#pragma once

#include "mennicke/ggroup.hpp"
#include "mennicke/report.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace mennicke {

// g E^e in P = G<E>, with E^2 = ABC.
struct PElem {
  GElem g;
  bool e = false;

  static PElem identity() { return {}; }
  static PElem E() { return {GElem::identity(), true}; }
  static PElem of(const GElem& g) { return {g, false}; }
  bool is_identity() const { return !e && g.is_identity(); }
  friend bool operator==(const PElem&, const PElem&) = default;
};

// X -> XA, Y -> YB, Z -> ZC, fixing A, B, C, D.
GElem e_action(const GElem& g);
// X -> XA^-1, Y -> YB^-1, Z -> ZC^-1, fixing A, B, C, D.
GElem e_inverse_action(const GElem& g);

PElem pmul(const PElem& p1, const PElem& p2);
PElem pinv(const PElem& p);
PElem ppow(const PElem& p, const Int& n);
PElem pconj(const PElem& p, const PElem& q);  // q^-1 p q
PElem pcomm(const PElem& p, const PElem& q);  // p^-1 q^-1 p q

template <typename... Rest>
PElem pmul(const PElem& p1, const PElem& p2, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) return pmul(p1, p2);
  else return pmul(pmul(p1, p2), rest...);
}

PElem eval_p(const Word& w);  // letter by letter with pmul
Word to_word(const PElem& p);
// G normal form followed by "E" when e is set.
std::string to_string(const PElem& p);

// h^p as an automorphism of G: conjugation by g, then E when e is set.
GElem act(const PElem& p, const GElem& h);

// E preserves the defining relations, E^2 is conjugation by ABC, pmul
// matches composition of actions and the word collector.
Report e_action_relations_check(std::uint64_t seed, std::size_t samples);
Report e_not_inner_check(std::uint64_t seed, std::size_t samples);
// Commutator subgroups of the candidate subgroups Q = <gens>M^2.
Report section18_case_checks();
// [P,P], index-2 and index-3 subgroups in P/M^2, G characteristic in P.
Report section20_chain_check();
// Witness h0 with tau = E then conjugation by h0, and the map Theta.
Report omega_correspondence(std::uint64_t seed, std::size_t samples);
// Whether tau lies in Inn(G)<E>.
Report aut_g_closure_check();
Report g_center_check(long box);
Report p_center_check(long box);

}  // namespace mennicke
