#pragma once

#include "mennicke/integer.hpp"
#include "mennicke/word.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace mennicke {

// x^i y^j z^k in M = <x, y, z | x^y = x^-1, y^z = y^-1, z^x = z^-1>.
struct MElem {
  Int i, j, k;

  static MElem identity() { return {0, 0, 0}; }
  static MElem x() { return {1, 0, 0}; }
  static MElem y() { return {0, 1, 0}; }
  static MElem z() { return {0, 0, 1}; }

  bool is_identity() const { return i == 0 && j == 0 && k == 0; }
  friend bool operator==(const MElem&, const MElem&) = default;
};

MElem mul(const MElem& p, const MElem& q);
MElem inv(const MElem& p);
MElem conj(const MElem& p, const MElem& g);  // g^-1 p g
MElem comm(const MElem& p, const MElem& q);  // p^-1 q^-1 p q
MElem pow(const MElem& p, const Int& n);

template <typename... Rest>
MElem mul(const MElem& p, const MElem& q, const Rest&... rest) {
  return mul(mul(p, q), rest...);
}

enum class Order { One, Two, Infinite };
Order order(const MElem& p);
std::string to_string(Order o);

// Class in M/M^2, encoded by the parity bits (i | j << 1 | k << 2).
enum class CosetClass : std::uint8_t {
  One = 0, X = 1, Y = 2, XY = 3, Z = 4, ZX = 5, YZ = 6, XYZ = 7
};
inline constexpr std::array<CosetClass, 8> kCosetClasses = {
    CosetClass::One, CosetClass::X,  CosetClass::Y,  CosetClass::XY,
    CosetClass::Z,   CosetClass::ZX, CosetClass::YZ, CosetClass::XYZ};

CosetClass coset_class(const MElem& p);
std::string coset_label(CosetClass c);
// The representative x^a y^b z^c with a, b, c in {0, 1}.
MElem coset_rep(CosetClass c);

bool in_M2(const MElem& p);
bool in_V(const MElem& p);
bool in_gamma(const MElem& p, unsigned n);  // term n >= 1 of the lower central series

// Decides [p,x] = [p,y] = [p,z] = 1 from the closed-form conjugates.
bool is_central(const MElem& p);

// u^i v^j in D_inf = <u, v | u^v = u^-1, v^2 = 1>.
struct DInfElem {
  Int i;
  bool j = false;
  friend bool operator==(const DInfElem&, const DInfElem&) = default;
};

DInfElem dinf_mul(const DInfElem& p, const DInfElem& q);
DInfElem dinf_inv(const DInfElem& p);
DInfElem dinf_pow(const DInfElem& p, const Int& n);

// x -> u, y -> v, z -> 1
DInfElem f1(const MElem& p);
// x -> 1, y -> u, z -> v
DInfElem f2(const MElem& p);
// x -> v, y -> 1, z -> u
DInfElem f3(const MElem& p);

Word to_word(const MElem& p);
MElem eval_m(const Word& w);  // evaluates letter by letter with mul
MElem from_normal_word(const Word& w);  // requires collected form
std::string to_string(const MElem& p);

}  // namespace mennicke
