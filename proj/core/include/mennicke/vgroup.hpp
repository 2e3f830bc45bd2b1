#pragma once

#include "mennicke/ggroup.hpp"
#include "mennicke/report.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace mennicke {

// Element of V = <xy, yz, zx>, the elements of M with even coordinate sum.
class VElem {
 public:
  VElem() = default;
  explicit VElem(const MElem& m);  // throws std::invalid_argument outside V

  static VElem identity() { return VElem(); }
  static VElem u();  // x y
  static VElem v();  // y z
  static VElem w();  // z x

  const MElem& m() const { return m_; }
  friend bool operator==(const VElem&, const VElem&) = default;

 private:
  MElem m_;
};

VElem vmul(const VElem& p, const VElem& q);
VElem vinv(const VElem& p);
VElem vpow(const VElem& p, const Int& n);

// Class in V/V^2: 0 = 1, 1 = u, 2 = v, 3 = w.
int v_class(const VElem& p);

// p as rep * w^2s * u^2t * v^2r with rep in {1, u, v, w}; relies on
// u^2 = y^2, v^2 = z^2, w^2 = x^2.
Word to_v_word(const VElem& p);
// "u w^2 (x^3 y)": the V word followed by the M normal form.
std::string to_string(const VElem& p);

struct VEndo {
  VElem img_u, img_v, img_w;

  static VEndo identity() { return {VElem::u(), VElem::v(), VElem::w()}; }
  friend bool operator==(const VEndo&, const VEndo&) = default;
};

// Names of the twelve defining relations, in checking order.
const std::array<std::string, 12>& v_relation_names();
// First violated defining relation, or nothing.
std::optional<std::string> v_relation_check(const VEndo& e);
VEndo make_vendo_checked(const VElem& iu, const VElem& iv, const VElem& iw);

VElem vapply(const VEndo& e, const VElem& p);
VEndo vcompose(const VEndo& e1, const VEndo& e2);  // e1 first
std::string to_string(const VEndo& e);

Report v_presentation_check();

VEndo psi();      // u -> u w^2, v -> w v^2, w -> v u^2
VEndo psi_inv();  // u -> u v^-2, v -> w u^-2, w -> v w^-2

VEndo restrict(const GElem& g);
Report gamma_injectivity_check(std::uint64_t seed, std::size_t samples);

// Entry c is the class of the image of the representative of class c.
using VPerm = std::array<int, 4>;
VPerm pi_perm(const VEndo& e);
std::string to_string(const VPerm& p);

// The g with restrict(g) == e, or nothing when e does not extend to M.
std::optional<GElem> extend_to_M(const VEndo& e);

// restrict(g) followed by Psi^psi.
struct VAutElem {
  GElem g;
  bool psi = false;
  friend bool operator==(const VAutElem&, const VAutElem&) = default;
};

VEndo act(const VAutElem& p);
VPerm pi_perm(const VAutElem& p);
VAutElem vaut_mul(const VAutElem& p1, const VAutElem& p2);

// tau(g) restricts to Psi^-1 g Psi (left to right), tau_inv(g) to Psi g Psi^-1;
// c0 restricts to Psi^2. Computed once on the generators.
GElem tau(const GElem& g);
GElem tau_inv(const GElem& g);
const GElem& psi_square_cocycle();
// tau on X, Y, Z, A, B, C, D.
const std::array<GElem, 7>& tau_generator_images();

// Psi and Psi^-1 are inverse automorphisms, Pi(Psi) = (v w), Psi does not
// extend to M, and the pair arithmetic matches the action on V.
Report psi_check(std::uint64_t seed, std::size_t samples);

Report inn_m_not_characteristic_witness(std::uint64_t seed, std::size_t samples);
Report centralizer_triviality_check(std::uint64_t seed, std::size_t samples);
Report v_center_check(long box);
// The seven parity-hyperplane subgroups of index 2 in M.
Report index2_subgroups_check();

}  // namespace mennicke
