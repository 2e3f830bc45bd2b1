#pragma once

#include "mennicke/mgroup.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mennicke {

// Endomorphism of M by the images of x, y, z. Composition is left to right:
// compose(e1, e2) applies e1 first.
struct MEndo {
  MElem img_x, img_y, img_z;

  static MEndo identity() { return {MElem::x(), MElem::y(), MElem::z()}; }
  friend bool operator==(const MEndo&, const MEndo&) = default;
};

enum class MRelation { XY, YZ, ZX };  // x^y = x^-1, y^z = y^-1, z^x = z^-1
std::string relation_name(MRelation r);

// First defining relation violated by the images, or nothing when all hold.
std::optional<MRelation> relation_check(const MEndo& e);

// Throws std::invalid_argument if a relation fails.
MEndo make_endo_checked(const MElem& ix, const MElem& iy, const MElem& iz);

MElem apply(const MEndo& e, const MElem& p);
MEndo compose(const MEndo& e1, const MEndo& e2);
MEndo inner(const MElem& m);  // g -> m^-1 g m

// Row r holds the half-coordinates of the image of the r-th basis element
// of M^2 (x^2, y^2, z^2); with row vectors, m2(compose(a, b)) = m2(a) m2(b).
using IntMatrix3 = std::array<std::array<Int, 3>, 3>;
IntMatrix3 m2_matrix(const MEndo& e);
IntMatrix3 matmul(const IntMatrix3& a, const IntMatrix3& b);
IntMatrix3 identity_matrix3();
Int det(const IntMatrix3& m);

// Same convention over GF(2) on M/M^2; bit c of row r is entry (r, c).
using F2Matrix3 = std::array<std::uint8_t, 3>;
F2Matrix3 mod2_matrix(const MEndo& e);
bool f2_invertible(const F2Matrix3& m);

bool is_automorphism(const MEndo& e);

// For a fixed parity class of t, t^-1 a t is affine in the half-coordinates
// of t - parity. Each entry records the rank of that system and its integral
// solution, if one exists and verifies exactly.
struct ParityClassSolution {
  CosetClass parity = CosetClass::One;
  std::size_t rank = 0;
  std::optional<MElem> solution;
};
std::vector<ParityClassSolution> conjugator_solutions(
    const std::vector<std::pair<MElem, MElem>>& pairs);

// Some t with t^-1 a t = b for every pair.
std::optional<MElem> solve_conjugator(const std::vector<std::pair<MElem, MElem>>& pairs);

std::optional<MElem> is_inner(const MEndo& e);

// Entry c is the class of e(rep(c)).
using ClassPerm = std::array<CosetClass, 8>;
ClassPerm lambda_perm(const MEndo& e);
std::vector<std::vector<CosetClass>> orbits(const std::vector<MEndo>& gens);
std::string to_string(const std::vector<std::vector<CosetClass>>& partition);

MEndo theta();                                     // x -> y -> z -> x
MEndo a_endo();                                    // x -> x z^2
MEndo b_endo();                                    // y -> y x^2
MEndo c_endo();                                    // z -> z y^2
MEndo p_family(const Int& c, const Int& d, const Int& g);  // x z^2c, y x^2d, z y^2g
MEndo kernel_rep(int r, int s, int t);             // x z^r, y x^s, z y^t

// "x -> ..., y -> ..., z -> ..."
std::string to_string(const MEndo& e);
MEndo parse_mendo(std::string_view text);

}  // namespace mennicke
