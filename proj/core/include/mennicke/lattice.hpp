#pragma once

#include "mennicke/integer.hpp"

#include <array>
#include <string>
#include <vector>

namespace mennicke {

using IntVec3 = std::array<Int, 3>;

// Sublattice of Z^3 kept in Hermite normal form (row style, positive
// pivots, entries above each pivot reduced into [0, pivot)).
class Lattice3 {
 public:
  Lattice3() = default;
  static Lattice3 span(const std::vector<IntVec3>& gens);
  static Lattice3 full() { return span({IntVec3{1, 0, 0}, IntVec3{0, 1, 0}, IntVec3{0, 0, 1}}); }

  // Returns true if v was not already contained.
  bool add(const IntVec3& v);
  bool contains(const IntVec3& v) const;
  bool contains(const Lattice3& other) const;

  const std::vector<IntVec3>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  // Index in Z^3; zero when rank < 3.
  Int index() const;

  friend bool operator==(const Lattice3&, const Lattice3&) = default;

 private:
  void normalize(std::vector<IntVec3> rows);
  std::vector<IntVec3> basis_;
};

// "(2,0,0) (0,1,-1)"
std::string to_string(const Lattice3& l);

}  // namespace mennicke
