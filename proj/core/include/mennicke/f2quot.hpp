#pragma once

#include "mennicke/lattice.hpp"
#include "mennicke/pgroup.hpp"
#include "mennicke/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mennicke {

enum class QuotientId { GModGG2, GModGG, PModM2, PModPP };
std::string_view quotient_name(QuotientId q);

// Finite group given by representatives and a full multiplication table.
// Elements are indices; index 0 is the identity. Subgroups are sorted
// index lists.
class FiniteGroupTable {
 public:
  using Elem = int;
  using Subgroup = std::vector<Elem>;

  FiniteGroupTable(std::vector<PElem> reps, std::function<Elem(const PElem&)> locate);

  std::size_t order() const { return reps_.size(); }
  const PElem& rep(Elem a) const { return reps_[a]; }
  Elem locate(const PElem& p) const { return locate_(p); }
  Elem mul(Elem a, Elem b) const { return table_[a * order() + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem comm(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem conj(Elem a, Elem b) const { return mul(mul(inv(b), a), b); }  // b^-1 a b

  Subgroup all() const;
  Subgroup generate(const std::vector<Elem>& gens) const;
  Subgroup commutator(const Subgroup& h, const Subgroup& k) const;
  Subgroup derived(const Subgroup& h) const { return commutator(h, h); }
  Subgroup squares(const Subgroup& h) const;
  bool is_normal(const Subgroup& n, const Subgroup& in) const;
  bool is_abelian(const Subgroup& h) const;
  int element_order(Elem a) const;
  int exponent(const Subgroup& h) const;
  // Index-2 subgroups of h.
  std::vector<Subgroup> index2_subgroups(const Subgroup& h) const;
  // Elements of h whose image in h/n has order dividing k.
  Subgroup power_torsion(const Subgroup& h, const Subgroup& n, int k) const;

  // Exhaustive check of the axioms; associativity on every triple when
  // sampled == 0, else on that many random triples.
  bool check_axioms(std::uint64_t seed, std::size_t sampled) const;

 private:
  std::vector<PElem> reps_;
  std::function<Elem(const PElem&)> locate_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
};

// Built once and cached.
const FiniteGroupTable& materialize(QuotientId q);

// Vectors of S = U/M^2 use bit 0 = X, ..., bit 5 = C.
using F2Vec = std::uint8_t;
inline constexpr int kSDim = 6;
std::string f2vec_label(F2Vec v);  // "X A", "1" for zero
// Lift with exponents in {0, 1}.
GElem lift(F2Vec v);
// Image of an element of U modulo M^2.
F2Vec s_image(const GElem& g);

// Reduced row echelon form; the pivot of a row is its lowest set bit and
// rows are sorted by pivot.
class F2Subspace {
 public:
  static F2Subspace span(const std::vector<F2Vec>& vectors);
  const std::vector<F2Vec>& rows() const { return rows_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool contains(F2Vec v) const;
  std::vector<F2Vec> elements() const;
  friend bool operator==(const F2Subspace&, const F2Subspace&) = default;
  friend auto operator<=>(const F2Subspace&, const F2Subspace&) = default;

 private:
  std::vector<F2Vec> rows_;
};

// Rows as bit strings in the order X Y Z A B C, separated by spaces.
std::string to_string(const F2Subspace& s);
F2Subspace parse_f2subspace(std::string_view text);

std::vector<F2Subspace> enumerate_3subspaces();

// Coordinates (p, q, r) of X^2p Y^2q Z^2r, or nothing outside M^2.
std::optional<IntVec3> m2_coords(const GElem& g);
// [Q,Q] for Q = <gens> M^2 contained in U, in M^2 coordinates.
Lattice3 commutator_lattice(const std::vector<GElem>& gens);

Report materialize_check(std::uint64_t seed, std::size_t samples);
Report r_uniqueness_scan();
Report orbit_of_M_scan();

}  // namespace mennicke
