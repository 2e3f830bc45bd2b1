#include "mennicke/lattice.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace mennicke {

Lattice3 Lattice3::span(const std::vector<IntVec3>& gens) {
  Lattice3 l;
  l.normalize(gens);
  return l;
}

void Lattice3::normalize(std::vector<IntVec3> rows) {
  std::vector<IntVec3> out;
  for (int col = 0; col < 3; ++col) {
    // Euclid on the column until at most one row has a nonzero entry.
    for (;;) {
      auto best = rows.end();
      for (auto it = rows.begin(); it != rows.end(); ++it)
        if ((*it)[col] != 0 && (best == rows.end() || abs((*it)[col]) < abs((*best)[col]))) best = it;
      if (best == rows.end()) break;
      bool reduced = false;
      for (auto it = rows.begin(); it != rows.end(); ++it) {
        if (it == best || (*it)[col] == 0) continue;
        const Int q = (*it)[col] / (*best)[col];
        for (int k = 0; k < 3; ++k) (*it)[k] -= q * (*best)[k];
        reduced = true;
      }
      if (!reduced) {
        IntVec3 pivot = *best;
        rows.erase(best);
        if (pivot[col] < 0)
          for (auto& e : pivot) e = -e;
        out.push_back(pivot);
        break;
      }
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IntVec3& r) { return r[0] == 0 && r[1] == 0 && r[2] == 0; }),
               rows.end());
  }
  // Reduce entries above each pivot.
  for (std::size_t p = 0; p < out.size(); ++p) {
    int col = 0;
    while (out[p][col] == 0) ++col;
    for (std::size_t r = 0; r < p; ++r) {
      const Int m = out[p][col];
      Int q = out[r][col] / m;
      if (out[r][col] - q * m < 0) q -= 1;
      for (int k = 0; k < 3; ++k) out[r][k] -= q * out[p][k];
    }
  }
  basis_ = std::move(out);
}

bool Lattice3::add(const IntVec3& v) {
  if (contains(v)) return false;
  std::vector<IntVec3> rows = basis_;
  rows.push_back(v);
  normalize(std::move(rows));
  return true;
}

bool Lattice3::contains(const IntVec3& v) const {
  IntVec3 r = v;
  for (const auto& b : basis_) {
    int col = 0;
    while (b[col] == 0) ++col;
    if (r[col] % b[col] != 0) return false;
    const Int q = r[col] / b[col];
    for (int k = 0; k < 3; ++k) r[k] -= q * b[k];
  }
  return r[0] == 0 && r[1] == 0 && r[2] == 0;
}

bool Lattice3::contains(const Lattice3& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const IntVec3& v) { return contains(v); });
}

Int Lattice3::index() const {
  if (basis_.size() < 3) return 0;
  Int d = 1;
  for (std::size_t r = 0; r < 3; ++r) d *= basis_[r][r];
  return abs(d);
}

std::string to_string(const Lattice3& l) {
  std::string out;
  for (const auto& b : l.basis()) {
    if (!out.empty()) out += ' ';
    out += "(" + b[0].str() + "," + b[1].str() + "," + b[2].str() + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace mennicke
