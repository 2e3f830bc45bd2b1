#include "mennicke/linsolve.hpp"

#include <stdexcept>

namespace mennicke {

std::optional<std::vector<Int>> LinearSolution::integral() const {
  if (!consistent) return std::nullopt;
  std::vector<Int> out;
  out.reserve(particular.size());
  for (const auto& q : particular) {
    if (denominator(q) != 1) return std::nullopt;
    out.push_back(numerator(q));
  }
  return out;
}

LinearSolution solve_rational(std::vector<std::vector<Int>> a, std::vector<Int> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_rational: shape mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = Rational(a[r][c]);
    m[r][cols] = Rational(b[r]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    const Rational lead = m[row][c];
    for (std::size_t k = c; k <= cols; ++k) m[row][k] /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  LinearSolution sol;
  sol.rank = row;
  sol.consistent = true;
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][cols] != 0) sol.consistent = false;
  sol.particular.assign(cols, Rational(0));
  if (sol.consistent)
    for (std::size_t r = 0; r < row; ++r) sol.particular[pivot_col[r]] = m[r][cols];
  return sol;
}

}  // namespace mennicke
