#pragma once

#include "mennicke/integer.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace mennicke {

using Rational = boost::multiprecision::cpp_rational;

struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<Rational> particular;  // free variables set to zero

  // The particular solution when it exists and is integral.
  std::optional<std::vector<Int>> integral() const;
};

// Exact Gaussian elimination over Q for a * s = b.
LinearSolution solve_rational(std::vector<std::vector<Int>> a, std::vector<Int> b);

}  // namespace mennicke
