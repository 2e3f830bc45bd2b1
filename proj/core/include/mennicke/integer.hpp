#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mennicke {

using Int = boost::multiprecision::cpp_int;

// Parity of the magnitude; cpp_int is sign-magnitude so this is the parity of n.
inline bool is_odd(const Int& n) { return boost::multiprecision::bit_test(n, 0); }
inline bool is_even(const Int& n) { return !is_odd(n); }

// (-1)^n
inline int sign_pow(const Int& n) { return is_odd(n) ? -1 : 1; }

inline Int signed_by(const Int& value, const Int& exponent) {
  return is_odd(exponent) ? Int(-value) : value;
}

// Euclidean remainder in [0, m).
inline long floor_mod(const Int& n, long m) {
  long r = static_cast<long>(n % m);
  return r < 0 ? r + m : r;
}

// q with n = m*q + floor_mod(n, m).
inline Int floor_div(const Int& n, long m) { return (n - floor_mod(n, m)) / m; }

inline std::string to_string(const Int& n) { return n.str(); }

}  // namespace mennicke
