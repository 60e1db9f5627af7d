#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace klab {

using Int = boost::multiprecision::cpp_int;

// Bits needed to store v as sign + binary magnitude: ceil(log2|v|) + 2 for
// v != 0. Zero still occupies a sign and one digit cell, hence 2.
inline std::uint64_t bit_length(const Int& v) {
  if (v == 0) return 2;
  Int m = v < 0 ? Int(-v) : v;
  std::uint64_t top = boost::multiprecision::msb(m);  // floor(log2 m)
  bool pow2 = boost::multiprecision::lsb(m) == top;
  return (pow2 ? top : top + 1) + 2;
}

inline Int pow2(std::uint64_t e) {
  Int r = 1;
  r <<= e;
  return r;
}

inline int sign_of(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

inline std::string to_decimal(const Int& v) { return v.str(); }

}  // namespace klab
