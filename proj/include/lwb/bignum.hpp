#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lwb {

// Arbitrary-precision integer used throughout: Ackermann codes of corpus
// sentences reach ~2^2000 and tree codes in the diagonal construction grow
// well past that.
using BigInt = boost::multiprecision::cpp_int;

// Mathematical remainder in [0, m), independent of the sign of a.
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace lwb
