#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace modsums {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned exponent) {
  BigInt r = 1;
  r <<= exponent;
  return r;
}

inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace modsums
