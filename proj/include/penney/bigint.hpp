#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace penney {

// Unbounded exact integer; counts grow like 2^n and never wrap.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned exponent) {
  BigInt value = 1;
  value <<= exponent;
  return value;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace penney
