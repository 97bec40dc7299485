#pragma once

#include <compare>
#include <string>

#include "penney/bigint.hpp"

namespace penney {

/// Exact value numerator / 2^exponent. Always kept canonical: the exponent
/// is minimal, so the numerator is odd whenever the exponent is positive and
/// zero is stored as 0/2^0.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt numerator, unsigned exponent);
  // NOLINTNEXTLINE(google-explicit-constructor)
  DyadicRational(int value) : DyadicRational(BigInt(value), 0) {}

  static DyadicRational from_integer(BigInt value) { return {std::move(value), 0}; }

  const BigInt& numerator() const noexcept { return numerator_; }
  unsigned exponent() const noexcept { return exponent_; }
  bool is_zero() const noexcept { return numerator_ == 0; }

  DyadicRational& operator+=(const DyadicRational& rhs);
  DyadicRational& operator-=(const DyadicRational& rhs);
  DyadicRational& operator*=(const DyadicRational& rhs);
  DyadicRational operator-() const { return {-numerator_, exponent_}; }

  friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) { return a += b; }
  friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) { return a -= b; }
  friend DyadicRational operator*(DyadicRational a, const DyadicRational& b) { return a *= b; }

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

  /// "3/16", or just "3" for integers.
  std::string to_fraction_string() const;
  /// Terminating decimal expansion with every digit, e.g. "0.1875".
  std::string to_decimal_string() const;
  BigRational to_rational() const;
  /// Display only; rounds.
  double to_double() const;

 private:
  void normalize();

  BigInt numerator_ = 0;
  unsigned exponent_ = 0;
};

}  // namespace penney
