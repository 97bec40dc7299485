#include "penney/dyadic.hpp"

#include <boost/multiprecision/integer.hpp>

namespace penney {

DyadicRational::DyadicRational(BigInt numerator, unsigned exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  normalize();
}

void DyadicRational::normalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  const unsigned trailing = static_cast<unsigned>(boost::multiprecision::lsb(abs(numerator_)));
  const unsigned shift = trailing < exponent_ ? trailing : exponent_;
  numerator_ >>= shift;
  exponent_ -= shift;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& rhs) {
  if (exponent_ >= rhs.exponent_) {
    numerator_ += rhs.numerator_ << (exponent_ - rhs.exponent_);
  } else {
    numerator_ = (numerator_ << (rhs.exponent_ - exponent_)) + rhs.numerator_;
    exponent_ = rhs.exponent_;
  }
  normalize();
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& rhs) { return *this += -rhs; }

DyadicRational& DyadicRational::operator*=(const DyadicRational& rhs) {
  numerator_ *= rhs.numerator_;
  exponent_ += rhs.exponent_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  const unsigned e = a.exponent_ > b.exponent_ ? a.exponent_ : b.exponent_;
  const BigInt lhs = a.numerator_ << (e - a.exponent_);
  const BigInt rhs = b.numerator_ << (e - b.exponent_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string DyadicRational::to_fraction_string() const {
  if (exponent_ == 0) return numerator_.str();
  return numerator_.str() + "/" + pow2(exponent_).str();
}

std::string DyadicRational::to_decimal_string() const {
  if (exponent_ == 0) return numerator_.str();
  // k / 2^e = k * 5^e / 10^e
  BigInt scaled = abs(numerator_) * boost::multiprecision::pow(BigInt(5), exponent_);
  std::string digits = scaled.str();
  if (digits.size() <= exponent_) digits.insert(0, exponent_ + 1 - digits.size(), '0');
  digits.insert(digits.size() - exponent_, 1, '.');
  if (numerator_ < 0) digits.insert(0, 1, '-');
  return digits;
}

BigRational DyadicRational::to_rational() const {
  return BigRational(numerator_, pow2(exponent_));
}

double DyadicRational::to_double() const { return static_cast<double>(to_rational()); }

}  // namespace penney
