#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "penney/bigint.hpp"

namespace penney {

/// How a pattern is written out: "0"/"1" (canonical) or "T"/"H".
enum class Notation { Binary, Letters };

/// A nonempty sequence of fair-coin outcomes, 1 = head and 0 = tail, in toss
/// order. Immutable once constructed.
class Pattern {
 public:
  /// Throws Error(EmptyPattern) for an empty span and Error(InvalidSymbol)
  /// for any element other than 0 or 1.
  explicit Pattern(std::span<const std::uint8_t> bits);

  /// The `length` low bits of `value`, most significant bit first.
  static Pattern from_integer(std::uint64_t value, std::size_t length);

  std::size_t length() const noexcept { return bits_.size(); }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

  Pattern complement() const;

  /// Bits read as a binary number, first toss most significant.
  /// Throws Error(TooLarge) when the pattern does not fit in 64 bits.
  std::uint64_t to_integer() const;

  std::string to_string(Notation notation = Notation::Binary) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Accepts "0"/"1" or "T"/"H" (either case), never mixed, surrounding
/// whitespace ignored.
Pattern parse_pattern(std::string_view text);

inline Pattern complement(const Pattern& p) { return p.complement(); }

/// Self-overlap coefficients c_1..c_m: c_j = 1 iff the length-j prefix of the
/// pattern equals its length-j suffix. c_m is always 1.
class CorrelationSet {
 public:
  explicit CorrelationSet(std::vector<std::uint8_t> coefficients);

  std::size_t length() const noexcept { return coefficients_.size(); }
  /// 1-based, matching c_j.
  std::uint8_t coefficient(std::size_t j) const { return coefficients_.at(j - 1); }
  std::span<const std::uint8_t> coefficients() const noexcept { return coefficients_; }
  /// Every j with c_j = 1, ascending.
  std::vector<std::size_t> overlaps() const;

  friend bool operator==(const CorrelationSet&, const CorrelationSet&) = default;

 private:
  std::vector<std::uint8_t> coefficients_;
};

CorrelationSet correlation_set(const Pattern& p);

}  // namespace penney
