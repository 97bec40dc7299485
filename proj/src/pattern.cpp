#include "penney/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "penney/errors.hpp"

namespace penney {

namespace {

enum class Alphabet { Binary, Letters };

std::optional<Alphabet> alphabet_of(char c) {
  switch (c) {
    case '0':
    case '1':
      return Alphabet::Binary;
    case 't':
    case 'T':
    case 'h':
    case 'H':
      return Alphabet::Letters;
    default:
      return std::nullopt;
  }
}

std::uint8_t decode(char c) { return (c == '1' || c == 'h' || c == 'H') ? 1 : 0; }

}  // namespace

Pattern::Pattern(std::span<const std::uint8_t> bits) : bits_(bits.begin(), bits.end()) {
  if (bits_.empty()) throw Error(ErrorKind::EmptyPattern, "pattern is empty");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw Error(ErrorKind::InvalidSymbol,
                  "bit at index " + std::to_string(i) + " is neither 0 nor 1", i);
    }
  }
}

Pattern Pattern::from_integer(std::uint64_t value, std::size_t length) {
  if (length == 0) throw Error(ErrorKind::EmptyPattern, "pattern is empty");
  if (length > 64) throw Error(ErrorKind::TooLarge, "integer patterns hold at most 64 bits");
  std::vector<std::uint8_t> bits(length);
  for (std::size_t i = 0; i < length; ++i) {
    bits[i] = static_cast<std::uint8_t>((value >> (length - 1 - i)) & 1U);
  }
  return Pattern(bits);
}

Pattern Pattern::complement() const {
  std::vector<std::uint8_t> flipped(bits_.size());
  std::transform(bits_.begin(), bits_.end(), flipped.begin(),
                 [](std::uint8_t b) { return static_cast<std::uint8_t>(b ^ 1U); });
  return Pattern(flipped);
}

std::uint64_t Pattern::to_integer() const {
  if (bits_.size() > 64) {
    throw Error(ErrorKind::TooLarge, "pattern of length " + std::to_string(bits_.size()) +
                                         " does not fit in 64 bits");
  }
  std::uint64_t value = 0;
  for (auto b : bits_) value = (value << 1) | b;
  return value;
}

std::string Pattern::to_string(Notation notation) const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) {
    if (notation == Notation::Binary) {
      out.push_back(b ? '1' : '0');
    } else {
      out.push_back(b ? 'H' : 'T');
    }
  }
  return out;
}

Pattern parse_pattern(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  std::size_t first = 0;
  while (first < text.size() && is_space(text[first])) ++first;
  std::size_t last = text.size();
  while (last > first && is_space(text[last - 1])) --last;
  if (first == last) throw Error(ErrorKind::EmptyPattern, "pattern is empty");

  std::optional<Alphabet> alphabet;
  std::vector<std::uint8_t> bits;
  bits.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) {
    const char c = text[i];
    auto a = alphabet_of(c);
    if (!a || (alphabet && *a != *alphabet)) {
      const std::size_t index = i - first;
      std::string what = a ? "mixes 0/1 with H/T" : "is not one of 0, 1, H, T";
      throw Error(ErrorKind::InvalidSymbol,
                  "character '" + std::string(1, c) + "' at index " + std::to_string(index) +
                      " " + what,
                  index);
    }
    alphabet = a;
    bits.push_back(decode(c));
  }
  return Pattern(bits);
}

CorrelationSet::CorrelationSet(std::vector<std::uint8_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw Error(ErrorKind::InvalidLength, "empty correlation set");
  if (coefficients_.back() != 1) {
    throw Error(ErrorKind::InvalidArgument, "c_m must be 1");
  }
  for (auto c : coefficients_) {
    if (c > 1) throw Error(ErrorKind::InvalidArgument, "coefficients must be 0 or 1");
  }
}

std::vector<std::size_t> CorrelationSet::overlaps() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= coefficients_.size(); ++j) {
    if (coefficients_[j - 1]) out.push_back(j);
  }
  return out;
}

CorrelationSet correlation_set(const Pattern& p) {
  const auto bits = p.bits();
  const std::size_t m = bits.size();
  std::vector<std::uint8_t> c(m, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    c[j - 1] = std::equal(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(j),
                          bits.end() - static_cast<std::ptrdiff_t>(j))
                   ? 1
                   : 0;
  }
  return CorrelationSet(std::move(c));
}

}  // namespace penney
