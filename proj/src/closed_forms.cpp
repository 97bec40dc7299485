#include "penney/closed_forms.hpp"

#include <array>
#include <cstdint>

#include "penney/errors.hpp"

namespace penney {

BigInt fibonacci(std::size_t n) {
  BigInt previous = 0;
  BigInt current = 1;
  if (n == 0) return previous;
  for (std::size_t i = 1; i < n; ++i) {
    BigInt next = previous + current;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

Pattern family_pattern(ClosedFormFamily family) {
  switch (family) {
    case ClosedFormFamily::TailHead: return Pattern(std::array<std::uint8_t, 2>{0, 1});
    case ClosedFormFamily::HeadHead: return Pattern(std::array<std::uint8_t, 2>{1, 1});
    case ClosedFormFamily::HeadTailTail: return Pattern(std::array<std::uint8_t, 3>{1, 0, 0});
    case ClosedFormFamily::HeadHeadTail: return Pattern(std::array<std::uint8_t, 3>{1, 1, 0});
  }
  throw Error(ErrorKind::InvalidArgument, "unknown closed-form family");
}

BigInt closed_form_tau(ClosedFormFamily family, std::size_t n) {
  const std::size_t m = family_pattern(family).length();
  if (n < m) {
    throw Error(ErrorKind::InvalidIndex, "closed form needs n >= " + std::to_string(m) +
                                             ", got " + std::to_string(n));
  }
  switch (family) {
    case ClosedFormFamily::TailHead: return BigInt(n - 1);
    case ClosedFormFamily::HeadHead: return fibonacci(n - 1);
    case ClosedFormFamily::HeadTailTail:
    case ClosedFormFamily::HeadHeadTail: return fibonacci(n) - 1;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown closed-form family");
}

}  // namespace penney
