#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace penney {

enum class ErrorKind {
  EmptyPattern,
  InvalidSymbol,
  InvalidLength,
  InvalidIndex,
  InvalidHorizon,
  InvalidArgument,
  TooLarge,
  Overflow,
  SafetyCapExceeded,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` says which contract was
/// violated; `index()` carries the offending position for InvalidSymbol.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(message), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

  /// Overflow and safety-cap failures indicate an internal guard, not bad input.
  bool is_internal_guard() const noexcept {
    return kind_ == ErrorKind::Overflow || kind_ == ErrorKind::SafetyCapExceeded;
  }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace penney
