#include "penney/errors.hpp"

namespace penney {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyPattern: return "EmptyPattern";
    case ErrorKind::InvalidSymbol: return "InvalidSymbol";
    case ErrorKind::InvalidLength: return "InvalidLength";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::InvalidHorizon: return "InvalidHorizon";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::SafetyCapExceeded: return "SafetyCapExceeded";
  }
  return "Unknown";
}

}  // namespace penney
