#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "penney/pattern.hpp"

namespace penney {

enum class Identity {
  /// 2 sigma_{n-1} = sigma_n + tau_n
  AvoidanceRecurrence,
  /// sigma_n = sum_j c_j tau_{j+n}
  CorrelationExpansion,
  /// sum_{k=m}^{n} tau_k / 2^k = 1 - sigma_n / 2^n
  Telescoping,
};

const char* to_string(Identity identity) noexcept;

struct IdentityFailure {
  Identity identity;
  std::size_t n;
  std::string detail;
};

struct IdentityReport {
  Pattern pattern;
  std::size_t horizon;
  std::size_t checks = 0;
  std::vector<IdentityFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Checks all three identities in exact arithmetic for every admissible n up
/// to the horizon. Failures are collected, not thrown.
/// Throws Error(InvalidHorizon) when horizon < 2m.
IdentityReport verify_identities(const Pattern& p, std::size_t horizon);

}  // namespace penney
