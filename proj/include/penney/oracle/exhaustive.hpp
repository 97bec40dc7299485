#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "penney/kernels/first_occurrence.hpp"
#include "penney/pattern.hpp"

namespace penney::oracle {

inline constexpr unsigned kDefaultExhaustiveCeiling = 24;

/// Classification of all 2^n strings of length n by the toss at which the
/// pattern first completes.
struct ExhaustiveTally {
  Pattern pattern;
  std::size_t n;
  /// Indexed by completion position 0..n (entries below m are zero). Entry j
  /// counts distinct length-j prefixes that first complete the pattern at j,
  /// so each one stands for 2^{n-j} full strings.
  std::vector<std::uint64_t> first_occurrence_counts;
  std::uint64_t avoiding_count = 0;
  kernels::Isa isa = kernels::Isa::Scalar;

  /// sum_j counts[j] * 2^{n-j} + avoiding_count; equals 2^n for a valid tally.
  std::uint64_t classified_total() const;
};

struct ExhaustiveOptions {
  unsigned ceiling = kDefaultExhaustiveCeiling;
  kernels::Isa isa = kernels::best_isa();
};

/// Throws Error(TooLarge) when n exceeds the ceiling (or the 31-bit kernel
/// limit) and Error(InvalidHorizon) when n < m.
ExhaustiveTally exhaustive_tally(const Pattern& p, std::size_t n, const ExhaustiveOptions& options = {});

}  // namespace penney::oracle
