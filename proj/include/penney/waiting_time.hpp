#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "penney/bigint.hpp"
#include "penney/pattern.hpp"

namespace penney {

/// Expected number of fair tosses until `p` first completes: the sum of 2^j
/// over every self-overlap length j. Always even, never below 2^m.
BigInt expected_waiting_time(const Pattern& p);

/// Winnings equal the number of tosses; the stake is paid up front.
/// Throws Error(InvalidArgument) for a negative stake.
BigInt expected_profit(const Pattern& p, const BigInt& stake);

/// (2^m, 2^{m+1} - 2). Throws Error(InvalidLength) for m < 1.
std::pair<BigInt, BigInt> waiting_time_bounds(std::size_t m);

struct WaitingTimeReport {
  Pattern pattern;
  CorrelationSet correlation;
  BigInt expected_tosses;
  BigInt lower_bound;
  BigInt upper_bound;
  std::optional<BigInt> stake;
  std::optional<BigInt> expected_profit;
};

WaitingTimeReport waiting_time_report(const Pattern& p,
                                      std::optional<BigInt> stake = std::nullopt);

}  // namespace penney
