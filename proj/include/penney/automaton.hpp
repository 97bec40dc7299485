#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "penney/bigint.hpp"
#include "penney/pattern.hpp"

namespace penney {

/// Longest-prefix automaton over the toss stream. State k < m means the
/// longest pattern prefix that is a suffix of the stream has length k; state
/// m means the pattern has just completed and is absorbing.
class AvoidanceAutomaton {
 public:
  explicit AvoidanceAutomaton(Pattern pattern);

  const Pattern& pattern() const noexcept { return pattern_; }
  std::size_t state_count() const noexcept { return pattern_.length() + 1; }
  std::size_t accepting_state() const noexcept { return pattern_.length(); }

  /// Defined for non-accepting states only.
  std::size_t next(std::size_t state, std::uint8_t bit) const { return table_.at(state)[bit]; }

  /// Longest proper prefix of the first k pattern bits that is also their
  /// suffix, for k = 1..m (index k-1).
  const std::vector<std::size_t>& failure() const noexcept { return failure_; }

  friend bool operator==(const AvoidanceAutomaton&, const AvoidanceAutomaton&) = default;

 private:
  Pattern pattern_;
  std::vector<std::size_t> failure_;
  std::vector<std::array<std::size_t, 2>> table_;
};

AvoidanceAutomaton build_automaton(const Pattern& p);

/// Expected number of further tosses to absorption from each non-accepting
/// state, solved exactly as the linear system E_k = 1 + (E_{δ(k,0)} + E_{δ(k,1)})/2
/// with E_m = 0. Entry 0 is the waiting time from a fresh start.
std::vector<BigRational> expected_steps_to_absorption(const AvoidanceAutomaton& automaton);

}  // namespace penney
