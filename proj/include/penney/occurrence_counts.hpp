#pragma once

#include <cstddef>
#include <vector>

#include "penney/automaton.hpp"
#include "penney/bigint.hpp"
#include "penney/pattern.hpp"

namespace penney {

/// Longest horizon accepted by the counting routines. Counts up to this
/// horizon cost O(horizon^2) bits of storage.
inline constexpr std::size_t kMaxHorizon = 16384;

/// sigma[n]: strings of length n that never contain the pattern.
/// tau[n]:   strings of length n whose only occurrence is at the right end.
/// Both are indexed 0..horizon, with sigma[0] = 1 and tau[0] = 0.
class OccurrenceCounts {
 public:
  const Pattern& pattern() const noexcept { return automaton_.pattern(); }
  std::size_t horizon() const noexcept { return sigma_.size() - 1; }
  const std::vector<BigInt>& sigma() const noexcept { return sigma_; }
  const std::vector<BigInt>& tau() const noexcept { return tau_; }
  /// Strings of length horizon() that avoid the pattern, split by automaton state.
  const std::vector<BigInt>& frontier() const noexcept { return frontier_; }

  friend bool operator==(const OccurrenceCounts&, const OccurrenceCounts&) = default;

 private:
  explicit OccurrenceCounts(const Pattern& p);
  void advance_to(std::size_t horizon);

  AvoidanceAutomaton automaton_;
  std::vector<BigInt> sigma_;
  std::vector<BigInt> tau_;
  std::vector<BigInt> frontier_;

  friend OccurrenceCounts occurrence_counts(const Pattern& p, std::size_t horizon);
  friend OccurrenceCounts extend_counts(const OccurrenceCounts& counts, std::size_t horizon);
};

/// Propagates state-occupancy counts through the automaton one toss at a time.
/// Throws Error(TooLarge) past kMaxHorizon.
OccurrenceCounts occurrence_counts(const Pattern& p, std::size_t horizon);

/// Resumes from an earlier result; the output is identical to computing
/// directly to `horizon`. Throws Error(InvalidHorizon) if `horizon` is
/// shorter than the existing one.
OccurrenceCounts extend_counts(const OccurrenceCounts& counts, std::size_t horizon);

}  // namespace penney
