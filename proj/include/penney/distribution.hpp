#pragma once

#include <cstddef>
#include <vector>

#include "penney/dyadic.hpp"
#include "penney/occurrence_counts.hpp"
#include "penney/pattern.hpp"

namespace penney {

/// P(game ends on toss n) = tau_n / 2^n for n = 0..horizon, exactly.
struct FirstOccurrenceDistribution {
  OccurrenceCounts counts;
  std::vector<DyadicRational> probability;
  /// sigma_N / 2^N: probability the game is still running after the horizon.
  DyadicRational residual;

  std::size_t horizon() const noexcept { return counts.horizon(); }
  /// Sum of probability[0..n].
  DyadicRational cumulative(std::size_t n) const;
};

/// Throws Error(InvalidHorizon) when the horizon is shorter than the pattern.
FirstOccurrenceDistribution first_occurrence_distribution(const Pattern& p, std::size_t horizon);

/// Partial sum of sigma_n / 2^n for n = 0..horizon. The full series equals
/// the expected waiting time.
struct SeriesMean {
  std::size_t horizon = 0;
  DyadicRational partial_sum;
  /// sigma_N / 2^N, the mass not yet absorbed.
  DyadicRational residual_mass;
  /// Exact remainder of the series past the horizon, obtained as
  /// sum_k frontier_k * (E_k - 1) / 2^N with E_k the exact expected steps to
  /// absorption from automaton state k.
  DyadicRational tail;
};

SeriesMean mean_via_sigma_series(const Pattern& p, std::size_t horizon);

}  // namespace penney
