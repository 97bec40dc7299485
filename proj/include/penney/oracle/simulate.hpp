#pragma once

#include <cstdint>
#include <string>

#include "penney/pattern.hpp"

namespace penney::oracle {

/// Games longer than this abort the run with Error(SafetyCapExceeded).
inline constexpr std::uint64_t kDefaultMaxTossesPerGame = 1'000'000;

struct SimulationResult {
  Pattern pattern;
  std::uint64_t trials;
  std::uint64_t seed;
  std::string generator;
  double sample_mean;
  /// Sample standard deviation / sqrt(trials); 0 for a single trial.
  double sample_stderr;
  std::uint64_t max_game_length_seen;

  friend bool operator==(const SimulationResult&, const SimulationResult&) = default;
};

/// Plays `trials` independent games with a seeded mt19937_64, one toss per
/// generator output bit (most significant first), and records how many
/// tosses each game needed. Identical inputs give identical results.
/// Throws Error(InvalidArgument) for zero trials and Error(TooLarge) for
/// patterns longer than 64.
SimulationResult simulate(const Pattern& p, std::uint64_t trials, std::uint64_t seed,
                          std::uint64_t max_tosses_per_game = kDefaultMaxTossesPerGame);

}  // namespace penney::oracle
