#include "penney/occurrence_counts.hpp"

#include "penney/errors.hpp"

namespace penney {

namespace {

void check_horizon(std::size_t horizon) {
  if (horizon > kMaxHorizon) {
    throw Error(ErrorKind::TooLarge, "horizon " + std::to_string(horizon) + " exceeds the limit of " +
                                         std::to_string(kMaxHorizon));
  }
}

}  // namespace

OccurrenceCounts::OccurrenceCounts(const Pattern& p)
    : automaton_(p), sigma_{BigInt(1)}, tau_{BigInt(0)}, frontier_(p.length(), BigInt(0)) {
  frontier_[0] = 1;
}

void OccurrenceCounts::advance_to(std::size_t horizon) {
  const std::size_t m = automaton_.accepting_state();
  sigma_.reserve(horizon + 1);
  tau_.reserve(horizon + 1);
  std::vector<BigInt> next(m);
  while (sigma_.size() <= horizon) {
    for (auto& v : next) v = 0;
    BigInt absorbed = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (frontier_[k] == 0) continue;
      for (std::uint8_t bit = 0; bit < 2; ++bit) {
        const std::size_t to = automaton_.next(k, bit);
        if (to == m) {
          absorbed += frontier_[k];
        } else {
          next[to] += frontier_[k];
        }
      }
    }
    frontier_.swap(next);
    BigInt avoiding = 0;
    for (const auto& v : frontier_) avoiding += v;
    sigma_.push_back(std::move(avoiding));
    tau_.push_back(std::move(absorbed));
  }
}

OccurrenceCounts occurrence_counts(const Pattern& p, std::size_t horizon) {
  check_horizon(horizon);
  OccurrenceCounts counts(p);
  counts.advance_to(horizon);
  return counts;
}

OccurrenceCounts extend_counts(const OccurrenceCounts& counts, std::size_t horizon) {
  check_horizon(horizon);
  if (horizon < counts.horizon()) {
    throw Error(ErrorKind::InvalidHorizon, "cannot extend counts to a shorter horizon");
  }
  OccurrenceCounts out = counts;
  out.advance_to(horizon);
  return out;
}

}  // namespace penney
