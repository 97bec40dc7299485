#include "penney/distribution.hpp"

#include <boost/multiprecision/integer.hpp>

#include "penney/errors.hpp"

namespace penney {

namespace {

DyadicRational to_dyadic(const BigRational& value) {
  const BigInt den = denominator(value);
  const auto e = static_cast<unsigned>(boost::multiprecision::msb(den));
  if (den != pow2(e)) throw Error(ErrorKind::InvalidArgument, "value is not dyadic");
  return DyadicRational(numerator(value), e);
}

}  // namespace

DyadicRational FirstOccurrenceDistribution::cumulative(std::size_t n) const {
  DyadicRational sum;
  for (std::size_t i = 0; i <= n && i < probability.size(); ++i) sum += probability[i];
  return sum;
}

FirstOccurrenceDistribution first_occurrence_distribution(const Pattern& p, std::size_t horizon) {
  if (horizon < p.length()) {
    throw Error(ErrorKind::InvalidHorizon, "horizon " + std::to_string(horizon) +
                                               " is shorter than the pattern length " +
                                               std::to_string(p.length()));
  }
  auto counts = occurrence_counts(p, horizon);
  std::vector<DyadicRational> probability;
  probability.reserve(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) {
    probability.emplace_back(counts.tau()[n], static_cast<unsigned>(n));
  }
  DyadicRational residual(counts.sigma()[horizon], static_cast<unsigned>(horizon));
  return FirstOccurrenceDistribution{std::move(counts), std::move(probability),
                                     std::move(residual)};
}

SeriesMean mean_via_sigma_series(const Pattern& p, std::size_t horizon) {
  const auto counts = occurrence_counts(p, horizon);
  const auto e = static_cast<unsigned>(horizon);

  SeriesMean out;
  out.horizon = horizon;
  for (std::size_t n = 0; n <= horizon; ++n) {
    out.partial_sum += DyadicRational(counts.sigma()[n], static_cast<unsigned>(n));
  }
  out.residual_mass = DyadicRational(counts.sigma()[horizon], e);

  const auto steps = expected_steps_to_absorption(AvoidanceAutomaton(p));
  BigRational remaining = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    // the horizon term itself is already in the partial sum
    remaining += BigRational(counts.frontier()[k]) * (steps[k] - 1);
  }
  out.tail = to_dyadic(remaining / BigRational(pow2(e)));
  return out;
}

}  // namespace penney
