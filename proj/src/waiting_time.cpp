#include "penney/waiting_time.hpp"

#include "penney/errors.hpp"

namespace penney {

namespace {

BigInt waiting_time_from(const CorrelationSet& c) {
  BigInt total = 0;
  for (std::size_t j : c.overlaps()) total += pow2(static_cast<unsigned>(j));
  return total;
}

}  // namespace

BigInt expected_waiting_time(const Pattern& p) { return waiting_time_from(correlation_set(p)); }

BigInt expected_profit(const Pattern& p, const BigInt& stake) {
  if (stake < 0) throw Error(ErrorKind::InvalidArgument, "stake must be nonnegative");
  return expected_waiting_time(p) - stake;
}

std::pair<BigInt, BigInt> waiting_time_bounds(std::size_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidLength, "pattern length must be at least 1");
  const auto e = static_cast<unsigned>(m);
  return {pow2(e), pow2(e + 1) - 2};
}

WaitingTimeReport waiting_time_report(const Pattern& p, std::optional<BigInt> stake) {
  if (stake && *stake < 0) throw Error(ErrorKind::InvalidArgument, "stake must be nonnegative");
  auto correlation = correlation_set(p);
  auto expected = waiting_time_from(correlation);
  auto [lo, hi] = waiting_time_bounds(p.length());
  std::optional<BigInt> profit;
  if (stake) profit = expected - *stake;
  return WaitingTimeReport{p, std::move(correlation), std::move(expected), std::move(lo),
                           std::move(hi), std::move(stake), std::move(profit)};
}

}  // namespace penney
