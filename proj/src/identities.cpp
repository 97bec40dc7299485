#include "penney/identities.hpp"

#include "penney/dyadic.hpp"
#include "penney/errors.hpp"
#include "penney/occurrence_counts.hpp"

namespace penney {

const char* to_string(Identity identity) noexcept {
  switch (identity) {
    case Identity::AvoidanceRecurrence: return "avoidance-recurrence";
    case Identity::CorrelationExpansion: return "correlation-expansion";
    case Identity::Telescoping: return "telescoping";
  }
  return "unknown";
}

IdentityReport verify_identities(const Pattern& p, std::size_t horizon) {
  const std::size_t m = p.length();
  if (horizon < 2 * m) {
    throw Error(ErrorKind::InvalidHorizon,
                "identity checks need horizon >= " + std::to_string(2 * m));
  }
  const auto counts = occurrence_counts(p, horizon);
  const auto& sigma = counts.sigma();
  const auto& tau = counts.tau();
  const auto c = correlation_set(p);

  IdentityReport report{p, horizon, 0, {}};
  auto fail = [&](Identity id, std::size_t n, std::string detail) {
    report.failures.push_back({id, n, std::move(detail)});
  };

  for (std::size_t n = 1; n <= horizon; ++n) {
    ++report.checks;
    if (2 * sigma[n - 1] != sigma[n] + tau[n]) {
      fail(Identity::AvoidanceRecurrence, n,
           "2*" + sigma[n - 1].str() + " != " + sigma[n].str() + " + " + tau[n].str());
    }
  }

  for (std::size_t n = 0; n + m <= horizon; ++n) {
    ++report.checks;
    BigInt expansion = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      if (c.coefficient(j)) expansion += tau[j + n];
    }
    if (expansion != sigma[n]) {
      fail(Identity::CorrelationExpansion, n,
           "sigma=" + sigma[n].str() + " but expansion gives " + expansion.str());
    }
  }

  DyadicRational absorbed;
  const DyadicRational one(1);
  for (std::size_t n = m; n <= horizon; ++n) {
    ++report.checks;
    absorbed += DyadicRational(tau[n], static_cast<unsigned>(n));
    const DyadicRational remaining = one - DyadicRational(sigma[n], static_cast<unsigned>(n));
    if (absorbed != remaining) {
      fail(Identity::Telescoping, n,
           absorbed.to_fraction_string() + " != " + remaining.to_fraction_string());
    }
  }
  return report;
}

}  // namespace penney
