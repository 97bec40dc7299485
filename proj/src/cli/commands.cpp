#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "output.hpp"
#include "penney/distribution.hpp"
#include "penney/errors.hpp"
#include "penney/identities.hpp"
#include "penney/occurrence_counts.hpp"
#include "penney/oracle/exhaustive.hpp"
#include "penney/table.hpp"
#include "penney/waiting_time.hpp"

namespace penney::cli {

using nlohmann::json;

namespace {

void emit_json(std::ostream& out, std::string_view command, json inputs, json results) {
  json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  out << doc.dump(2) << '\n';
}

std::string format_real(double value) {
  std::ostringstream s;
  s << std::setprecision(10) << value;
  return s.str();
}

std::string signed_string(const BigInt& value) {
  return value > 0 ? "+" + value.str() : value.str();
}

std::vector<std::string> overlap_strings(const CorrelationSet& c) {
  std::vector<std::string> out;
  for (auto j : c.overlaps()) out.push_back(std::to_string(j));
  return out;
}

LengthRange checked_range(const std::string& text, std::size_t floor, std::size_t cap) {
  const auto range = parse_length_range(text);
  if (range.min < floor || range.max > cap) {
    throw UsageError("lengths " + text + " must lie within " + std::to_string(floor) + ".." +
                     std::to_string(cap) + " (raise --cap to go further)");
  }
  return range;
}

void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows,
                   std::size_t left_aligned_from) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      const std::size_t pad = width[i] - row[i].size();
      if (i >= left_aligned_from) {
        line += row[i];
        if (i + 1 < row.size()) line.append(pad, ' ');
      } else {
        line.append(pad, ' ');
        line += row[i];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

}  // namespace

int cmd_expect(const ExpectOptions& options, Format format, std::ostream& out) {
  const auto pattern = parse_pattern(options.pattern);
  std::optional<BigInt> stake;
  if (options.stake) {
    if (*options.stake < 0) throw UsageError("--stake must be nonnegative");
    stake = BigInt(*options.stake);
  }
  const auto report = waiting_time_report(pattern, stake);
  const auto notation = options.letters ? Notation::Letters : Notation::Binary;

  switch (format) {
    case Format::Json: {
      json inputs{{"pattern", options.pattern}};
      if (options.stake) inputs["stake"] = *options.stake;
      json results{{"pattern", pattern.to_string()},
                   {"letters", pattern.to_string(Notation::Letters)},
                   {"length", pattern.length()},
                   {"overlaps", report.correlation.overlaps()},
                   {"correlation", std::vector<int>(report.correlation.coefficients().begin(),
                                                    report.correlation.coefficients().end())},
                   {"expected_tosses", json_integer(report.expected_tosses)},
                   {"lower_bound", json_integer(report.lower_bound)},
                   {"upper_bound", json_integer(report.upper_bound)}};
      if (report.stake) {
        results["stake"] = json_integer(*report.stake);
        results["expected_profit"] = json_integer(*report.expected_profit);
      }
      emit_json(out, "expect", std::move(inputs), std::move(results));
      break;
    }
    case Format::Csv:
      write_csv_row(out, {"pattern", "length", "overlaps", "expected_tosses", "lower_bound",
                          "upper_bound", "stake", "expected_profit"});
      write_csv_row(out, {pattern.to_string(notation), std::to_string(pattern.length()),
                          join(overlap_strings(report.correlation), " "),
                          report.expected_tosses.str(), report.lower_bound.str(),
                          report.upper_bound.str(), report.stake ? report.stake->str() : "",
                          report.expected_profit ? report.expected_profit->str() : ""});
      break;
    case Format::Text: {
      std::vector<std::vector<std::string>> rows{
          {"pattern", pattern.to_string(notation) + " (" +
                          pattern.to_string(options.letters ? Notation::Binary : Notation::Letters) +
                          ")"},
          {"overlaps", join(overlap_strings(report.correlation), " ")},
          {"expected tosses", report.expected_tosses.str()},
          {"bounds", report.lower_bound.str() + " <= N <= " + report.upper_bound.str()}};
      if (report.stake) {
        rows.push_back({"stake", report.stake->str()});
        rows.push_back({"expected profit", signed_string(*report.expected_profit)});
      }
      print_aligned(out, rows, 0);
      break;
    }
  }
  return kSuccess;
}

int cmd_table(const TableOptions& options, Format format, std::ostream& out) {
  const std::size_t cap = std::min(options.cap, kMaxTableLength);
  const auto range = checked_range(options.lengths, 2, cap);

  std::vector<TableRow> rows;
  for (std::size_t length = range.min; length <= range.max; ++length) {
    auto part = waiting_time_table(length, options.all);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }

  switch (format) {
    case Format::Json: {
      json results = json::array();
      for (const auto& row : rows) {
        std::vector<std::string> names;
        for (const auto& p : row.patterns) names.push_back(p.to_string());
        results.push_back(
            {{"length", row.length}, {"average", json_integer(row.average)}, {"patterns", names}});
      }
      emit_json(out, "table", {{"lengths", options.lengths}, {"all", options.all}},
                std::move(results));
      break;
    }
    case Format::Csv:
      write_csv_row(out, {"length", "average", "pattern"});
      for (const auto& row : rows) {
        for (const auto& p : row.patterns) {
          write_csv_row(out, {std::to_string(row.length), row.average.str(), p.to_string()});
        }
      }
      break;
    case Format::Text: {
      std::vector<std::vector<std::string>> lines{{"bits", "average", "patterns"}};
      std::size_t previous_length = 0;
      for (const auto& row : rows) {
        std::vector<std::string> names;
        for (const auto& p : row.patterns) names.push_back(p.to_string());
        lines.push_back({row.length == previous_length ? "" : std::to_string(row.length),
                         row.average.str(), join(names, " ")});
        previous_length = row.length;
      }
      print_aligned(out, lines, 2);
      if (!options.all) {
        out << "\nOnly patterns starting with 1 are listed; swapping heads and tails "
               "leaves every average unchanged.\n";
      }
      break;
    }
  }
  return kSuccess;
}

int cmd_dist(const DistOptions& options, Format format, std::ostream& out) {
  const auto pattern = parse_pattern(options.pattern);
  if (options.horizon < pattern.length()) {
    throw UsageError("--horizon " + std::to_string(options.horizon) +
                     " is shorter than the pattern length " + std::to_string(pattern.length()));
  }
  if (options.horizon > kMaxHorizon) {
    throw UsageError("--horizon may not exceed " + std::to_string(kMaxHorizon));
  }
  const auto dist = first_occurrence_distribution(pattern, options.horizon);
  const auto& tau = dist.counts.tau();
  const auto& sigma = dist.counts.sigma();

  struct Row {
    std::size_t n;
    DyadicRational cumulative;
    DyadicRational residual;
  };
  std::vector<Row> rows;
  DyadicRational cumulative;
  for (std::size_t n = 0; n <= dist.horizon(); ++n) {
    cumulative += dist.probability[n];
    rows.push_back({n, cumulative, DyadicRational(sigma[n], static_cast<unsigned>(n))});
  }

  switch (format) {
    case Format::Json: {
      json table = json::array();
      for (const auto& r : rows) {
        table.push_back({{"n", r.n},
                         {"tau", json_integer(tau[r.n])},
                         {"sigma", json_integer(sigma[r.n])},
                         {"probability", dist.probability[r.n].to_fraction_string()},
                         {"probability_decimal", dist.probability[r.n].to_decimal_string()},
                         {"cumulative", r.cumulative.to_fraction_string()},
                         {"residual", r.residual.to_fraction_string()}});
      }
      json results{{"pattern", pattern.to_string()},
                   {"horizon", dist.horizon()},
                   {"rows", std::move(table)},
                   {"cumulative", rows.back().cumulative.to_fraction_string()},
                   {"residual", dist.residual.to_fraction_string()},
                   {"residual_decimal", dist.residual.to_decimal_string()}};
      emit_json(out, "dist", {{"pattern", options.pattern}, {"horizon", options.horizon}},
                std::move(results));
      break;
    }
    case Format::Csv:
      write_csv_row(out, {"n", "tau", "sigma", "probability", "probability_decimal", "cumulative",
                          "residual"});
      for (const auto& r : rows) {
        write_csv_row(out, {std::to_string(r.n), tau[r.n].str(), sigma[r.n].str(),
                            dist.probability[r.n].to_fraction_string(),
                            dist.probability[r.n].to_decimal_string(),
                            r.cumulative.to_fraction_string(), r.residual.to_fraction_string()});
      }
      break;
    case Format::Text: {
      out << "first-occurrence distribution of " << pattern.to_string() << " ("
          << pattern.to_string(Notation::Letters) << ")\n";
      std::vector<std::vector<std::string>> lines{{"n", "tau", "p", "p (decimal)", "cumulative"}};
      for (const auto& r : rows) {
        lines.push_back({std::to_string(r.n), tau[r.n].str(),
                         dist.probability[r.n].to_fraction_string(),
                         dist.probability[r.n].to_decimal_string(),
                         r.cumulative.to_fraction_string()});
      }
      print_aligned(out, lines, 2);
      out << "residual after " << dist.horizon() << " tosses: " << sigma[dist.horizon()].str()
          << "/2^" << dist.horizon() << " = " << dist.residual.to_decimal_string() << '\n';
      break;
    }
  }
  return kSuccess;
}

int cmd_simulate(const SimulateOptions& options, Format format, std::ostream& out) {
  const auto pattern = parse_pattern(options.pattern);
  if (options.trials < 1) throw UsageError("--trials must be at least 1");
  if (pattern.length() > 64) throw UsageError("simulation supports patterns of length <= 64");

  const auto result = oracle::simulate(pattern, options.trials, options.seed, options.max_tosses);
  const BigInt exact = expected_waiting_time(pattern);
  const double exact_value = static_cast<double>(exact);
  std::optional<double> z;
  if (result.sample_stderr > 0) z = (result.sample_mean - exact_value) / result.sample_stderr;

  switch (format) {
    case Format::Json: {
      json results{{"pattern", pattern.to_string()},
                   {"trials", result.trials},
                   {"seed", result.seed},
                   {"generator", result.generator},
                   {"sample_mean", result.sample_mean},
                   {"sample_stderr", result.sample_stderr},
                   {"exact_mean", json_integer(exact)},
                   {"z_score", z ? json(*z) : json(nullptr)},
                   {"max_game_length", result.max_game_length_seen}};
      emit_json(out, "simulate",
                {{"pattern", options.pattern}, {"trials", options.trials}, {"seed", options.seed}},
                std::move(results));
      break;
    }
    case Format::Csv:
      write_csv_row(out, {"pattern", "trials", "seed", "generator", "sample_mean", "sample_stderr",
                          "exact_mean", "z_score", "max_game_length"});
      write_csv_row(out, {pattern.to_string(), std::to_string(result.trials),
                          std::to_string(result.seed), result.generator,
                          format_real(result.sample_mean), format_real(result.sample_stderr),
                          exact.str(), z ? format_real(*z) : "",
                          std::to_string(result.max_game_length_seen)});
      break;
    case Format::Text:
      print_aligned(
          out,
          {{"pattern", pattern.to_string() + " (" + pattern.to_string(Notation::Letters) + ")"},
           {"trials", std::to_string(result.trials)},
           {"seed", std::to_string(result.seed) + " (" + result.generator + ")"},
           {"sample mean", format_real(result.sample_mean)},
           {"standard error", format_real(result.sample_stderr)},
           {"exact mean", exact.str()},
           {"z-score", z ? format_real(*z) : "n/a (single trial)"},
           {"longest game", std::to_string(result.max_game_length_seen)}},
          0);
      break;
  }
  return kSuccess;
}

namespace {

struct CheckFailure {
  std::string check;
  std::size_t n;
  std::string detail;
};

struct PatternVerification {
  Pattern pattern;
  std::size_t identity_checks = 0;
  std::size_t oracle_checks = 0;
  std::vector<CheckFailure> failures;
};

PatternVerification verify_pattern(const Pattern& p, std::size_t horizon, std::size_t oracle_n) {
  PatternVerification v{p, 0, 0, {}};
  const auto report = verify_identities(p, horizon);
  v.identity_checks = report.checks;
  for (const auto& f : report.failures) {
    v.failures.push_back({to_string(f.identity), f.n, f.detail});
  }

  if (oracle_n < p.length()) return v;
  const auto counts = occurrence_counts(p, std::max(horizon, oracle_n));
  for (std::size_t n = p.length(); n <= oracle_n; ++n) {
    const auto tally = oracle::exhaustive_tally(p, n);
    ++v.oracle_checks;
    if (BigInt(tally.avoiding_count) != counts.sigma()[n]) {
      v.failures.push_back({"oracle-sigma", n,
                            "enumeration " + std::to_string(tally.avoiding_count) +
                                " vs engine " + counts.sigma()[n].str()});
    }
    for (std::size_t j = 0; j <= n; ++j) {
      if (BigInt(tally.first_occurrence_counts[j]) != counts.tau()[j]) {
        v.failures.push_back({"oracle-tau", j,
                              "enumeration at length " + std::to_string(n) + " gives " +
                                  std::to_string(tally.first_occurrence_counts[j]) +
                                  " vs engine " + counts.tau()[j].str()});
      }
    }
  }
  return v;
}

}  // namespace

int cmd_verify(const VerifyOptions& options, Format format, std::ostream& out) {
  const auto range = checked_range(options.lengths, 1, std::min(options.cap, kMaxTableLength));
  if (options.horizon < 2 * range.max) {
    throw UsageError("--horizon must be at least twice the longest length (" +
                     std::to_string(2 * range.max) + ")");
  }
  if (options.horizon > kMaxHorizon) {
    throw UsageError("--horizon may not exceed " + std::to_string(kMaxHorizon));
  }
  if (options.oracle_n > oracle::kDefaultExhaustiveCeiling) {
    throw UsageError("--oracle-n may not exceed " +
                     std::to_string(oracle::kDefaultExhaustiveCeiling));
  }

  std::vector<PatternVerification> results;
  for (std::size_t length = range.min; length <= range.max; ++length) {
    const std::uint64_t first = std::uint64_t{1} << (length - 1);
    for (std::uint64_t value = first; value < 2 * first; ++value) {
      results.push_back(
          verify_pattern(Pattern::from_integer(value, length), options.horizon, options.oracle_n));
    }
  }

  std::size_t identity_checks = 0;
  std::size_t oracle_checks = 0;
  std::size_t failures = 0;
  for (const auto& r : results) {
    identity_checks += r.identity_checks;
    oracle_checks += r.oracle_checks;
    failures += r.failures.size();
  }

  switch (format) {
    case Format::Json: {
      json patterns = json::array();
      for (const auto& r : results) {
        json fails = json::array();
        for (const auto& f : r.failures) {
          fails.push_back({{"check", f.check}, {"n", f.n}, {"detail", f.detail}});
        }
        patterns.push_back({{"pattern", r.pattern.to_string()},
                            {"identity_checks", r.identity_checks},
                            {"oracle_checks", r.oracle_checks},
                            {"failures", std::move(fails)}});
      }
      emit_json(out, "verify",
                {{"lengths", options.lengths},
                 {"horizon", options.horizon},
                 {"oracle_n", options.oracle_n}},
                {{"patterns", std::move(patterns)},
                 {"identity_checks", identity_checks},
                 {"oracle_checks", oracle_checks},
                 {"total_failures", failures},
                 {"passed", failures == 0}});
      break;
    }
    case Format::Csv:
      write_csv_row(out, {"pattern", "length", "identity_checks", "oracle_checks", "failures",
                          "first_failure"});
      for (const auto& r : results) {
        std::string first;
        if (!r.failures.empty()) {
          const auto& f = r.failures.front();
          first = f.check + " at n=" + std::to_string(f.n) + ": " + f.detail;
        }
        write_csv_row(out, {r.pattern.to_string(), std::to_string(r.pattern.length()),
                            std::to_string(r.identity_checks), std::to_string(r.oracle_checks),
                            std::to_string(r.failures.size()), first});
      }
      break;
    case Format::Text:
      for (const auto& r : results) {
        for (const auto& f : r.failures) {
          out << "FAIL " << r.pattern.to_string() << ' ' << f.check << " n=" << f.n << ": "
              << f.detail << '\n';
        }
      }
      out << "verified " << results.size() << " patterns of length " << range.min << ".."
          << range.max << " to horizon " << options.horizon << ": " << identity_checks
          << " identity checks, " << oracle_checks << " enumeration comparisons (n <= "
          << options.oracle_n << ", " << to_string(kernels::best_isa()) << " kernel), "
          << failures << " failures\n";
      break;
  }
  return failures == 0 ? kSuccess : kVerificationFailure;
}

}  // namespace penney::cli
