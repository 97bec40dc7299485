#include "penney/cli/app.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>

#include "commands.hpp"
#include "penney/errors.hpp"

namespace penney::cli {

namespace {

std::size_t parse_size(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError("malformed length range '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

LengthRange parse_length_range(std::string_view text) {
  const auto dots = text.find("..");
  LengthRange range{};
  if (dots == std::string_view::npos) {
    range.min = range.max = parse_size(text, text);
  } else {
    range.min = parse_size(text.substr(0, dots), text);
    range.max = parse_size(text.substr(dots + 2), text);
  }
  if (range.min > range.max) {
    throw UsageError("length range '" + std::string(text) + "' is empty");
  }
  return range;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact waiting times for coin-toss patterns"};
  app.name("penney");
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string output_path;
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
  app.add_option("--format", format_name, "Output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--output", output_path, "Write results to this file instead of stdout");

  ExpectOptions expect;
  auto* expect_cmd = app.add_subcommand("expect", "Expected tosses until a pattern first appears");
  expect_cmd->add_option("pattern", expect.pattern, "Pattern as 0/1 or T/H")->required();
  expect_cmd->add_option("--stake", expect.stake, "Up-front stake; reports expected profit");
  expect_cmd->add_flag("--letters", expect.letters, "Show the pattern as H/T");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Group all patterns of each length by average");
  table_cmd->add_option("--lengths", table.lengths, "Length or range, e.g. 2..6")
      ->capture_default_str();
  table_cmd->add_option("--cap", table.cap, "Longest length allowed")->capture_default_str();
  table_cmd->add_flag("--all", table.all, "Include patterns starting with 0");

  DistOptions dist;
  auto* dist_cmd = app.add_subcommand("dist", "Exact first-occurrence distribution");
  dist_cmd->add_option("pattern", dist.pattern, "Pattern as 0/1 or T/H")->required();
  dist_cmd->add_option("--horizon", dist.horizon, "Last toss to tabulate")->capture_default_str();

  SimulateOptions simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of the waiting time");
  simulate_cmd->add_option("pattern", simulate.pattern, "Pattern as 0/1 or T/H")->required();
  simulate_cmd->add_option("--trials", simulate.trials, "Number of games")->capture_default_str();
  simulate_cmd->add_option("--seed", simulate.seed, "Generator seed")->capture_default_str();
  simulate_cmd->add_option("--max-tosses", simulate.max_tosses, "Abort a game after this many tosses")
      ->capture_default_str();

  VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check the counting identities and the brute-force oracle");
  verify_cmd->add_option("--lengths", verify.lengths, "Length or range, e.g. 2..4")
      ->capture_default_str();
  verify_cmd->add_option("--horizon", verify.horizon, "Counting horizon")->capture_default_str();
  verify_cmd->add_option("--oracle-n", verify.oracle_n,
                         "Enumerate all strings up to this length (0 disables)")
      ->capture_default_str();
  verify_cmd->add_option("--cap", verify.cap, "Longest length allowed")->capture_default_str();

  for (auto* sub : {expect_cmd, table_cmd, dist_cmd, simulate_cmd, verify_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      err << "penney: cannot open " << output_path << " for writing\n";
      return kUsageError;
    }
  }
  std::ostream& sink = output_path.empty() ? out : file;
  const Format format = formats.at(format_name);

  try {
    if (*expect_cmd) return cmd_expect(expect, format, sink);
    if (*table_cmd) return cmd_table(table, format, sink);
    if (*dist_cmd) return cmd_dist(dist, format, sink);
    if (*simulate_cmd) return cmd_simulate(simulate, format, sink);
    if (*verify_cmd) return cmd_verify(verify, format, sink);
  } catch (const UsageError& e) {
    err << "penney: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "penney: " << e.what() << '\n';
    return e.is_internal_guard() ? kInternalGuard : kUsageError;
  }
  return kUsageError;
}

}  // namespace penney::cli
