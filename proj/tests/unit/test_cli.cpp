#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "penney/cli/app.hpp"

using nlohmann::json;
using penney::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "penney");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = invoke(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

using Grouping = std::map<int, std::map<long long, std::set<std::string>>>;

// Published table of averages for lengths 2 to 6.
const Grouping kPublishedTable{
    {2, {{4, {"10"}}, {6, {"11"}}}},
    {3, {{8, {"100", "110"}}, {10, {"101"}}, {14, {"111"}}}},
    {4, {{16, {"1000", "1100", "1110"}}, {18, {"1001", "1011", "1101"}}, {20, {"1010"}},
         {30, {"1111"}}}},
    {5, {{32, {"10000", "10100", "11000", "11010", "11100", "11110"}},
         {34, {"10001", "10011", "10111", "11001", "11101"}},
         {36, {"10010", "10110"}},
         {38, {"11011"}},
         {42, {"10101"}},
         {62, {"11111"}}}},
    {6, {{64, {"100000", "101000", "101100", "110000", "110010", "110100", "111000", "111010",
               "111100", "111110"}},
         {66, {"100001", "100011", "100101", "100111", "101001", "101011", "101111", "110001",
               "110101", "111001", "111101"}},
         {68, {"100010", "100110", "101110"}},
         {70, {"110011", "110111", "111011"}},
         {72, {"100100", "110110"}},
         {74, {"101101"}},
         {84, {"101010"}},
         {126, {"111111"}}}},
};

Grouping group_json(const json& results) {
  Grouping g;
  for (const auto& row : results) {
    for (const auto& p : row["patterns"]) {
      g[row["length"].get<int>()][row["average"].get<long long>()].insert(p.get<std::string>());
    }
  }
  return g;
}

Grouping group_csv(const std::string& text) {
  Grouping g;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "length,average,pattern");
  while (std::getline(in, line)) {
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    g[std::stoi(line.substr(0, a))][std::stoll(line.substr(a + 1, b - a - 1))].insert(
        line.substr(b + 1));
  }
  return g;
}

Grouping group_text(const std::string& text) {
  Grouping g;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  int length = 0;
  while (std::getline(in, line)) {
    if (line.empty()) break;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    // a row opening a new length starts with the length column
    std::size_t i = 0;
    if (line.find_first_not_of(' ') < 4) length = std::stoi(tokens[i++]);
    const long long average = std::stoll(tokens[i++]);
    for (; i < tokens.size(); ++i) g[length][average].insert(tokens[i]);
  }
  return g;
}

}  // namespace

TEST_CASE("expect reports the head-head wager") {
  const auto r = invoke({"expect", "HH", "--stake", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("expected tosses  6") != std::string::npos);
  CHECK(r.out.find("expected profit  +1") != std::string::npos);

  const auto j = invoke_json({"expect", "HH", "--stake", "5"});
  CHECK(j["command"] == "expect");
  CHECK(j["inputs"]["pattern"] == "HH");
  CHECK(j["results"]["expected_tosses"] == 6);
  CHECK(j["results"]["expected_profit"] == 1);

  const auto th = invoke_json({"expect", "TH", "--stake", "5"});
  CHECK(th["results"]["expected_profit"] == -1);
}

TEST_CASE("expect shows overlaps of the alternating quintuple") {
  const auto j = invoke_json({"expect", "10101"});
  CHECK(j["results"]["expected_tosses"] == 42);
  CHECK(j["results"]["overlaps"] == json::array({1, 3, 5}));
  CHECK(j["results"]["lower_bound"] == 32);
  CHECK(j["results"]["upper_bound"] == 62);
  CHECK_FALSE(j["results"].contains("expected_profit"));

  const auto text = invoke({"expect", "10101"});
  CHECK(text.out.find("overlaps         1 3 5") != std::string::npos);
  CHECK(text.out.find("(HTHTH)") != std::string::npos);
  CHECK(invoke({"expect", "10101", "--letters"}).out.find("HTHTH (10101)") != std::string::npos);

  const auto csv = invoke({"--format", "csv", "expect", "10101"});
  CHECK(csv.out ==
        "pattern,length,overlaps,expected_tosses,lower_bound,upper_bound,stake,expected_profit\n"
        "10101,5,1 3 5,42,32,62,,\n");
}

TEST_CASE("expect rejects bad patterns with a usage exit") {
  const auto empty = invoke({"expect", ""});
  CHECK(empty.code == 1);
  CHECK_FALSE(empty.err.empty());
  CHECK(empty.out.empty());
  CHECK(invoke({"expect", "2x"}).code == 1);
  CHECK(invoke({"expect", "1H"}).code == 1);
  CHECK(invoke({"expect", "11", "--stake", "-3"}).code == 1);
  CHECK(invoke({"expect"}).code == 1);
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"--format", "xml", "expect", "1"}).code == 1);
}

TEST_CASE("JSON integers beyond 2^53 are emitted as strings") {
  const auto j = invoke_json({"expect", std::string(60, '1')});
  CHECK(j["results"]["expected_tosses"].is_string());
  CHECK(j["results"]["expected_tosses"] == "2305843009213693950");  // 2^61 - 2
  CHECK(j["results"]["lower_bound"].is_string());
  const auto small = invoke_json({"expect", std::string(50, '1')});
  CHECK(small["results"]["expected_tosses"].is_number_integer());
}

TEST_CASE("table rows for individual lengths") {
  const auto three = invoke_json({"table", "--lengths", "3"});
  CHECK(group_json(three["results"]) == Grouping{{3, kPublishedTable.at(3)}});
  CHECK(three["results"][0]["patterns"] == json::array({"100", "110"}));

  const auto two = invoke_json({"table", "--lengths", "2..2"});
  CHECK(group_json(two["results"]) == Grouping{{2, kPublishedTable.at(2)}});

  const auto five = group_json(invoke_json({"table", "--lengths", "5"})["results"]);
  CHECK(five.at(5).at(42) == std::set<std::string>{"10101"});
  CHECK(five.at(5).at(62) == std::set<std::string>{"11111"});
  CHECK(five.at(5).at(32).size() == 6);
}

TEST_CASE("table for lengths 2..6 matches the published table in every format") {
  const auto json_rows = invoke_json({"table", "--lengths", "2..6"})["results"];
  CHECK(group_json(json_rows) == kPublishedTable);

  std::size_t patterns = 0;
  for (const auto& row : json_rows) patterns += row["patterns"].size();
  CHECK(patterns == 62);

  std::vector<std::size_t> sizes;
  for (const auto& row : json_rows) {
    if (row["length"] == 6) sizes.push_back(row["patterns"].size());
  }
  CHECK(sizes == std::vector<std::size_t>{10, 11, 3, 3, 2, 1, 1, 1});

  const auto csv = invoke({"--format", "csv", "table", "--lengths", "2..6"});
  CHECK(csv.code == 0);
  CHECK(group_csv(csv.out) == kPublishedTable);

  const auto text = invoke({"table", "--lengths", "2..6"});
  CHECK(group_text(text.out) == kPublishedTable);
  CHECK(text.out.find("swapping heads and tails") != std::string::npos);
}

TEST_CASE("table options") {
  const auto all = group_json(invoke_json({"table", "--lengths", "2", "--all"})["results"]);
  CHECK(all.at(2).at(4) == std::set<std::string>{"01", "10"});
  CHECK(all.at(2).at(6) == std::set<std::string>{"00", "11"});

  CHECK(invoke({"table", "--lengths", "13"}).code == 1);
  CHECK(invoke({"table", "--lengths", "1..3"}).code == 1);
  CHECK(invoke({"table", "--lengths", "5..3"}).code == 1);
  CHECK(invoke({"table", "--lengths", "x"}).code == 1);
  CHECK(invoke({"table", "--lengths", "13", "--cap", "13"}).code == 0);
}

TEST_CASE("dist prints exact first-occurrence probabilities") {
  const auto th = invoke_json({"dist", "01", "--horizon", "4"});
  const auto& row4 = th["results"]["rows"][4];
  CHECK(row4["n"] == 4);
  CHECK(row4["tau"] == 3);
  CHECK(row4["probability"] == "3/16");
  CHECK(row4["probability_decimal"] == "0.1875");
  CHECK(th["results"]["residual"] == "5/16");
  CHECK(th["results"]["cumulative"] == "11/16");

  const auto hh = invoke_json({"dist", "11", "--horizon", "3"});
  CHECK(hh["results"]["rows"][3]["tau"] == 1);
  CHECK(hh["results"]["rows"][3]["probability"] == "1/8");

  CHECK(invoke({"dist", "11", "--horizon", "1"}).code == 1);

  const auto csv = invoke({"--format", "csv", "dist", "01", "--horizon", "4"});
  std::istringstream lines(csv.out);
  std::string header, line, last;
  std::getline(lines, header);
  CHECK(header == "n,tau,sigma,probability,probability_decimal,cumulative,residual");
  while (std::getline(lines, line)) last = line;
  CHECK(last == "4,3,5,3/16,0.1875,11/16,5/16");

  const auto text = invoke({"dist", "01", "--horizon", "4"});
  CHECK(text.out.find("residual after 4 tosses: 5/2^4 = 0.3125") != std::string::npos);
}

TEST_CASE("simulate reports mean, error and exact value") {
  const auto one = invoke_json({"simulate", "10", "--trials", "1", "--seed", "7"});
  const double mean = one["results"]["sample_mean"];
  CHECK(mean >= 2.0);
  CHECK(mean == std::floor(mean));
  CHECK(one["results"]["z_score"].is_null());

  const auto hht = invoke_json({"simulate", "HHT", "--trials", "100000", "--seed", "1"});
  CHECK(hht["results"]["exact_mean"] == 8);
  CHECK(hht["results"]["generator"] == "mt19937_64");
  CHECK(std::abs(hht["results"]["z_score"].get<double>()) < 5.0);

  const auto text = invoke({"simulate", "11", "--trials", "1000", "--seed", "42"});
  CHECK(text.out.find("exact mean      6") != std::string::npos);
  CHECK(text.out.find("z-score") != std::string::npos);

  CHECK(invoke({"simulate", "11", "--trials", "0"}).code == 1);
}

TEST_CASE("the safety cap maps to the internal-guard exit code") {
  const auto r = invoke({"simulate", std::string(30, '1'), "--trials", "1", "--max-tosses", "50"});
  CHECK(r.code == 3);
  CHECK(r.err.find("exceeded") != std::string::npos);
}

TEST_CASE("verify runs identities and the enumeration oracle") {
  const auto ok = invoke({"verify", "--lengths", "2..4", "--horizon", "32"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find(" 0 failures") != std::string::npos);

  const auto doubles = invoke_json({"verify", "--lengths", "2..2", "--oracle-n", "12"});
  CHECK(doubles["results"]["passed"] == true);
  CHECK(doubles["results"]["oracle_checks"] == 22);
  CHECK(doubles["results"]["patterns"].size() == 2);

  CHECK(invoke({"verify", "--lengths", "13..13"}).code == 1);
  CHECK(invoke({"verify", "--lengths", "2..4", "--horizon", "7"}).code == 1);
  CHECK(invoke({"verify", "--lengths", "2", "--oracle-n", "25"}).code == 1);

  const auto csv = invoke({"--format", "csv", "verify", "--lengths", "3", "--horizon", "12"});
  CHECK(csv.out.rfind("pattern,length,identity_checks,oracle_checks,failures,first_failure\n", 0) == 0);
}

TEST_CASE("global flags work after the subcommand and --output writes a file") {
  const auto r = invoke({"expect", "11", "--format", "csv"});
  CHECK(r.out.rfind("pattern,", 0) == 0);

  const auto path = std::filesystem::temp_directory_path() / "penney_cli_output_test.json";
  const auto w = invoke({"--format", "json", "--output", path.string(), "table", "--lengths", "2"});
  CHECK(w.code == 0);
  CHECK(w.out.empty());
  std::ifstream in(path);
  const auto doc = json::parse(in);
  CHECK(doc["command"] == "table");
  std::filesystem::remove(path);

  CHECK(invoke({"--output", "/nonexistent-dir/x.txt", "expect", "1"}).code == 1);
}

TEST_CASE("help exits successfully") { CHECK(invoke({"--help"}).code == 0); }

TEST_CASE("parse_length_range") {
  using penney::cli::parse_length_range;
  CHECK(parse_length_range("3").min == 3);
  CHECK(parse_length_range("3").max == 3);
  CHECK(parse_length_range("2..6").max == 6);
  CHECK_THROWS_AS(parse_length_range("6..2"), penney::cli::UsageError);
  CHECK_THROWS_AS(parse_length_range("..2"), penney::cli::UsageError);
  CHECK_THROWS_AS(parse_length_range("2..x"), penney::cli::UsageError);
}
