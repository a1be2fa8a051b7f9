#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "promiscuity/cli.hpp"
#include "promiscuity/format.hpp"

namespace cli = promiscuity::cli;
namespace fmt = promiscuity::format;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("promiscuity_test_" + name);
}

}  // namespace

TEST(Format, Numbers) {
  EXPECT_EQ(fmt::number(0.0), "0");
  EXPECT_EQ(fmt::number(-0.0), "0");
  EXPECT_EQ(fmt::number(9.0), "9");
  EXPECT_EQ(fmt::number(1.0 / 3), "0.333333333333");
  EXPECT_EQ(fmt::number(5.517686046189341), "5.51768604619");
  EXPECT_EQ(fmt::number(1e-20), "1e-20");
  EXPECT_EQ(fmt::rational(promiscuity::qudit::Rational(8, 18)), "4/9");
  EXPECT_EQ(fmt::rational(promiscuity::qudit::Rational(2)), "2");
}

TEST(Cli, BenchmarkReportJson) {
  const auto r = run({"fourmode", "report", "--a", "1.5", "--s", "1.0"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_NEAR(j["residual"].get<double>(), 5.519, 0.05);
  EXPECT_NEAR(j["tripartite_bound"].get<double>(), 0.451, 0.01);
  EXPECT_EQ(j["pairwise_contangle"]["1-2"].get<double>(), 9.0);
  EXPECT_TRUE(j["consistent"].get<bool>());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> expected = {
      "a", "s", "pairwise_contangle", "one_vs_rest_contangle", "interpair_contangle",
      "residual", "tripartite_bound", "monogamy_ok", "strong_monogamy_ok", "pair_separable",
      "boundary_23", "max_discrepancy", "consistent"};
  EXPECT_EQ(keys, expected);
}

TEST(Cli, JsonRoundTrips) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"fourmode", "report", "--a", "1.5", "--s", "1.0"},
           {"fourmode", "report", "--a", "0.3", "--s", "2.2"},
           {"qudit", "report", "--d", "12"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out).dump(2) + "\n", r.out);
  }
}

TEST(Cli, OutputIsByteIdentical) {
  const std::vector<std::string> args = {"fourmode", "report", "--a", "0.7", "--s", "1.3",
                                         "--format", "csv"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, ZeroReport) {
  const auto r = run({"fourmode", "report", "--a", "0", "--s", "0"});
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  for (const auto& [k, v] : j["pairwise_contangle"].items()) EXPECT_EQ(v.get<double>(), 0.0);
  for (const auto& [k, v] : j["one_vs_rest_contangle"].items()) EXPECT_EQ(v.get<double>(), 0.0);
  EXPECT_EQ(j["residual"].get<double>(), 0.0);
  EXPECT_EQ(j["tripartite_bound"].get<double>(), 0.0);
}

TEST(Cli, CsvReport) {
  const auto r = run({"fourmode", "report", "--a", "1.5", "--s", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "field,value");
  EXPECT_NE(std::find(rows.begin(), rows.end(), "pairwise_contangle.1-2,9"), rows.end());
  EXPECT_NE(std::find(rows.begin(), rows.end(), "residual,5.51768604619"), rows.end());
}

TEST(Cli, BadArgumentsExitTwo) {
  EXPECT_EQ(run({"fourmode", "report", "--a", "-1", "--s", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"fourmode", "report", "--a", "abc", "--s", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"fourmode", "report", "--s", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"fourmode", "report", "--a", "1", "--s", "0", "--format", "xml"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"fourmode", "sweep", "--steps", "1", "--out", "-"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"fourmode", "sweep", "--a-range", "2", "1", "--out", "-"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--grid-density", "1"}).code, cli::kExitUsage);
}

TEST(Cli, QuditReport) {
  const auto r4 = run({"qudit", "report", "--d", "4"});
  ASSERT_EQ(r4.code, 0);
  const auto j4 = Json::parse(r4.out);
  EXPECT_EQ(j4["three_tangle_exact"], "1");
  EXPECT_EQ(j4["pairwise_tangle_exact"], "4/9");
  EXPECT_EQ(j4["one_vs_rest_tangle_exact"], "17/9");
  EXPECT_EQ(j4["monogamy_gap_exact"], "0");
  EXPECT_NEAR(j4["nongaussianity"].get<double>(), 0.4824, 1e-4);

  const auto j8 = Json::parse(run({"qudit", "report", "--d", "8"}).out);
  EXPECT_EQ(j8["three_tangle_exact"], "2");
  EXPECT_EQ(j8["pairwise_tangle_exact"], "8/9");
  EXPECT_EQ(j8["one_vs_rest_tangle_exact"], "34/9");
}

TEST(Cli, QuditInvalidDimension) {
  for (const char* d : {"6", "10", "0", "-4"}) {
    const auto r = run({"qudit", "report", "--d", d});
    EXPECT_EQ(r.code, cli::kExitUsage) << d;
    EXPECT_NE(r.err.find("even"), std::string::npos) << r.err;
  }
}

TEST(Cli, SweepWritesFullGrid) {
  const auto path = temp_path("sweep.csv");
  const auto r = run({"fourmode", "sweep", "--a-range", "0", "2.5", "--s-range", "0", "2.5",
                      "--steps", "26", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto rows = lines(buffer.str());
  ASSERT_EQ(rows.size(), 677u);
  EXPECT_EQ(rows[0], fmt::sweep_header());
  EXPECT_EQ(rows[0],
            "a,s,tau_12,tau_23,tau_14,tau_pairblock,tau_1_rest,tau_res,tau_tri_bound,"
            "monogamy_ok,strong_monogamy_ok");
  for (std::size_t k = 1; k < rows.size(); ++k)
    EXPECT_NE(rows[k].find(",true,"), std::string::npos) << rows[k];
  // a-major order: row 1 + 15*26 + 10 is (1.5, 1.0).
  const auto& bench = rows[1 + 15 * 26 + 10];
  EXPECT_EQ(bench.rfind("1.5,1,9,", 0), 0u) << bench;
  EXPECT_NE(bench.find(",0.451130557189,"), std::string::npos) << bench;
  std::filesystem::remove(path);
}

TEST(Cli, SweepOrderIndependentOfThreadCount) {
  const std::vector<std::string> args = {"fourmode", "sweep", "--steps", "7", "--out", "-"};
  ::setenv("PROMISCUITY_THREADS", "1", 1);
  EXPECT_EQ(cli::sweep_threads(), 1u);
  const auto serial = run(args);
  ::setenv("PROMISCUITY_THREADS", "5", 1);
  EXPECT_EQ(cli::sweep_threads(), 5u);
  const auto parallel = run(args);
  ::unsetenv("PROMISCUITY_THREADS");
  ASSERT_EQ(serial.code, 0);
  EXPECT_EQ(serial.out, parallel.out);
  EXPECT_EQ(lines(serial.out).size(), 50u);
}

TEST(Cli, SweepUnwritablePath) {
  const auto r = run({"fourmode", "sweep", "--steps", "2", "--out", "/nonexistent/dir/x.csv"});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.err.find("/nonexistent/dir/x.csv"), std::string::npos);
}

TEST(Cli, ConfigFileSuppliesDefaults) {
  const auto path = temp_path("config.ini");
  std::ofstream(path) << "[fourmode.sweep]\nsteps=3\n";
  const auto from_config = run({"--config", path.string(), "fourmode", "sweep", "--out", "-"});
  EXPECT_EQ(lines(from_config.out).size(), 10u);
  const auto overridden =
      run({"--config", path.string(), "fourmode", "sweep", "--steps", "4", "--out", "-"});
  EXPECT_EQ(lines(overridden.out).size(), 17u);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyCoarseGridPasses) {
  const auto r = run({"verify", "--grid-density", "5", "--verbose"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("verify: all suites passed"), std::string::npos);
  EXPECT_NE(r.out.find("qudit_identities"), std::string::npos);
}

TEST(Cli, VerifyDetectsInjectedFault) {
  const auto r = run({"verify", "--grid-density", "5", "--inject-fault", "log-base"});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.err.find("a="), std::string::npos) << r.err;
  EXPECT_NE(r.out.find("[FAIL]"), std::string::npos);
}
