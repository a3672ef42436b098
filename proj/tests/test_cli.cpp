#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "campana");
  std::ostringstream out, err;
  const int code = campana::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("campana_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST(Cli, InvariantsLogAnticanonical) {
  const auto r = run_cli({"invariants", "--type", "A", "--rank", "2", "--eps", "1/2,1/2", "--lambda", "5/2,5/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["a"], "1/1");
  EXPECT_EQ(j["b"], 2);
  EXPECT_EQ(j["alpha"], "1/75");
}

TEST(Cli, InvariantsCsvAndMultiplicities) {
  const auto r = run_cli({"invariants", "--type", "G", "--rank", "2", "--m", "2,inf", "--lambda", "1,1", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "root,kappa,anticanonical,epsilon,lambda,ratio,maximizer\n"
            "1,10,11,1/2,1/1,21/2,1\n"
            "2,6,7,1/1,1/1,6/1,0\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  auto r = run_cli({"invariants", "--rank", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_NE(r.err.find("--type"), std::string::npos);

  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"invariants", "--type", "Z", "--rank", "2"}).code, 2);
  EXPECT_EQ(run_cli({"invariants", "--type", "A", "--rank", "2", "--eps", "1/2"}).code, 2);
  EXPECT_EQ(run_cli({"invariants", "--type", "A", "--rank", "2", "--eps", "0,0", "--m", "2,2"}).code, 2);
  EXPECT_EQ(run_cli({"count-pgl", "--n", "4", "--B", "2", "--m", "2,2,2"}).code, 2);
  EXPECT_EQ(run_cli({"count-pgl", "--n", "2", "--m", "2"}).code, 2);
  EXPECT_EQ(run_cli({"count-squareful", "--bounds", "10,x"}).code, 2);
  EXPECT_EQ(run_cli({"predict-constant", "--d-max", "5"}).code, 2);
  EXPECT_EQ(run_cli({"count-squareful", "--bounds", "10", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"count-squareful", "--bounds", "10", "--threads", "0"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count-squareful"), std::string::npos);
}

TEST(Cli, VerifyLemmasPasses) {
  const auto r = run_cli({"verify-lemmas", "--p-max", "50"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["all_passed"].get<bool>());
  for (const auto& lemma : j["lemmas"]) {
    const std::string status = lemma["status"];
    EXPECT_TRUE(status == "exact match" || status == "within tail bound") << lemma.dump();
  }
}

TEST(Cli, CountSquarefulCsv) {
  const auto r = run_cli({"count-squareful", "--B", "1000,10000", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "B,count,elapsed_ms\n1000,114,0\n10000,450,0\n");
}

TEST(Cli, CountSquarefulDump) {
  const auto dump = temp_file("dump.csv");
  const auto r = run_cli({"count-squareful", "--bounds", "100", "--dump", dump.string()});
  ASSERT_EQ(r.code, 0);
  const std::string text = slurp(dump);
  EXPECT_EQ(text.rfind("z0,z1,z2\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + nlohmann::json::parse(r.out)["rows"][0]["count"].get<int>());
  std::filesystem::remove(dump);
}

TEST(Cli, PredictConstantBannerAndCsv) {
  const auto r = run_cli({"predict-constant", "--d-max", "2", "--p-max", "100", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("2-adic"), std::string::npos);
  EXPECT_NE(r.err.find("archimedean"), std::string::npos);
  EXPECT_EQ(r.out.rfind("d0,d1,d2,value,tail_bound\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 17);
}

TEST(Cli, CountPglRunAndGrowth) {
  auto r = run_cli({"count-pgl", "--n", "2", "--B", "30", "--m", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n,B,m,count,elapsed_ms\n2,30,\"2\",448724,0\n");
  r = run_cli({"count-pgl", "--n", "2", "--bounds", "10,20,40,80", "--m", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["predicted_a"], "3/1");
  EXPECT_EQ(j["rows"].size(), 4u);
  EXPECT_FALSE(j["notes"].empty());
}

TEST(Cli, ConfigFileSuppliesDefaultsAndFlagsOverride) {
  const auto cfg = temp_file("config.json");
  std::ofstream(cfg) << R"({"bounds": [1000, 10000], "format": "csv"})";
  auto r = run_cli({"count-squareful", "--config", cfg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "B,count,elapsed_ms\n1000,114,0\n10000,450,0\n");
  r = run_cli({"count-squareful", "--config", cfg.string(), "--bounds", "1000", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["rows"].size(), 1u);

  std::ofstream(cfg) << R"({"bounds": [10], "colour": "blue"})";
  EXPECT_EQ(run_cli({"count-squareful", "--config", cfg.string()}).code, 2);
  std::ofstream(cfg) << "not json";
  EXPECT_EQ(run_cli({"count-squareful", "--config", cfg.string()}).code, 2);
  EXPECT_EQ(run_cli({"count-squareful", "--config", temp_file("missing.json").string()}).code, 2);
  std::filesystem::remove(cfg);
}

TEST(Cli, OutFileMatchesStdout) {
  const auto path = temp_file("out.json");
  const std::vector<std::string> base{"invariants", "--type", "E", "--rank", "8"};
  const auto direct = run_cli(base);
  auto with_out = base;
  with_out.insert(with_out.end(), {"--out", path.string()});
  const auto r = run_cli(with_out);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(path), direct.out);
  std::filesystem::remove(path);
}

TEST(Cli, ThreadEnvironmentDefault) {
  const std::vector<std::string> args{"predict-constant", "--d-max", "20", "--p-max", "500"};
  const auto base = run_cli(args);
  ::setenv("CAMPANA_THREADS", "3", 1);
  const auto threaded = run_cli(args);
  ::unsetenv("CAMPANA_THREADS");
  EXPECT_EQ(base.out, threaded.out);
}
