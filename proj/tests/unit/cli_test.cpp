#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

using edgepoly::cli::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "edgepoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = edgepoly::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(EDGEPOLY_FIXTURE_DIR) + "/" + name + ".edges"; }

Json result_of(const Run& r) { return Json::parse(r.out).at("result"); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("edgepoly_cli_test_" + name);
}

}  // namespace

TEST(Cli, AnalyzeK4) {
  const auto r = run({"analyze", fixture("K4")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "input", "result", "warnings", "version"}));
  EXPECT_EQ(j["result"]["dim"], 3);
  EXPECT_EQ(j["result"]["f0"], 6);
  EXPECT_EQ(j["result"]["f1"], 12);
}

TEST(Cli, FacetsK4WithOracle) {
  const auto r = run({"facets", fixture("K4"), "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json res = result_of(r);
  EXPECT_EQ(res["count"], 8);
  EXPECT_EQ(res["oracle"]["oracle_match"], true);
  EXPECT_EQ(res["bounds"]["upper_ok"], true);
}

TEST(Cli, FacetsWindmillSurfacesCounts) {
  const auto r = run({"facets", fixture("windmill2")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(result_of(r)["count"], 23);
  EXPECT_EQ(result_of(r)["bounds"]["exceeds_lower"], true);
}

TEST(Cli, FacetsCapRaisedWarns) {
  const auto r = run({"facets", fixture("C8"), "--max-n", "30"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["warnings"].size(), 1u);
  EXPECT_EQ(run({"facets", fixture("C8"), "--max-n", "5"}).code, 4);
}

TEST(Cli, NeighborlyPetersen) {
  const auto r = run({"neighborly", fixture("petersen"), "--k", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(result_of(r)["neighborly"], true);
  EXPECT_TRUE(result_of(r)["witness"].is_null());

  const auto m = run({"neighborly", fixture("K4")});
  EXPECT_EQ(result_of(m)["max_k"], 1);
  EXPECT_EQ(result_of(m)["witness"]["kind"], "even_cycle");

  EXPECT_EQ(run({"neighborly", fixture("K4"), "--k", "1"}).code, 2);
}

TEST(Cli, OracleFaceVerdicts) {
  auto r = run({"oracle", fixture("K4"), "--face", "1-2,3-4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(result_of(r)["is_face"], false);
  EXPECT_EQ(result_of(r)["witness_point"].size(), 4u);
  r = run({"oracle", fixture("K4"), "--face", "1-2,1-3,1-4"});
  EXPECT_EQ(result_of(r)["is_face"], true);
  EXPECT_EQ(run({"oracle", fixture("C5"), "--face", "1-3"}).code, 2);
  EXPECT_EQ(run({"oracle", fixture("C5"), "--face", "1-9"}).code, 2);
}

TEST(Cli, RandomReportsExactValues) {
  const auto r = run({"random", "--n", "5", "--p", "1", "--trials", "3", "--seed", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(result_of(r)["mean_f1"], "30");
  EXPECT_EQ(result_of(r)["expected_f1_exact"], "30");

  const auto s = run({"random", "--n", "12", "--p", "1/sqrt(3)", "--trials", "40", "--seed", "1"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(result_of(s)["expected_f1_exact"], "440");

  const auto t = run({"random", "--n", "10", "--p", "0.5", "--trials", "40", "--seed", "1"});
  EXPECT_EQ(result_of(t)["expected_f1_exact"], "5715/32");
  EXPECT_EQ(run({"random", "--n", "10", "--p", "2/1", "--trials", "4", "--seed", "1"}).code, 2);
  EXPECT_EQ(run({"random", "--n", "10", "--p", "abc", "--trials", "4", "--seed", "1"}).code, 2);
}

TEST(Cli, WalksPathsAndSets) {
  const auto r = run({"walks", fixture("C5"), "--k", "3", "--paths", "1", "3", "--sets", "1,2;2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json res = result_of(r);
  EXPECT_EQ(res["total"], "10");
  EXPECT_EQ(res["nu"], "2");
  EXPECT_EQ(res["paths"]["count"], 1);  // 1-5-4-3
  EXPECT_EQ(res["discrepancy"]["edges_between"], 2);
  EXPECT_EQ(res["discrepancy"]["value"], "2/5");
}

TEST(Cli, GenerateThenAnalyze) {
  const auto path = temp_file("w2.edges").string();
  ASSERT_EQ(run({"generate", "--kind", "windmill", "2", "--out", path}).code, 0);
  const auto r = run({"analyze", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(result_of(r)["dim"], 6);
  EXPECT_EQ(result_of(r)["f0"], 12);
  std::filesystem::remove(path);
}

TEST(Cli, ErrorsLeaveStdoutEmpty) {
  const std::vector<std::pair<std::vector<std::string>, int>> cases = {
      {{"frobnicate"}, 2},
      {{"analyze", "/nonexistent.edges"}, 2},
      {{"generate", "--kind", "cube", "3"}, 2},
      {{"generate", "--kind", "cycle"}, 2},
      {{"generate", "--kind", "gnp", "5", "0.5", "seed"}, 2},
      {{"random", "--n", "5", "--p", "1/0", "--trials", "3", "--seed", "1"}, 2},
      {{"facets", fixture("K4"), "--max-n", "3"}, 4},
  };
  for (const auto& [args, code] : cases) {
    const auto r = run(args);
    EXPECT_EQ(r.code, code) << args[0];
    EXPECT_TRUE(r.out.empty()) << args[0];
    EXPECT_FALSE(r.err.empty()) << args[0];
  }

  const auto bad = temp_file("isolated.edges");
  std::ofstream(bad) << "n 4\n1 2\n";
  const auto r = run({"analyze", bad.string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  std::filesystem::remove(bad);
}

TEST(Cli, ReportsAreByteStable) {
  const std::vector<std::string> args = {"random", "--n", "9", "--p", "1/3", "--trials", "100", "--seed", "5"};
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_EQ(run({"facets", fixture("windmill3")}).out, run({"facets", fixture("windmill3")}).out);
}

TEST(Cli, PrettyOutput) {
  const auto r = run({"--pretty", "analyze", fixture("K4")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("f1: 12"), std::string::npos);
}

// The installed binary, end to end.
TEST(Cli, ExecutableRoundTrip) {
  const auto path = temp_file("k33.edges").string();
  const std::string exe = EDGEPOLY_CLI_PATH;
  ASSERT_EQ(std::system((exe + " generate --kind complete_bipartite 3 3 --out " + path + " > /dev/null").c_str()), 0);
  FILE* pipe = popen((exe + " analyze " + path).c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  EXPECT_EQ(pclose(pipe), 0);
  EXPECT_EQ(Json::parse(out)["result"]["f1"], 18);
  const int status = std::system((exe + " analyze /nonexistent.edges 2> /dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
  std::filesystem::remove(path);
}
