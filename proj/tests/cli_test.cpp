#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cadorder/cli.hpp"

namespace cadorder::cli {
namespace {

const std::string kFixtures = CADORDER_FIXTURE_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

TEST(Cli, AnalyzeBrown) {
  const auto r = run_cli({"analyze", fixture("brown_demo.poly"), "--heuristic", "brown"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("chosen: x>y>z"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("x (4, 4, 1)"), std::string::npos) << r.out;
  EXPECT_EQ(r.err, "");
}

TEST(Cli, AnalyzeAllJson) {
  const auto r = run_cli({"analyze", fixture("demo.poly"), "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["variables"], nlohmann::json::array({"x", "y"}));
  EXPECT_EQ(doc["heuristics"]["sotd"]["chosen"], "y>x");
  EXPECT_EQ(doc["heuristics"]["sotd"]["per_ordering"]["x>y"], 5);
  EXPECT_EQ(doc["heuristics"]["sotd"]["per_ordering"]["y>x"], 4);
  EXPECT_EQ(doc["heuristics"]["ndrr"]["chosen"], "x>y");
  EXPECT_EQ(doc["heuristics"]["ndrr"]["candidates"].size(), 2U);
  EXPECT_EQ(doc["heuristics"]["brown"]["triples"]["x"], nlohmann::json::array({2, 2, 1}));
}

TEST(Cli, Orderings) {
  const auto r = run_cli({"orderings", fixture("demo.poly")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "ordering sotd ndrr\nx>y 5 1\ny>x 4 1\n");
}

TEST(Cli, Project) {
  const auto r = run_cli({"project", fixture("demo.poly"), "--order", "y>x"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "level 2:\nx^2 + y\nlevel 1:\ny\n");
}

TEST(Cli, ProjectRejectsBadOrder) {
  EXPECT_EQ(run_cli({"project", fixture("demo.poly"), "--order", "x>z"}).code, kUsage);
  EXPECT_EQ(run_cli({"project", fixture("demo.poly"), "--order", "x>>y"}).code, kUsage);
  EXPECT_EQ(run_cli({"project", fixture("demo.poly")}).code, kUsage);
}

TEST(Cli, Roots) {
  const auto r = run_cli({"roots", fixture("roots.poly")});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "2\n0\n1\n3\n");
  const auto multi = run_cli({"roots", fixture("mixed.poly")});
  EXPECT_EQ(multi.code, kParse);
  EXPECT_NE(multi.err.find("not univariate"), std::string::npos);
}

TEST(Cli, ParseErrorsReportPosition) {
  const auto r = run_cli({"analyze", fixture("bad.poly")});
  EXPECT_EQ(r.code, kParse);
  EXPECT_NE(r.err.find("bad.poly:1:8"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"analyze", fixture("does_not_exist.poly")}).code, kParse);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"analyze", fixture("demo.poly"), "--heuristic", "greedy"}).code, kUsage);
  EXPECT_EQ(run_cli({"analyze", fixture("demo.poly"), "--format", "csv"}).code, kUsage);
  EXPECT_EQ(run_cli({"bench", "--problems", kFixtures}).code, kUsage);
  const auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("bench"), std::string::npos);
}

TEST(Cli, BenchMissingCells) {
  const auto r = run_cli({"bench", "--problems", fixture("bench/problems"), "--cells", fixture("missing.csv")});
  EXPECT_EQ(r.code, kData);
  EXPECT_NE(r.err.find("missing.csv"), std::string::npos);
}

TEST(Cli, BenchFormats) {
  for (const char* format : {"text", "json", "csv"}) {
    const auto r = run_cli({"bench", "--problems", fixture("bench/problems"), "--cells", fixture("bench/cells.csv"),
                            "--format", format});
    EXPECT_EQ(r.code, kOk) << format << ": " << r.err;
    EXPECT_FALSE(r.out.empty());
  }
  const auto json = run_cli({"bench", "--problems", fixture("bench/problems"), "--cells",
                             fixture("bench/cells.csv"), "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["totals"]["n_problems"], 12);
  EXPECT_EQ(doc["per_heuristic"]["brown"]["best_pick_count"], 9);
}

class BenchJoinTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("cadorder_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_ / "problems");
    std::ofstream(dir_ / "problems" / "a.poly") << "x*y + 1\n";
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  Result bench(const std::string& csv) {
    std::ofstream(dir_ / "cells.csv") << csv;
    return run_cli({"bench", "--problems", (dir_ / "problems").string(), "--cells", (dir_ / "cells.csv").string()});
  }

  std::filesystem::path dir_;
};

TEST_F(BenchJoinTest, Joins) {
  EXPECT_EQ(bench("problem,ordering,cells,timeout\na,x>y,3,0\na,y>x,4,0\n").code, kOk);
  // Problem without a .poly file.
  EXPECT_EQ(bench("problem,ordering,cells,timeout\na,x>y,3,0\na,y>x,4,0\nb,x>y,3,0\nb,y>x,4,0\n").code, kData);
  // .poly file without rows.
  EXPECT_EQ(bench("problem,ordering,cells,timeout\nb,x>y,3,0\nb,y>x,4,0\n").code, kData);
  // Pick refers to orderings over different variables.
  EXPECT_EQ(bench("problem,ordering,cells,timeout\na,u>v,3,0\na,v>u,4,0\n").code, kData);
  // Validation failure.
  EXPECT_EQ(bench("problem,ordering,cells,timeout\na,x>y,3,0\n").code, kData);
}

}  // namespace
}  // namespace cadorder::cli
