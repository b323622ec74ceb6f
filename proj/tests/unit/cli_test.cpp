#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace slicedeg {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, bool with_db = true) {
  if (with_db) {
    args.push_back("--db");
    args.push_back(SLICEDEG_BUNDLED_DB);
  }
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, Classes) {
  auto r = run({"classes", "4"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "(2)\n(1,1,1,1)\n");
}

TEST(Cli, Bound) {
  auto r = run({"bound", "7_4"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("7_4: sd+ in [5,8]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("lower: 5"), std::string::npos);
  EXPECT_NE(r.out.find("upper: 8"), std::string::npos);
}

TEST(Cli, BoundJson) {
  auto r = run({"bound", "9_10", "--json", "--threads", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("lower"), 9);
  EXPECT_EQ(j.at("upper"), 12);
  EXPECT_EQ(j.at("interval"), "[9,12]");
}

TEST(Cli, ObstructionSubsetsAreWeaker) {
  const auto full = nlohmann::json::parse(run({"bound", "7_4", "--json"}).out).at("lower").get<int>();
  for (const char* subset : {"s", "vs", "gamma", "s,vs", "friend"}) {
    auto r = run({"bound", "7_4", "--json", "--obstructions", subset});
    ASSERT_EQ(r.code, cli::kExitOk) << subset;
    EXPECT_LE(nlohmann::json::parse(r.out).at("lower").get<int>(), full) << subset;
  }
  EXPECT_EQ(run({"bound", "7_4", "--obstructions", "s,foo"}).code, cli::kExitUsage);
}

TEST(Cli, MaxK) {
  auto r = run({"bound", "9_1", "--max-k", "5", "--json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("lower"), 6);
  EXPECT_TRUE(j.at("lower_exhausted").get<bool>());
}

TEST(Cli, VsOracles) {
  auto r = run({"vs", "8_19", "--oracle", "all"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out,
            "formula: [1,1,1,0]\nstaircase: [1,1,1,0]\ntorsion: [1,1,1,0]\nnu+: 3\nagreement: yes\n");
  auto thin = run({"vs", "9_1", "--max-s", "5"});
  EXPECT_EQ(thin.out, "formula: [2,2,1,1,0,0]\nnu+: 4\n");
  auto note = run({"vs", "9_1", "--oracle", "staircase"});
  EXPECT_EQ(note.code, cli::kExitOk);
  EXPECT_NE(note.err.find("L-space"), std::string::npos);
  EXPECT_EQ(run({"vs", "9_42"}).code, cli::kExitDataError);
}

TEST(Cli, CheckClass) {
  auto r = run({"check-class", "7_4", "2"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("gamma: obstructed"), std::string::npos) << r.out;
  auto n = run({"check-class", "7_4", "-1,2"});
  EXPECT_EQ(n.code, cli::kExitOk);
  EXPECT_NE(n.err.find("normalized to (2,1)"), std::string::npos) << n.err;
  EXPECT_EQ(run({"check-class", "7_4", "2,x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"check-class", "7_4", "2,"}).code, cli::kExitUsage);
  auto zero = run({"check-class", "9_42", "()"});
  EXPECT_NE(zero.out.find("null class: obstructed"), std::string::npos) << zero.out;
}

TEST(Cli, BetaTable) {
  auto r = run({"beta-table", "--max", "16"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out,
            "| beta | sd+ >= | class |\n|---|---|---|\n"
            "| 2 | 4 | (2) |\n| 4 | 8 | (2,2) |\n| 6 | 9 | (3) |\n| 8 | 13 | (3,2) |\n"
            "| 10 | 16 | (4) |\n| 12 | 16 | (4) |\n| 14 | 20 | (4,2) |\n| 16 | 24 | (4,2,2) |\n");
}

TEST(Cli, TableMatchesGolden) {
  auto r = run({"table", "--quiet"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(r.err.empty());
  EXPECT_EQ(r.out, read_file(SLICEDEG_GOLDEN_DIR "/table.md"));
  auto j = run({"table", "--format", "json", "--threads", "4", "--quiet"});
  EXPECT_EQ(j.code, cli::kExitOk);
  EXPECT_GE(nlohmann::json::parse(j.out).size(), 85u);
}

TEST(Cli, UnknownKnotListsNearMatches) {
  auto r = run({"bound", "9_4x"});
  EXPECT_EQ(r.code, cli::kExitDataError);
  EXPECT_NE(r.err.find("9_4"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"classes", "4"}, false).code, cli::kExitUsage);
  EXPECT_EQ(run({"classes", "4", "bound", "3_1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"classes", "-1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"table", "--format", "csv"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, DataErrors) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::run({"classes", "3", "--db", "/nonexistent.json"}, out, err), cli::kExitDataError);
  const std::string bad = testing::TempDir() + "/bad_knots.json";
  std::ofstream(bad) << R"([{"name":"x","signature":-3}])";
  std::ostringstream out2, err2;
  EXPECT_EQ(cli::run({"classes", "3", "--db", bad}, out2, err2), cli::kExitDataError);
  EXPECT_NE(err2.str().find("signature must be even"), std::string::npos) << err2.str();
}

TEST(Cli, QuietSuppressesWarnings) {
  auto loud = run({"classes", "1"});
  EXPECT_NE(loud.err.find("warning"), std::string::npos);
  auto quiet = run({"classes", "1", "--quiet"});
  EXPECT_TRUE(quiet.err.empty());
}

}  // namespace
}  // namespace slicedeg
