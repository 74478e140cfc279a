#include <gtest/gtest.h>

#include <hecke/shapes.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

using hecke::Json;

struct RunResult {
  int exit_code;
  Json json;
};

// Runs the installed binary with stdout captured to a scratch file.  The
// human summary goes to stderr and is dropped; stdout must be pure JSON.
RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string out = ::testing::TempDir() + "cli_out_" + std::to_string(counter++) + ".json";
  std::string cmd = std::string(HECKE_CLI_PATH) + " " + args + " > " + out + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string text = ss.str();
  if (!text.empty()) res.json = Json::parse(text, nullptr, false);
  return res;
}

const char* kHook21 = "'{\"pages\":[{\"token\":\"1\",\"outer\":[2,1],\"inner\":[]}]}'";

TEST(Tableaux, CountsHookOfThree) {
  RunResult r = run_cli(std::string("tableaux --shape ") + kHook21);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json.at("count").get<long>(), 2);
  EXPECT_EQ(r.json.at("boxes").get<long>(), 3);
  EXPECT_EQ(r.json.at("tableaux").size(), 2u);
}

TEST(Tableaux, RejectsCollidingPages) {
  RunResult r = run_cli(
      "tableaux --shape '{\"pages\":[{\"token\":\"1\",\"outer\":[1],\"inner\":[]},"
      "{\"token\":\"1\",\"outer\":[1],\"inner\":[]}]}'");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.json.at("error").at("code").get<std::string>(), "page_collision");
}

TEST(Tableaux, RejectsMalformedJson) {
  RunResult r = run_cli("tableaux --shape 'not json'");
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Tableaux, RejectsUnknownSubcommand) {
  RunResult r = run_cli("bogus");
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Rep, EmitsGeneratorsAndRelations) {
  RunResult r = run_cli("rep --shape '{\"pages\":[{\"token\":\"1\",\"outer\":[2],\"inner\":[]}]}'");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json.at("dim").get<long>(), 1);
  EXPECT_TRUE(r.json.at("generators").contains("T2"));
  EXPECT_TRUE(r.json.at("generators").contains("X1"));
  EXPECT_TRUE(r.json.at("generators").contains("X2"));
  EXPECT_TRUE(r.json.at("all_hold").get<bool>());
  EXPECT_TRUE(r.json.at("simple").get<bool>());
}

TEST(Verify, NegativeControlTripsARelation) {
  RunResult r = run_cli(std::string("verify --seed 5 --shape ") + kHook21);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.json.at("all_hold").get<bool>());
  EXPECT_TRUE(r.json.at("negative_control").at("relations_fail").get<bool>());
}

TEST(Verify, TransportsWithParameterList) {
  RunResult r = run_cli(std::string("verify --u '1,q^3,q^6' --shape ") + kHook21);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.json.at("cyclotomic").at("all_hold").get<bool>());
  EXPECT_TRUE(r.json.at("cyclotomic").at("simple").get<bool>());
}

TEST(Inventory, SumsSquaredDimensions) {
  RunResult r = run_cli("inventory --r 2 --n 2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json.at("dim_square_sum").get<long>(), 8);
  EXPECT_EQ(r.json.at("expected").get<long>(), 8);
  EXPECT_EQ(r.json.at("modules").size(), 5u);
}

TEST(Inventory, FlagsPlantedCollision) {
  RunResult r = run_cli("inventory --r 2 --n 2 --u '1,q^2'");
  EXPECT_EQ(r.exit_code, 1);
  const Json& cert = r.json.at("semisimple");
  EXPECT_FALSE(cert.at("semisimple").get<bool>());
  EXPECT_EQ(cert.at("condition").get<std::string>(), "parameter_ratio");
}

TEST(Decompose, SplitsDeskScaleInstance) {
  RunResult r = run_cli("decompose --r 2 --p 2 --n 2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json.at("orbit_classes").get<long>(), 3);
  EXPECT_EQ(r.json.at("dim_square_sum").get<long>(), 4);
  EXPECT_EQ(r.json.at("expected").get<long>(), 4);
  EXPECT_TRUE(r.json.at("orbit_mates_isomorphic").get<bool>());
  EXPECT_TRUE(r.json.at("all_pieces_simple").get<bool>());
}

TEST(Center, CharactersDistinctAndReconstructed) {
  RunResult r = run_cli("center --r 2 --n 2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.json.at("characters_distinct").get<bool>());
  EXPECT_TRUE(r.json.at("all_round_trip").get<bool>());
}

TEST(FixedDim, ClosureMatchesExpected) {
  RunResult r = run_cli("fixed-dim --r 2 --p 2 --n 2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json.at("closure_dimension").get<long>(), 4);
  EXPECT_TRUE(r.json.at("ok").get<bool>());
}

TEST(SkewringCheck, AllTestbedsPass) {
  RunResult r = run_cli("skewring-check");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.json.at("all_ok").get<bool>());
  EXPECT_EQ(r.json.at("skew_ring_center_dim").get<long>(), 1);
  EXPECT_EQ(r.json.at("testbeds").size(), 3u);
}

TEST(G2, BothCandidatesFail) {
  RunResult r = run_cli("g2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.json.at("all_fail").get<bool>());
  EXPECT_EQ(r.json.at("candidates").size(), 2u);
}

TEST(Output, OutFlagWritesFileAndKeepsStdoutClean) {
  std::string path = ::testing::TempDir() + "cli_routed.json";
  RunResult r = run_cli(std::string("tableaux --out ") + path + " --shape " + kHook21);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.json.is_null());
  std::ifstream f(path);
  Json j = Json::parse(f);
  EXPECT_EQ(j.at("count").get<long>(), 2);
}

}  // namespace
