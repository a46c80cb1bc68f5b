#include "labelkit/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace labelkit {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

std::string without_comments(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line))
    if (line.empty() || line[0] != '#') out += line + "\n";
  return out;
}

TEST(Cli, LabelDrnlOnCycle) {
  const std::string g = write_temp("lk_c6.txt", "1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
  const CliRun r = run({"label", "--trick", "drnl", "--set", "1,2", "--graph", g});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(without_comments(r.out), "node,label\n1,1\n2,1\n3,6\n4,7\n5,7\n6,6\n");
  EXPECT_NE(r.out.find("# labelkit 0.1.0"), std::string::npos);
}

TEST(Cli, DistinguishJsonHasManifest) {
  const std::string g = write_temp("lk_c6b.txt", "1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
  const CliRun r = run({"distinguish", "--graph", g, "--target1", "1,2", "--target2", "1,3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("distinguished").get<bool>());
  EXPECT_EQ(j.at("manifest").at("version"), kVersion);
  EXPECT_EQ(j.at("manifest").at("command"), "distinguish");
  const CliRun v = run({"distinguish", "--graph", g, "--target1", "1,2", "--target2", "1,3", "--trick", "none"});
  EXPECT_EQ(without_comments(v.out), "distinguished\nfalse\n");
}

TEST(Cli, ScoreFormats) {
  const std::string g = write_temp("lk_p3.txt", "1 2\n2 3\n");
  const CliRun r = run({"score", "--graph", g, "--pair", "1,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(without_comments(r.out), "u,v,cn,aa,ra\n1,3,1,1.442695,0.500000\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  const CliRun bogus = run({"bogus"});
  EXPECT_EQ(bogus.code, kExitUsage);
  EXPECT_NE(bogus.err.find("unknown subcommand"), std::string::npos);
  EXPECT_EQ(run({"label", "--trick", "nope", "--set", "1", "--graph", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"label", "--trick", "zero_one", "--set", "1", "--graph", "/nonexistent/g.txt"}).code, kExitUsage);
  EXPECT_EQ(run({"audit", "--claim", "nope"}).code, kExitUsage);
  const std::string bad = write_temp("lk_bad.txt", "1 2\n2 q\n");
  const CliRun parse = run({"refine", "--graph", bad});
  EXPECT_EQ(parse.code, kExitUsage);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos);
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(run({"--help"}).code, 0);
  const CliRun v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, std::string(kVersion) + "\n");
}

TEST(Cli, AuditPassExitsZero) {
  const CliRun r = run({"audit", "--claim", "tricks", "--quick", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "PASS");
  EXPECT_EQ(j.at("manifest").at("seed"), 3);
}

TEST(Cli, RefineKwlRejectsDepth) {
  const std::string g = write_temp("lk_p4.txt", "1 2\n2 3\n3 4\n");
  EXPECT_EQ(run({"refine", "--graph", g, "--k", "2", "--depth", "1"}).code, kExitUsage);
  const CliRun r = run({"refine", "--graph", g, "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(without_comments(r.out).substr(0, 12), "tuple,color\n");
}

TEST(Cli, HypergraphInput) {
  const std::string h = write_temp("lk_h.json", R"({"n": 3, "hyperedges": [[1, 2, 3]]})");
  const CliRun r = run({"label", "--trick", "zero_one", "--set", "1", "--hypergraph", h});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(without_comments(r.out), "node,label\n1,1\n2,0\n3,0\n4,0\n");
  EXPECT_EQ(run({"label", "--trick", "zero_one", "--set", "4", "--hypergraph", h}).code, kExitUsage);
}

TEST(Cli, OutputFile) {
  const std::string g = write_temp("lk_c4.txt", "1 2\n2 3\n3 4\n4 1\n");
  const auto out = (std::filesystem::temp_directory_path() / "lk_out.csv").string();
  const CliRun r = run({"refine", "--graph", g, "--depth", "1", "--output", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_NE(body.str().find("node,round,color"), std::string::npos);
}

}  // namespace
}  // namespace labelkit
