// Copyright 2026 The hcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hcone_cli/cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace hcone::cli {
namespace {

using nlohmann::json;

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(HCONE_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GoldenCase {
  std::vector<std::string> args;
  std::string file;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.file; }

class GoldenTest : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenTest, MatchesByteForByte) {
  const RunResult r = run(GetParam().args);
  EXPECT_EQ(r.exit_code, kSuccess) << r.err;
  EXPECT_EQ(r.out, read_golden(GetParam().file));
  EXPECT_TRUE(r.err.empty());
}

INSTANTIATE_TEST_SUITE_P(
    Cli, GoldenTest,
    ::testing::Values(
        GoldenCase{{"decompose", "-n", "3", "--h", "3,3,2,4,2,1,2,1"}, "decompose_n3_worked.txt"},
        GoldenCase{{"decompose", "-n", "4", "--h", "3,3,2,2,3,3,2,0,1,1"},
                   "decompose_n4_cutoff.txt"},
        GoldenCase{{"decompose", "-n", "2", "--h", "2,1,2,0,1"}, "decompose_n2_nonunique.txt"},
        GoldenCase{{"lexseg", "-n", "2", "--h", "1,1,2,2,2,1"}, "lexseg_n2_bsp1.txt"},
        GoldenCase{{"render", "-n", "3", "--h", "3,3,2,4,2,1,2,1"}, "render_n3_worked.txt"}),
    [](const auto& info) { return info.param.file.substr(0, info.param.file.find('.')); });

TEST(Cli, MemberExitCodes) {
  const RunResult yes = run({"member", "-n", "2", "--h", "2,1,2,0,1"});
  EXPECT_EQ(yes.exit_code, kSuccess);
  EXPECT_EQ(yes.out, "member\n");
  const RunResult no = run({"member", "-n", "2", "--h", "1,0,0,0,1"});
  EXPECT_EQ(no.exit_code, kNotMember);
  EXPECT_EQ(no.out, "not a member\n");
}

TEST(Cli, DecomposeNotMember) {
  const RunResult r = run({"decompose", "-n", "2", "--h", "1,0,0,0,1", "--check-oracle"});
  EXPECT_EQ(r.exit_code, kNotMember);
  EXPECT_NE(r.out.find("not a member: rejected at tower_negative (degree 4, depth 1)"),
            std::string::npos);
  EXPECT_NE(r.out.find("oracle: agrees"), std::string::npos);
}

TEST(Cli, CheckOracleAgreesOnTheWorkedExample) {
  const RunResult r = run({"decompose", "-n", "3", "--h", "3,3,2,4,2,1,2,1", "--check-oracle"});
  EXPECT_EQ(r.exit_code, kSuccess);
  EXPECT_NE(r.out.find("oracle: agrees"), std::string::npos);
}

TEST(Cli, UsageErrorsNameTheProblem) {
  const RunResult missing = run({"decompose", "-n", "2"});
  EXPECT_EQ(missing.exit_code, kUsage);
  EXPECT_NE(missing.err.find("--h"), std::string::npos);

  const RunResult bad_token = run({"member", "-n", "2", "--h", "1,x,2"});
  EXPECT_EQ(bad_token.exit_code, kUsage);
  EXPECT_NE(bad_token.err.find("x"), std::string::npos);

  EXPECT_EQ(run({}).exit_code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).exit_code, kUsage);
  EXPECT_EQ(run({"member", "-n", "0", "--h", "1"}).exit_code, kUsage);
  EXPECT_EQ(run({"selftest", "--n-max", "0"}).exit_code, kUsage);
  EXPECT_EQ(run({"lexseg", "-n", "2", "--h", "1,2"}).exit_code, kUsage);
  EXPECT_EQ(run({"render", "-n", "2", "--staircase", "2,3"}).exit_code, kUsage);
  EXPECT_EQ(run({"render", "-n", "2", "--staircase", "2", "--format", "png"}).exit_code, kUsage);
}

TEST(Cli, HelpExitsCleanly) {
  const RunResult r = run({"--help"});
  EXPECT_EQ(r.exit_code, kSuccess);
  EXPECT_NE(r.out.find("decompose"), std::string::npos);
}

TEST(Cli, SelftestRefusesHugeSweepsWithoutForce) {
  const RunResult r = run({"selftest", "--n-max", "9", "--d-max", "20", "--entry-max", "9"});
  EXPECT_EQ(r.exit_code, kUsage);
  EXPECT_NE(r.err.find("--force"), std::string::npos);
}

TEST(Cli, SmallSelftestsPassDeterministically) {
  const std::vector<std::string> args{"selftest", "--n-max", "2", "--d-max", "4",
                                      "--entry-max", "2", "--seed", "0"};
  const RunResult first = run(args);
  EXPECT_EQ(first.exit_code, kSuccess) << first.out;
  EXPECT_EQ(run(args).out, first.out);

  const RunResult tiny = run({"selftest", "--n-max", "1", "--d-max", "3", "--entry-max", "1"});
  EXPECT_EQ(tiny.exit_code, kSuccess) << tiny.out;

  const RunResult as_json = run({"selftest", "--n-max", "2", "--d-max", "4", "--entry-max", "2",
                                 "--format", "json"});
  ASSERT_EQ(as_json.exit_code, kSuccess);
  const json report = json::parse(as_json.out);
  EXPECT_TRUE(report["passed"].get<bool>());
  std::int64_t compared = 0;
  for (const auto& p : report["properties"]) {
    if (p["name"] == "verdict_equivalence") compared = p["cases"].get<std::int64_t>();
  }
  EXPECT_GE(compared, 243);
}

TEST(Cli, JsonOutputsParseAndAreDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"ex", "-n", "2", "-d", "4", "--format", "json"},
      {"decompose", "-n", "3", "--h", "3,3,2,4,2,1,2,1", "--format", "json"},
      {"decompose", "-n", "2", "--h", "1,0,0,0,1", "--format", "json"},
      {"lexseg", "-n", "2", "--h", "1,1,2,2,2,1", "--format", "json"},
  };
  for (const auto& args : commands) {
    const RunResult r = run(args);
    EXPECT_TRUE(json::accept(r.out)) << r.out;
    EXPECT_EQ(run(args).out, r.out);
  }
  const json ex = json::parse(run(commands[0]).out);
  EXPECT_EQ(ex["points"].size(), 9u);
  const json not_member = json::parse(run(commands[2]).out);
  EXPECT_EQ(not_member["witness"]["step"], "tower_negative");
}

TEST(Cli, ExTextListing) {
  const RunResult r = run({"ex", "-n", "2", "-d", "2"});
  EXPECT_EQ(r.exit_code, kSuccess);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "Ex(2) for n=2: 4 points");
  EXPECT_NE(r.out.find("t^2"), std::string::npos);
  EXPECT_NE(r.out.find("(1,0,1)"), std::string::npos);
}

TEST(Cli, RenderStaircaseFormats) {
  const RunResult ascii = run({"render", "-n", "2", "--staircase", "4,3,2"});
  EXPECT_EQ(ascii.exit_code, kSuccess);
  EXPECT_EQ(ascii.out, "4 5\n2 3 4\n0 1 2 3\n");
  const RunResult svg = run({"render", "-n", "2", "--staircase", "4,3,2", "--format", "svg"});
  EXPECT_EQ(svg.exit_code, kSuccess);
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
  EXPECT_EQ(run({"render", "-n", "2", "--h", "1,0,0,0,1"}).exit_code, kNotMember);
}

}  // namespace
}  // namespace hcone::cli
