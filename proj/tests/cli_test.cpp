// Copyright 2026 The abds Authors.
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

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "abds/cli/commands.hpp"
#include "abds/cli/job.hpp"
#include "abds/error.hpp"

namespace abds::cli {
namespace {

using nlohmann::json;

constexpr const char* kCode2 = R"(# five by fifteen
q = 2
r = (5, 15)
bounds = bch,ht
(0, 0)
(0, 3)
0,5
[0 7]
(1, 0)
(1, 2)
(1, 4)
)";

TEST(JobParseTest, TextDocument) {
  const JobSpec job = parse_job(kCode2);
  EXPECT_EQ(job.q, 2u);
  EXPECT_EQ(job.r, (std::vector<int>{5, 15}));
  EXPECT_EQ(job.reps.size(), 7u);
  EXPECT_EQ(job.reps[3], (IndexTuple{0, 7}));
  EXPECT_EQ(job.bounds, "bch,ht");
  EXPECT_EQ(job.input_hash, sha256_hex(kCode2));
  EXPECT_EQ(job.defining_set().size(), 23u);
}

TEST(JobParseTest, JsonDocumentIsEquivalent) {
  const JobSpec job = parse_job(R"({"q": 2, "r": [5, 15], "bounds": ["bch", "ht"],
      "reps": [[0,0],[0,3],[0,5],[0,7],[1,0],[1,2],[1,4]],
      "options": {"seed": 9, "over_u": true, "check": "Weight"}})");
  EXPECT_EQ(job.defining_set(), parse_job(kCode2).defining_set());
  EXPECT_EQ(job.bounds, "bch,ht");
  EXPECT_EQ(job.options.seed, 9u);
  EXPECT_TRUE(job.options.over_u);
  EXPECT_EQ(job.options.check, "weight");
}

TEST(JobParseTest, Errors) {
  EXPECT_THROW(parse_job("q = x\n"), ConfigError);
  EXPECT_THROW(parse_job("colour = red\n"), ConfigError);
  EXPECT_THROW(parse_job("q = 2\nr = 7\n(0, a)\n"), ConfigError);
  EXPECT_THROW(parse_job("{\"q\": 2,"), ConfigError);
  EXPECT_THROW(parse_job("{\"q\": 2, \"extra\": 1}"), ConfigError);
  EXPECT_THROW(parse_job("{\"q\": -2}"), ConfigError);
  EXPECT_THROW(parse_job("check = nonsense\n"), ConfigError);
  EXPECT_THROW(parse_job("trials = 0\n"), ConfigError);
  EXPECT_THROW(parse_job("q = 6\nr = 5\n").shape(), ConfigError);
  EXPECT_THROW(parse_job("r = 5\n").shape(), ConfigError);
  EXPECT_THROW(parse_job("q = 2\nr = 7\n(9)\n").defining_set(), IndexError);
}

TEST(Sha256Test, KnownDigest) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(CommandTest, OrbitExpansion) {
  const json r = cmd_orbit(parse_job("q=2\nr=3,35\n0,5\n0,7\n0,15\n1,0\n"));
  std::vector<int> sizes;
  for (const auto& o : r["result"]["orbits"]) sizes.push_back(o["size"]);
  EXPECT_EQ(sizes, (std::vector<int>{3, 4, 3, 2}));
  EXPECT_EQ(r["result"]["total"], 12);
  EXPECT_EQ(cmd_orbit(parse_job("q=2\nr=3,35\n0,0\n"))["result"]["orbits"][0]["size"], 1);
}

TEST(CommandTest, BoundValues) {
  const json r = cmd_bound(parse_job("n = 24\nset = 0,1,5,6\n"));
  EXPECT_EQ(r["result"]["values"][0]["value"], 3);
  EXPECT_EQ(r["result"]["values"][1]["value"], 4);
  const json e = cmd_bound(parse_job("n = 24\nset =\n"));
  EXPECT_EQ(e["result"]["values"][0]["value"], 1);
  EXPECT_EQ(e["result"]["values"][1]["value"], 1);
  EXPECT_EQ(cmd_bound(parse_job("n=7\nset=1,2,3\nbounds=bch\n"))["result"]["values"][0]["value"], 4);
  EXPECT_THROW(cmd_bound(parse_job("n=7\nset=7\n")), ConfigError);
}

TEST(CommandTest, MadAndCode) {
  const json m = cmd_mad(parse_job(kCode2));
  EXPECT_EQ(m["result"]["result"], 8);
  EXPECT_EQ(m["result"]["values"][0], 8);
  JobSpec job = parse_job("q=2\nr=3,7\nbounds=bch\n0,1\n1,0\n");
  job.options.trace = true;
  const json c = cmd_code(job);
  EXPECT_EQ(c["result"]["n"], 21);
  EXPECT_EQ(c["result"]["dimension"], 16);
  EXPECT_EQ(c["result"]["value"], 3);
  EXPECT_TRUE(c["result"].contains("trace"));
}

TEST(CommandTest, VerifyChecks) {
  JobSpec weight = parse_job("q=2\nr=3,3\ncheck=weight\ntrials=200\n");
  EXPECT_EQ(cmd_verify(weight)["result"]["violations"], 0);
  EXPECT_EQ(cmd_verify(parse_job("q=2\nr=3,5\ncheck=exhaustive\n"))["result"]["violations"], 0);
  EXPECT_EQ(cmd_verify(parse_job("q=2\nr=3,7\n0,1\n1,0\n"))["result"]["min_distance"], 3);
  EXPECT_THROW(cmd_verify(parse_job("q=2\nr=5,15\n0,1\n")), CapacityError);
}

TEST(CommandTest, Table1GoldenRows) {
  const json t = cmd_table1(JobSpec{});
  ASSERT_EQ(t["result"]["rows"].size(), 4u);
  EXPECT_EQ(t["result"]["skipped"][0]["id"], "C4");
  EXPECT_EQ(t["result"]["skipped"][0]["reason"], "requires shifting bound (out of scope)");
  for (const auto& row : t["result"]["rows"]) {
    EXPECT_EQ(row["observed"]["n"], row["expected"]["n"]);
    EXPECT_EQ(row["observed"]["dimension"], row["expected"]["dimension"]);
  }
}

TEST(ReportTest, EveryCommandRoundTripsThroughTheSchema) {
  const std::vector<std::pair<std::string, std::string>> jobs = {
      {"orbit", kCode2}, {"appdist", kCode2}, {"mad", kCode2},
      {"code", kCode2},  {"bound", "n=24\nset=0,1,5,6\ntrace=true\n"},
      {"verify", "q=2\nr=3,5\ncheck=weight\ntrials=10\n"}, {"table1", ""}};
  for (const auto& [command, doc] : jobs) {
    const json report = run_command(command, parse_job(doc));
    const json reparsed = json::parse(report.dump());
    EXPECT_NO_THROW(validate_report(reparsed)) << command;
    EXPECT_EQ(reparsed["schema"], "abds.report/1");
    EXPECT_EQ(reparsed["tool"]["version"], std::string(tool_version()));
    EXPECT_FALSE(render_text(reparsed).empty());
  }
}

TEST(ReportTest, ValidatorRejectsDamage) {
  json report = run_command("mad", parse_job(kCode2));
  json bad = report;
  bad["schema"] = "abds.report/0";
  EXPECT_THROW(validate_report(bad), ReportError);
  bad = report;
  bad["result"].erase("stop");
  EXPECT_THROW(validate_report(bad), ReportError);
  bad = report;
  bad["input_sha256"] = "xyz";
  EXPECT_THROW(validate_report(bad), ReportError);
  bad = report;
  bad["result"]["values"].push_back(1);
  EXPECT_THROW(validate_report(bad), ReportError);
}

int run_tool(const std::string& args, const std::string& input) {
  const std::string path = ::testing::TempDir() + "abds_cli_job.txt";
  std::ofstream(path) << input;
  const std::string cmd =
      std::string(ABDS_TOOL_PATH) + " " + args + " --input " + path + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(ToolTest, ExitCodes) {
  EXPECT_EQ(run_tool("orbit", "q=2\nr=3,35\n0,5\n"), 0);
  EXPECT_EQ(run_tool("mad --format structured", kCode2), 0);
  EXPECT_EQ(run_tool("orbit", "q=6\nr=5\n1\n"), 2);
  EXPECT_EQ(run_tool("mad", "q=2\nr=7\nbounds=roos\n1\n"), 2);
  EXPECT_EQ(run_tool("mad", "q=2\nr=7\n0\n1\n3\n"), 2);
  EXPECT_EQ(run_tool("orbit --format xml", "q=2\nr=7\n"), 2);
  EXPECT_EQ(run_tool("verify", "q=2\nr=5,15\n0,1\n"), 3);
  EXPECT_EQ(run_tool("verify --max-codewords 8", "q=2\nr=7\n1\n"), 3);
}

}  // namespace
}  // namespace abds::cli
