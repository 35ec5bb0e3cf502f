// Copyright 2026 The crfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include "json.hpp"

#include "cli.hpp"
#include "state_file.hpp"

namespace crfkit::cli {
namespace {

using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "crfkit");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::path(::testing::TempDir()) / ("crfkit_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

std::string gen_file(const std::string& name, std::vector<std::string> gen_args) {
  gen_args.insert(gen_args.begin(), "gen");
  const CliRun r = run(gen_args);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return write_temp(name, r.out);
}

TEST(CliGen, DeterministicForSeed) {
  const CliRun a = run({"gen", "random", "--parties", "3", "--dim", "2", "--seed", "17"});
  const CliRun b = run({"gen", "random", "--parties", "3", "--dim", "2", "--seed", "17"});
  const CliRun c = run({"gen", "random", "--parties", "3", "--dim", "2", "--seed", "18"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  std::vector<std::string> warnings;
  const PureState s = parse_state_file(a.out, warnings);
  EXPECT_EQ(s.parties(), 3);
  EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-12);
  EXPECT_TRUE(warnings.empty());
}

TEST(CliGen, RejectsUnknownNameAndBadShape) {
  EXPECT_EQ(run({"gen", "nonsense", "--parties", "3", "--dim", "2"}).code, kExitInput);
  EXPECT_EQ(run({"gen", "ghz", "--parties", "1", "--dim", "2"}).code, kExitInput);
  EXPECT_EQ(run({"gen", "ghz", "--parties", "30", "--dim", "4"}).code, kExitInput);
}

TEST(CliAnalyze, Ghz3Subset1) {
  const std::string path = gen_file("ghz3.json", {"ghz", "--parties", "3", "--dim", "2"});
  const CliRun r = run({"analyze", path, "--subset", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["tool"], "crfkit");
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_EQ(j["input"]["sha256"].get<std::string>().size(), 64u);
  const json& sub = j["payload"]["subsets"][0];
  EXPECT_NEAR(sub["weights"][0].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(sub["diameter"].get<double>(), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(sub["volume"].get<double>(), std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(sub["angles"][0]["cos"].get<double>(), -1.0, 1e-10);
}

TEST(CliAnalyze, AllSubsetsByDefault) {
  const std::string path = gen_file("w3.json", {"w", "--parties", "3", "--dim", "2"});
  const CliRun r = run({"analyze", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["payload"]["subsets"].size(), 6u);
  EXPECT_NEAR(j["payload"]["subsets"][0]["weights"][0].get<double>(), 2.0 / 3.0, 1e-12);
}

TEST(CliAnalyze, ReportsAreByteIdentical) {
  const std::string path = gen_file("rnd.json", {"random", "--parties", "3", "--dim", "3", "--seed", "5"});
  const CliRun a = run({"analyze", path});
  const CliRun b = run({"analyze", path});
  EXPECT_EQ(a.out, b.out);
  const std::string out_path = temp_path("report.json");
  EXPECT_EQ(run({"analyze", path, "--out", out_path}).code, kExitOk);
  EXPECT_EQ(read_file(out_path), a.out);
}

TEST(CliAnalyze, TextMode) {
  const std::string path = gen_file("ghz3t.json", {"ghz", "--parties", "3", "--dim", "2"});
  const CliRun r = run({"analyze", path, "--subset", "1", "--text"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("diameter"), std::string::npos);
  EXPECT_EQ(run({"analyze", path, "--text", "--json"}).code, kExitInput);
}

TEST(CliSeparability, ABellWithOracle) {
  const std::string path = gen_file("abell.json", {"a-bell", "--parties", "3", "--dim", "2"});
  const CliRun r = run({"separability", path, "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  const json& bps = j["payload"]["bipartitions"];
  ASSERT_EQ(bps.size(), 3u);
  int separable = 0;
  for (const auto& b : bps) {
    EXPECT_TRUE(b["agreement"].get<bool>());
    if (b["separable"].get<bool>()) {
      ++separable;
      EXPECT_EQ(b["left"], json::array({1}));
    }
  }
  EXPECT_EQ(separable, 1);
}

TEST(CliSeparability, SinglePartitionKeepsUserSide) {
  const std::string path = gen_file("qutrit.json", {"qutrit-bac-separable", "--parties", "3", "--dim", "3"});
  const CliRun r = run({"separability", path, "--partition", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["payload"]["bipartitions"][0]["left"], json::array({2}));
  EXPECT_TRUE(j["payload"]["bipartitions"][0]["separable"].get<bool>());
  EXPECT_EQ(run({"separability", path, "--partition", "4"}).code, kExitInput);
  EXPECT_EQ(run({"separability", path, "--partition", "1,2,3"}).code, kExitInput);
}

TEST(CliCompare, GhzVsW) {
  const std::string g = gen_file("cg.json", {"ghz", "--parties", "3", "--dim", "2"});
  const std::string w = gen_file("cw.json", {"w", "--parties", "3", "--dim", "2"});
  const CliRun r = run({"compare", g, w});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["payload"]["equivalent"].get<bool>());
  EXPECT_EQ(j["payload"]["violations"][0]["subset"], json::array({1}));
  EXPECT_GE(j["payload"]["violations"][0]["max_weight_diff"].get<double>(), 0.16);
  EXPECT_TRUE(j["input"].contains("sha256_a"));
  EXPECT_TRUE(j["input"].contains("sha256_b"));
}

TEST(CliCompare, ShapeMismatchIsInputError) {
  const std::string a = gen_file("s3.json", {"ghz", "--parties", "3", "--dim", "2"});
  const std::string b = gen_file("s4.json", {"ghz", "--parties", "4", "--dim", "2"});
  EXPECT_EQ(run({"compare", a, b}).code, kExitInput);
}

TEST(CliAudit, PhaseKindPasses) {
  const std::string path = gen_file("aw.json", {"w", "--parties", "3", "--dim", "2"});
  const CliRun r = run({"audit", path, "--kind", "phase", "--trials", "100", "--seed", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["payload"]["violated"], 0);
  EXPECT_EQ(j["payload"]["preserved"], 100);
}

TEST(CliAudit, HaarKindRecordsWithoutFailing) {
  const std::string path = gen_file("ah.json", {"ghz", "--parties", "3", "--dim", "2"});
  const CliRun r = run({"audit", path, "--kind", "haar"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["payload"]["trials"], 10);
  EXPECT_FALSE(j["payload"]["asserted"].get<bool>());
}

TEST(CliAudit, ComplementKindNeedsSubset) {
  const std::string path = gen_file("ac.json", {"ghz", "--parties", "3", "--dim", "2"});
  EXPECT_EQ(run({"audit", path, "--kind", "complement"}).code, kExitInput);
  EXPECT_EQ(run({"audit", path, "--kind", "complement", "--subset", "1"}).code, kExitOk);
  EXPECT_EQ(run({"audit", path, "--kind", "sideways"}).code, kExitInput);
}

TEST(CliStateFile, RenormalizationPolicy) {
  const std::string tiny = write_temp("tiny.json",
                                      R"({"parties": 2, "local_dim": 2, "amplitudes": [[1.0000001,0],[0,0],[0,0],[0,0]]})");
  const CliRun a = run({"analyze", tiny, "--subset", "1"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_TRUE(json::parse(a.out)["warnings"].empty());

  const std::string warn = write_temp("warn.json",
                                      R"({"parties": 2, "local_dim": 2, "amplitudes": [[1.0001,0],[0,0],[0,0],[0,0]]})");
  const CliRun b = run({"analyze", warn, "--subset", "1"});
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_EQ(json::parse(b.out)["warnings"].size(), 1u);

  const std::string bad = write_temp("bad.json",
                                     R"({"parties": 2, "local_dim": 2, "amplitudes": [[1.1,0],[0,0],[0,0],[0,0]]})");
  EXPECT_EQ(run({"analyze", bad}).code, kExitInput);
}

TEST(CliStateFile, MalformedInputs) {
  EXPECT_EQ(run({"analyze", write_temp("m1.json", "{not json")}).code, kExitInput);
  EXPECT_EQ(run({"analyze", write_temp("m2.json", R"({"parties": 2, "local_dim": 2, "amplitudes": [[1,0]]})")}).code,
            kExitInput);
  EXPECT_EQ(run({"analyze", write_temp("m3.json", R"({"parties": 2, "local_dim": 2})")}).code, kExitInput);
  EXPECT_EQ(run({"analyze", temp_path("does_not_exist.json")}).code, kExitInput);
}

TEST(CliStateFile, FormatRoundTrip) {
  const PureState s = random_pure_state(3, 2, 12);
  std::vector<std::string> warnings;
  const PureState back = parse_state_file(format_state_file(s), warnings);
  EXPECT_EQ(back.amplitudes(), s.amplitudes());
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(CliArgs, BadFlagsExitTwo) {
  EXPECT_EQ(run({}).code, kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(run({"analyze"}).code, kExitInput);
  const std::string path = gen_file("flags.json", {"ghz", "--parties", "3", "--dim", "2"});
  EXPECT_EQ(run({"analyze", path, "--subset", "0"}).code, kExitInput);
  EXPECT_EQ(run({"analyze", path, "--subset", "1,2,3"}).code, kExitInput);
  EXPECT_EQ(run({"analyze", path, "--tol", "-1"}).code, kExitInput);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(CliArgs, ResourceCapFromEnvironment) {
  ::setenv("CRFKIT_MAX_AMPLITUDES", "16", 1);
  const CliRun r = run({"gen", "ghz", "--parties", "5", "--dim", "2"});
  ::unsetenv("CRFKIT_MAX_AMPLITUDES");
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_EQ(run({"gen", "ghz", "--parties", "5", "--dim", "2"}).code, kExitOk);
}

}  // namespace
}  // namespace crfkit::cli
