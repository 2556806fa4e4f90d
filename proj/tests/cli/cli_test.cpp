// Copyright 2026 The coirank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

const std::string kCli = COIRANK_CLI;
const std::string kFourCases = COIRANK_DATA_DIR "/coi_four_cases.jsonl";

struct CliRun {
  int exit_code = -1;
  std::string stderr_text;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           (std::string("coirank_cli_") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliRun run(const std::string& args) const {
    const fs::path err = dir_ / "stderr.txt";
    const std::string command = "'" + kCli + "' " + args + " >/dev/null 2>'" + err.string() + "'";
    const int status = std::system(command.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.stderr_text = read(err);
    return r;
  }

  static std::string read(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  fs::path out(const std::string& name) const { return dir_ / name; }

  fs::path dir_;
};

TEST_F(CliTest, PipelineWritesEveryArtifact) {
  const fs::path o = out("run");
  const CliRun r = run("pipeline -i '" + kFourCases + "' -o '" + o.string() + "' --k-min 2 --k-max 10 --k-step 2");
  ASSERT_EQ(r.exit_code, 0) << r.stderr_text;
  for (const char* name :
       {"ingest_report.json", "edges.csv", "coi_summary.json", "ranking_pandora.csv", "ranking_cajtrank.csv",
        "ranking_futurerank.csv", "institutions.csv", "countries.csv", "yearly_coic.csv", "yearly_impact.csv",
        "aggregate_summary.json", "eval.csv", "manifest.json"}) {
    EXPECT_TRUE(fs::exists(o / name)) << name;
  }
  EXPECT_FALSE(fs::exists(o / "indices.csv"));
  const std::string edges = read(o / "edges.csv");
  std::set<std::string> classes;
  std::istringstream lines(edges);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string citing, cited, cls;
    std::getline(fields, citing, ',');
    std::getline(fields, cited, ',');
    std::getline(fields, cls, ',');
    classes.insert(cls);
  }
  EXPECT_EQ(classes, (std::set<std::string>{"NORMAL", "POSITIVE_COI", "NEGATIVE_COI", "POSITIVE_SUSPECTED_COI",
                                            "NEGATIVE_SUSPECTED_COI"}));
  const std::string manifest = read(o / "manifest.json");
  EXPECT_NE(manifest.find("\"corpus_sha256\""), std::string::npos);
  EXPECT_NE(manifest.find("\"eval.csv\""), std::string::npos);
}

TEST_F(CliTest, StagesWriteTheirOwnArtifacts) {
  const fs::path o = out("stages");
  ASSERT_EQ(run("ingest -i '" + kFourCases + "' -o '" + o.string() + "' --dump-indices").exit_code, 0);
  EXPECT_TRUE(fs::exists(o / "ingest_report.json"));
  EXPECT_TRUE(fs::exists(o / "indices.csv"));
  EXPECT_FALSE(fs::exists(o / "edges.csv"));
  ASSERT_EQ(run("rank -i '" + kFourCases + "' -o '" + o.string() + "' --algo cajtrank --dump-credit").exit_code, 0);
  EXPECT_TRUE(fs::exists(o / "ranking_cajtrank.csv"));
  EXPECT_FALSE(fs::exists(o / "ranking_pandora.csv"));
  EXPECT_TRUE(fs::exists(o / "credit.csv"));
  ASSERT_EQ(run("aggregate -i '" + kFourCases + "' -o '" + o.string() + "'").exit_code, 0);
  EXPECT_TRUE(fs::exists(o / "countries.csv"));
}

TEST_F(CliTest, OutputsAreDeterministicApartFromTheManifest) {
  const std::string args = "pipeline -i '" + kFourCases + "' --k-min 2 --k-max 10 --k-step 2 -o ";
  ASSERT_EQ(run(args + "'" + out("a").string() + "'").exit_code, 0);
  ASSERT_EQ(run(args + "'" + out("b").string() + "' --threads 3").exit_code, 0);
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(out("a"))) {
    const std::string name = entry.path().filename().string();
    if (name == "manifest.json") continue;
    EXPECT_EQ(read(entry.path()), read(out("b") / name)) << name;
    ++compared;
  }
  EXPECT_EQ(compared, 12u);
}

TEST_F(CliTest, EmptyCorpusExitsWithInputError) {
  std::ofstream(out("empty.jsonl")).close();
  const CliRun r = run("pipeline -i '" + out("empty.jsonl").string() + "' -o '" + out("o").string() + "'");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.stderr_text.find("no record"), std::string::npos) << r.stderr_text;
}

TEST_F(CliTest, BadArgumentsExitWithInputError) {
  EXPECT_EQ(run("rank -i '" + kFourCases + "' -o '" + out("o").string() + "' --alpha 0.9").exit_code, 1);
  EXPECT_EQ(run("rank -i '" + kFourCases + "' --algo hits").exit_code, 1);
  EXPECT_EQ(run("rank").exit_code, 1);
  EXPECT_EQ(run("").exit_code, 1);
  EXPECT_EQ(run("rank -i /nonexistent.jsonl -o '" + out("o").string() + "'").exit_code, 1);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST_F(CliTest, NonConvergenceExitsWithTwo) {
  const CliRun r = run("rank -i '" + kFourCases + "' -o '" + out("o").string() + "' --max-iters 1");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.stderr_text.find("did not converge"), std::string::npos) << r.stderr_text;
  EXPECT_TRUE(fs::exists(out("o") / "ranking_pandora.csv"));
  EXPECT_TRUE(fs::exists(out("o") / "manifest.json"));
}

TEST_F(CliTest, ConfigFileWithFlagOverride) {
  std::ofstream(out("run.ini")) << "alpha = 0.3\nbeta = 0.2\nalgo = pandora\n";
  const fs::path o = out("o");
  ASSERT_EQ(run("rank -i '" + kFourCases + "' -o '" + o.string() + "' --config '" + out("run.ini").string() +
                "' --beta 0.1")
                .exit_code,
            0);
  const std::string manifest = read(o / "manifest.json");
  EXPECT_NE(manifest.find("\"alpha\": 0.3"), std::string::npos) << manifest;
  EXPECT_NE(manifest.find("\"beta\": 0.1"), std::string::npos) << manifest;
  EXPECT_FALSE(fs::exists(o / "ranking_cajtrank.csv"));
}

TEST_F(CliTest, FixtureRoundTrip) {
  const fs::path f = out("fixture.jsonl");
  ASSERT_EQ(run("fixture --out '" + f.string() + "' --seed 3 --papers 120 --rate 0.2").exit_code, 0);
  const std::string first = read(f);
  ASSERT_EQ(run("fixture --out '" + f.string() + "' --seed 3 --papers 120 --rate 0.2").exit_code, 0);
  EXPECT_EQ(read(f), first);
  std::size_t lines = 0;
  for (char c : first) lines += c == '\n';
  EXPECT_EQ(lines, 120u);
  EXPECT_EQ(run("pipeline -i '" + f.string() + "' -o '" + out("o").string() + "'").exit_code, 0);
  EXPECT_EQ(run("fixture --out '" + f.string() + "' --rate 7").exit_code, 1);
  EXPECT_EQ(run("fixture").exit_code, 1);
}

TEST_F(CliTest, RecordErrorsBecomeWarnings) {
  std::ofstream(out("mixed.jsonl")) << "{\"id\":\"p\",\"year\":2000,\"authors\":[{\"name\":\"Ann Lee\"}]}\n"
                                    << "garbage\n";
  const CliRun r = run("ingest -i '" + out("mixed.jsonl").string() + "' -o '" + out("o").string() + "'");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.stderr_text.find("coirank: warning: line 2"), std::string::npos) << r.stderr_text;
}

}  // namespace
