// Copyright 2026 The HMT Authors.
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

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"
#include "test_support.h"

namespace hmt {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the CLI with `args` (already shell-quoted) inside `dir`.
RunResult run_cli(const fs::path& dir, const std::string& args) {
  const std::string command = "cd '" + dir.string() + "' && '" + HMT_CLI_PATH + "' " + args +
                              " > out.txt 2> err.txt";
  const int status = std::system(command.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = testing::read_file(dir / "out.txt");
  r.err = testing::read_file(dir / "err.txt");
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new fs::path(testing::temp_dir("cli"));
    for (const auto& entry : fs::directory_iterator(testing::fixture())) {
      if (entry.path().extension() != ".rejects") {
        fs::copy(entry.path(), *dir_ / entry.path().filename());
      }
    }
    const RunResult r = run_cli(*dir_, "build --config hmt.conf");
    ASSERT_EQ(r.exit_code, 0) << r.err;
  }
  static void TearDownTestSuite() {
    fs::remove_all(*dir_);
    delete dir_;
  }
  static fs::path* dir_;
};

fs::path* CliTest::dir_ = nullptr;

TEST_F(CliTest, BuildWritesBundleAndEmptyRejectReports) {
  EXPECT_TRUE(fs::exists(*dir_ / "bundle" / "bundle.manifest"));
  EXPECT_TRUE(fs::exists(*dir_ / "parallel.tsv.rejects"));
  EXPECT_EQ(testing::read_file(*dir_ / "parallel.tsv.rejects"), "");
}

TEST_F(CliTest, TranslatesPositionalSentences) {
  const RunResult r = run_cli(*dir_, "translate --config hmt.conf 'भारत मेरा देश है' "
                                     "'क्या आप लिख रहे हैं?'");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "India is my country.\nAre you writing?\n");
}

TEST_F(CliTest, TranslatesInputFileInOrderAtAnyThreadCount) {
  std::string input;
  for (const auto& p : load_parallel(*dir_ / "parallel.tsv").entries) input += p.hindi + "\n";
  testing::write_file(*dir_ / "lines.txt", input);
  const RunResult one = run_cli(*dir_, "translate --config hmt.conf --input lines.txt --threads 1");
  const RunResult four = run_cli(*dir_, "translate --config hmt.conf --input lines.txt --threads 4");
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(std::count(one.out.begin(), one.out.end(), '\n'), 100);
}

TEST_F(CliTest, JsonTraceHasSchemaAndStages) {
  const RunResult r =
      run_cli(*dir_, "translate --config hmt.conf --trace --format json 'विकास विकास ने किया।'");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["output"], "Vikas did development.");
  EXPECT_EQ(j["segments"], nlohmann::json({"विकास", "विकास", "ने", "किया", "।"}));
  ASSERT_EQ(j["trace"].size(), 4u);
  EXPECT_EQ(j["trace"][0]["stage"], "Segmentation");
  EXPECT_EQ(j["trace"][3]["stage"], "Rearrangement");
}

TEST_F(CliTest, InspectPrintsEveryStage) {
  const RunResult r = run_cli(*dir_, "inspect --config hmt.conf 'भारत मेरा देश है'");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out,
            "Input: भारत मेरा देश है\n"
            "Segmentation: ['भारत', 'मेरा', 'देश', 'है']\n"
            "Translation+Tagging: ['india'<NAME>, 'my'<PRON>, 'country'<NOUN>, "
            "'है'<aux_present>]\n"
            "Disambiguation: ['india'<NAME>, 'my'<PRON>, 'country'<NOUN>, "
            "'है'<aux_present>]\n"
            "Rearrangement: [copular, SimplePresent] India is my country.\n"
            "Output: India is my country.\n");
}

TEST_F(CliTest, EvaluateWritesReports) {
  const RunResult r = run_cli(*dir_, "evaluate --config hmt.conf testset.tsv --report rep");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("MT \\ Sent Type\t", 0), 0u);
  const std::string table = testing::read_file(*dir_ / "rep.txt");
  EXPECT_NE(table.find("Proposed System\t"), std::string::npos);
  const nlohmann::json j = nlohmann::json::parse(testing::read_file(*dir_ / "rep.json"));
  EXPECT_EQ(j["records"].size(), 20u);
  EXPECT_EQ(j["categories"]["idiom"]["formatted"], "100.00");
}

TEST_F(CliTest, EvaluateEmptyTestsetReportsNotApplicable) {
  testing::write_file(*dir_ / "empty.tsv", "");
  const RunResult r = run_cli(*dir_, "evaluate --config hmt.conf empty.tsv --report empty");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("Proposed System\tn/a\tn/a\tn/a\tn/a"), std::string::npos);
}

TEST_F(CliTest, MissingDictionaryExitsTwo) {
  const fs::path dir = testing::temp_dir("cli_missing");
  const RunResult r = run_cli(dir, "build --data-dir '" + dir.string() + "'");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("dictionary.tsv"), std::string::npos);
  fs::remove_all(dir);
}

TEST_F(CliTest, BadFlagValueExitsTwo) {
  const RunResult r = run_cli(*dir_, "translate --config hmt.conf --lm-k -1 'राम'");
  EXPECT_EQ(r.exit_code, 2);
}

TEST_F(CliTest, CorpusRejectsGiveExitOne) {
  const fs::path dir = testing::temp_dir("cli_rejects");
  for (const auto& entry : fs::directory_iterator(*dir_)) {
    if (entry.is_regular_file() && entry.path().extension() == ".tsv") {
      fs::copy(entry.path(), dir / entry.path().filename());
    }
  }
  fs::copy(*dir_ / "proper_noun_rules.txt", dir / "proper_noun_rules.txt");
  testing::write_file(dir / "examples.tsv",
                      testing::read_file(dir / "examples.tsv") + "broken line\n");
  const RunResult r = run_cli(dir, "build --data-dir .");
  EXPECT_EQ(r.exit_code, 1) << r.err;
  EXPECT_NE(testing::read_file(dir / "examples.tsv.rejects").find("\t"), std::string::npos);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace hmt
