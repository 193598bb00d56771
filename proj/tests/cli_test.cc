//
// Copyright 2026 The mtvaug Authors
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
//

#include <sys/wait.h>

#include <cstdlib>
#include <string>

#include <gtest/gtest.h>

#include "mtvaug/text.h"
#include "test_util.h"

namespace mtvaug {
namespace {

using ::mtvaug::testing::TempDir;

struct Outcome {
  int exit_code;
  std::string output;
};

Outcome RunCli(const TempDir& dir, const std::string& args) {
  const auto log = dir / "cli_output.txt";
  const std::string cmd = std::string(MTVAUG_CLI_PATH) + " " + args + " > " +
                          log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  Outcome out{WIFEXITED(status) ? WEXITSTATUS(status) : -1, ReadFile(log)};
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const Outcome gen = RunCli(dir_, "gen-synthetic --out-dir " + (dir_ / "syn").string() +
                                         " --train-size 120 --test-size 60");
    ASSERT_EQ(gen.exit_code, 0) << gen.output;
  }

  std::string Data() const {
    const auto syn = dir_ / "syn";
    return " --train " + (syn / "train.tsv").string() + " --test " +
           (syn / "test.tsv").string() + " --lexicon " + (syn / "lexicon.tsv").string();
  }

  TempDir dir_;
};

TEST_F(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(RunCli(dir_, "--help").exit_code, 0);
  EXPECT_EQ(RunCli(dir_, "sweep --help").exit_code, 0);
  EXPECT_EQ(RunCli(dir_, "").exit_code, 2);
  EXPECT_EQ(RunCli(dir_, "frobnicate").exit_code, 2);
  EXPECT_EQ(RunCli(dir_, "train" + Data() + " --gamma-o 1.5").exit_code, 2);
  EXPECT_EQ(RunCli(dir_, "train" + Data() + " --operator swap").exit_code, 2);
  EXPECT_EQ(RunCli(dir_, "sweep" + Data() + " --out x --alphas 2").exit_code, 2);
}

TEST_F(CliTest, MissingLexiconIsAUsageError) {
  const auto syn = dir_ / "syn";
  const Outcome out = RunCli(dir_, "train --train " + (syn / "train.tsv").string() +
                                       " --test " + (syn / "test.tsv").string() +
                                       " --operator substitution --alpha 0.1");
  EXPECT_EQ(out.exit_code, 2);
  EXPECT_NE(out.output.find("MissingLexicon"), std::string::npos) << out.output;
}

TEST_F(CliTest, RuntimeErrorsExitOne) {
  const Outcome out = RunCli(dir_, "train --train /nonexistent.tsv --test /nonexistent.tsv");
  EXPECT_EQ(out.exit_code, 1);
  EXPECT_NE(out.output.find("IoError"), std::string::npos) << out.output;
  dir_.Write("bad.tsv", "pos\tfine\nno tab\n");
  EXPECT_EQ(RunCli(dir_, "train --train " + (dir_ / "bad.tsv").string() + " --test " +
                             (dir_ / "bad.tsv").string())
                .exit_code,
            1);
}

TEST_F(CliTest, TrainPrintsAccuracyAndSavesModel) {
  const Outcome out = RunCli(dir_, "train" + Data() +
                                       " --operator dropout --alpha 0.2 --gamma-o 0.5"
                                       " --epochs 3 --lr 1 --batch-size 8 --dim 4096"
                                       " --model-out " + (dir_ / "m.bin").string());
  ASSERT_EQ(out.exit_code, 0) << out.output;
  EXPECT_EQ(out.output.rfind("accuracy ", 0), 0u) << out.output;
  EXPECT_TRUE(std::filesystem::exists(dir_ / "m.bin"));
}

TEST_F(CliTest, AugmentWritesCopies) {
  const auto syn = dir_ / "syn";
  const Outcome out = RunCli(dir_, "augment --input " + (syn / "train.tsv").string() +
                                       " --output " + (dir_ / "aug.tsv").string() +
                                       " --lexicon " + (syn / "lexicon.tsv").string() +
                                       " --operator injection --alpha 0.2 --copies 2");
  ASSERT_EQ(out.exit_code, 0) << out.output;
  const std::string aug = ReadFile(dir_ / "aug.tsv");
  EXPECT_EQ(std::count(aug.begin(), aug.end(), '\n'), 240);
}

TEST_F(CliTest, SweepConfigResumeAndReport) {
  dir_.Write("cfg.json",
             R"({"alphas": [0.1, 0.3], "gammas": [0, 0.5], "operators": ["dropout"],)"
             R"( "seeds": [1, 2], "epochs": 99, "lr": 1.0, "batch-size": 8, "dim": 4096})");
  const std::string common =
      "sweep" + Data() + " --config " + (dir_ / "cfg.json").string() + " --epochs 3";
  const Outcome a = RunCli(dir_, common + " --out " + (dir_ / "a").string());
  ASSERT_EQ(a.exit_code, 0) << a.output;
  EXPECT_NE(a.output.find("cell 5/5 operator=dropout alpha=0.3 gamma_o=0.5"),
            std::string::npos)
      << a.output;
  const std::string fingerprint = ReadFile(dir_ / "a" / "sweep_config.json");
  EXPECT_NE(fingerprint.find("\"epochs\": 3"), std::string::npos) << fingerprint;

  // A rerun into the same directory resumes every cell.
  const Outcome again = RunCli(dir_, common + " --out " + (dir_ / "a").string());
  ASSERT_EQ(again.exit_code, 0) << again.output;
  EXPECT_NE(again.output.find("(resumed)"), std::string::npos);

  // Changed settings are refused.
  EXPECT_EQ(RunCli(dir_, common + " --lr 0.5 --out " + (dir_ / "a").string()).exit_code, 2);

  const Outcome report = RunCli(dir_, "report --runs " + (dir_ / "a" / "runs.csv").string() +
                                          " --out " + (dir_ / "r").string());
  ASSERT_EQ(report.exit_code, 0) << report.output;
  for (const char* f : {"summary.json", "curves.csv", "heatmap.csv"}) {
    EXPECT_EQ(ReadFile(dir_ / "a" / f), ReadFile(dir_ / "r" / f)) << f;
  }
}

TEST_F(CliTest, ReportWithoutBaselineFails) {
  dir_.Write("runs.csv",
             "operator,alpha,gamma_o,seed,accuracy,baseline_accuracy,boost_pp\n"
             "dropout,0.1,0,1,0.5,0.5,0\n");
  const Outcome out = RunCli(dir_, "report --runs " + (dir_ / "runs.csv").string() +
                                       " --out " + (dir_ / "r").string());
  EXPECT_EQ(out.exit_code, 1);
  EXPECT_NE(out.output.find("MissingBaseline"), std::string::npos) << out.output;
}

}  // namespace
}  // namespace mtvaug
