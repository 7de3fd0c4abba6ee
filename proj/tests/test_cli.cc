/*
 * Copyright 2026 The Orient Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// End-to-end checks of the installed command-line surface. Each case shells
// out to the real binary, so these cover argument parsing, exit codes and
// stream handling on top of the library behavior.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  const std::string command = "printf '%s' '" + stdin_text + "' | " ORIENT_CLI_PATH " " +
                              args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  EXPECT_NE(nullptr, pipe);
  char buffer[512];
  while (fgets(buffer, sizeof(buffer), pipe) != nullptr) {
    result.output += buffer;
  }
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string data_path(const std::string& name) {
  return std::string(ORIENT_TEST_DATA_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + "orient_cli_" + name;
}

std::vector<double> parse_lines(const std::string& text) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) values.push_back(std::strtod(line.c_str(), nullptr));
  }
  return values;
}

TEST(Cli, DecodeUnnormalizedSingleBin) {
  const CliResult result = run_cli("decode --scheme single_bin", "10,10\n");
  EXPECT_EQ(0, result.exit_code);
  EXPECT_EQ("0.785398163397\n", result.output);
}

TEST(Cli, EncodeDecodePipeIsIdentity) {
  const char* schemes[] = {
      "scalar_global", "scalar_local", "single_bin",
      "multibin:bins=2,overlap=0.1", "conf:bins=2", "conf:bins=4",
      "voting:bins=4", "tricosine",
  };
  std::string angles;
  std::vector<double> expected;
  for (int i = 0; i < 25; ++i) {
    const double theta = -3.1 + i * 0.25;
    expected.push_back(theta);
    angles += std::to_string(theta) + "\n";
  }
  for (const char* scheme : schemes) {
    const std::string command = std::string("encode --scheme ") + scheme + " | " +
                                ORIENT_CLI_PATH + " decode --scheme " + scheme;
    const CliResult result = run_cli(command, angles);
    ASSERT_EQ(0, result.exit_code) << scheme;
    const std::vector<double> decoded = parse_lines(result.output);
    ASSERT_EQ(expected.size(), decoded.size()) << scheme;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_NEAR(expected[i], decoded[i], 1e-9) << scheme;
    }
  }
}

TEST(Cli, EvalIdenticalFilesScoresOne) {
  const CliResult result =
      run_cli("eval --pred " + data_path("kitti_valid.txt") + " --gt " +
              data_path("kitti_valid.txt"));
  EXPECT_EQ(0, result.exit_code);
  EXPECT_EQ("1.000000\n", result.output);
}

TEST(Cli, EvalClassFilterAndAlphaField) {
  const CliResult result =
      run_cli("eval --pred " + data_path("kitti_mixed.txt") + " --gt " +
              data_path("kitti_mixed.txt") + " --class Car --field alpha");
  EXPECT_EQ(0, result.exit_code);
  EXPECT_EQ("1.000000\n", result.output);
}

TEST(Cli, EvalCountMismatchIsDataError) {
  const CliResult result =
      run_cli("eval --pred " + data_path("kitti_valid.txt") + " --gt " +
              data_path("kitti_mixed.txt"));
  EXPECT_EQ(2, result.exit_code);
}

TEST(Cli, ConvertRoundTripRestoresFile) {
  const std::string roty_file = temp_path("roty.txt");
  const std::string back_file = temp_path("back.txt");
  ASSERT_EQ(0, run_cli("convert --from alpha --to roty --input " +
                       data_path("kitti_valid.txt") + " --output " + roty_file)
                   .exit_code);
  ASSERT_EQ(0, run_cli("convert --from roty --to alpha --input " + roty_file +
                       " --output " + back_file)
                   .exit_code);

  std::ifstream original(data_path("kitti_valid.txt"));
  std::ifstream restored(back_file);
  std::string original_line;
  std::string restored_line;
  int rows = 0;
  while (std::getline(original, original_line) && std::getline(restored, restored_line)) {
    ++rows;
    std::istringstream a(original_line);
    std::istringstream b(restored_line);
    std::string tok_a;
    std::string tok_b;
    int column = 0;
    while (a >> tok_a && b >> tok_b) {
      ++column;
      if (column == 1) {
        EXPECT_EQ(tok_a, tok_b);
      } else {
        EXPECT_NEAR(std::strtod(tok_a.c_str(), nullptr),
                    std::strtod(tok_b.c_str(), nullptr), 0.011)
            << "row " << rows << " column " << column;
      }
    }
  }
  EXPECT_EQ(7, rows);
  std::remove(roty_file.c_str());
  std::remove(back_file.c_str());
}

TEST(Cli, LandscapeFivePointsCarriesAntipodalMaximum) {
  const CliResult result =
      run_cli("landscape --scheme single_bin --loss angular --points 5");
  EXPECT_EQ(0, result.exit_code);
  std::istringstream in(result.output);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ("theta_pred,loss", header);
  std::string first_row;
  std::getline(in, first_row);
  EXPECT_NE(first_row.find(",2"), std::string::npos);  // loss 2 at -pi
  int rows = 1;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  EXPECT_EQ(5, rows);
}

TEST(Cli, FitEmitsFullTrajectory) {
  const CliResult result = run_cli(
      "fit --scheme single_bin --loss l2 --init 2.0 --gt 0 --steps 50 --lr 0.1");
  EXPECT_EQ(0, result.exit_code);
  EXPECT_EQ(0u, result.output.find("step,loss,decoded_angle\n"));
  EXPECT_EQ(52, std::count(result.output.begin(), result.output.end(), '\n'));
}

TEST(Cli, SimulateIsDeterministicAcrossInvocations) {
  const std::string args =
      "simulate --scheme tricosine --sigma 0.1 --seed 9 --count 3000";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  EXPECT_EQ(0, a.exit_code);
  EXPECT_EQ(a.output, b.output);
  const CliResult zero =
      run_cli("simulate --scheme tricosine --sigma 0 --seed 9 --count 100");
  EXPECT_EQ("1.000000\n", zero.output);
}

TEST(Cli, CheckPassesCleanFileAndFlagsCorruptedOne) {
  const CliResult clean =
      run_cli("check --labels " + data_path("kitti_valid.txt") + " --tol 0.02");
  EXPECT_EQ(0, clean.exit_code);
  EXPECT_NE(clean.output.find("7 checked, 7 ok, 0 failed"), std::string::npos);

  const CliResult corrupt =
      run_cli("check --labels " + data_path("kitti_corrupt.txt") + " --tol 0.02");
  EXPECT_EQ(2, corrupt.exit_code);
  EXPECT_NE(corrupt.output.find("FAIL"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(1, run_cli("").exit_code);
  EXPECT_EQ(1, run_cli("transmogrify").exit_code);
  EXPECT_EQ(1, run_cli("encode --scheme octobin", "0\n").exit_code);
  EXPECT_EQ(1, run_cli("encode --scheme single_bin --bogus-flag", "0\n").exit_code);
  EXPECT_EQ(1, run_cli("landscape --scheme tricosine --loss angular").exit_code);
  EXPECT_EQ(1, run_cli("fit --scheme single_bin --loss l2 --init 1 --gt 0 --lr 7")
                   .exit_code);
  EXPECT_EQ(1, run_cli("convert --from alpha --to alpha --input " +
                       data_path("kitti_valid.txt"))
                   .exit_code);
}

TEST(Cli, DataErrorsExitTwo) {
  EXPECT_EQ(2, run_cli("check --labels /no/such/file.txt").exit_code);
  EXPECT_EQ(2, run_cli("decode --scheme single_bin", "1,2,3\n").exit_code);
  EXPECT_EQ(2, run_cli("decode --scheme single_bin", "abc,1\n").exit_code);
}

TEST(Cli, DegenerateInputExitsThree) {
  EXPECT_EQ(3, run_cli("decode --scheme single_bin", "0,0\n").exit_code);
}

}  // namespace
