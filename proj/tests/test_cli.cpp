/* Copyright 2026 The pump Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Runs the pump executable as a child process and checks exit codes, stream
// contents and output files.

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "pump_cli_tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path err_file = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string("\"") + PUMP_CLI_PATH + "\" " + args + " 2>\"" +
                          err_file.string() + "\"";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_file);
  return r;
}

std::string fixture(const std::string& name) {
  return std::string("\"") + PUMP_FIXTURE_DIR + "/" + name + "\"";
}

TEST(Cli, AnalyzeWritesJsonAndCsv) {
  const fs::path out = scratch_dir() / "report.json";
  const fs::path csv = scratch_dir() / "report.csv";
  fs::remove(out);
  fs::remove(csv);
  const RunResult r = run("analyze --config " + fixture("flux_loop.json") + " --out \"" +
                          out.string() + "\" --csv \"" + csv.string() + "\"");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_NEAR(j["cycle"]["Q"][0].get<double>(), -1.0, 1e-10);
  EXPECT_EQ(j["cycle"]["winding"][1], 1);
  EXPECT_EQ(j["instants"].size(), 256u);
  EXPECT_NE(r.err.find("warning: adiabaticity"), std::string::npos);
  EXPECT_EQ(slurp(csv).rfind("t,Qdot_1,Qdot_2,D_1,D_2,", 0), 0u);
}

TEST(Cli, AnalyzeIsByteDeterministic) {
  const fs::path a = scratch_dir() / "a.json";
  const fs::path b = scratch_dir() / "b.json";
  for (const char* f : {"flux_loop.json", "perturbed.json"}) {
    ASSERT_EQ(run("analyze --config " + fixture(f) + " --out \"" + a.string() + "\"").exit_code, 0);
    ASSERT_EQ(run("analyze --config " + fixture(f) + " --out \"" + b.string() + "\"").exit_code, 0);
    EXPECT_EQ(slurp(a), slurp(b)) << f;
  }
}

TEST(Cli, ConfigErrorsExitOne) {
  const fs::path out = scratch_dir() / "unused.json";
  const std::pair<const char*, const char*> cases[] = {
      {"bad_samples.json", "cycle.samples"},
      {"mu_outside_window.json", "energy.mu"},
      {"missing_param.json", "delta"},
      {"unknown_key.json", "cycle.scheme"},
      {"malformed.json", "malformed JSON"},
  };
  for (const auto& [file, needle] : cases) {
    const RunResult r = run("analyze --config " + fixture(file) + " --out \"" + out.string() + "\"");
    EXPECT_EQ(r.exit_code, 1) << file;
    EXPECT_NE(r.err.find(needle), std::string::npos) << file << ": " << r.err;
  }
}

TEST(Cli, NumericalFailuresExitTwo) {
  const fs::path out = scratch_dir() / "unused.json";
  for (const char* file : {"under_resolved.json", "tight_unitarity.json"}) {
    const RunResult r = run("analyze --config " + fixture(file) + " --out \"" + out.string() + "\"");
    EXPECT_EQ(r.exit_code, 2) << file << ": " << r.err;
  }
}

TEST(Cli, IoErrorsExitThree) {
  RunResult r = run("analyze --config " + fixture("flux_loop.json") +
                    " --out /nonexistent-pump-dir/report.json");
  EXPECT_EQ(r.exit_code, 3) << r.err;
  r = run("analyze --config /nonexistent-pump-dir/config.json --out \"" +
          (scratch_dir() / "x.json").string() + "\"");
  EXPECT_EQ(r.exit_code, 3) << r.err;
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("").exit_code, 1);
  EXPECT_EQ(run("frobnicate").exit_code, 1);
  EXPECT_EQ(run("analyze --config " + fixture("flux_loop.json")).exit_code, 1);
  EXPECT_EQ(run("bathtub --dispersion cubic").exit_code, 1);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST(Cli, InstantPrintsOneObservationSet) {
  RunResult r = run("instant --config " + fixture("flux_loop.json") + " --t 0.25");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["t"].get<double>(), 0.25);
  EXPECT_NEAR(j["Qdot"][1].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["D"][0].get<double>(), 3.141592653589793, 1e-11);

  r = run("instant --config " + fixture("flux_loop.json") + " --t 1.0");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("(t)"), std::string::npos) << r.err;
}

TEST(Cli, BathtubSummary) {
  RunResult r = run("bathtub --dispersion linear --kmax 2 --nk 1024 --mu 1 --trials 200");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const double quarter = 1.0 / (4.0 * 3.141592653589793);
  EXPECT_NEAR(j["greedy_Edot"].get<double>(), quarter, 5.0 / 1024.0);
  EXPECT_NEAR(j["analytic_Edot"].get<double>(), quarter, 1e-16);
  EXPECT_EQ(j["violations"], 0);

  r = run("bathtub --dispersion quadratic --nk 512 --trials 50 --seed 3");
  EXPECT_EQ(r.exit_code, 0) << r.err;
}

TEST(Cli, BathtubRejectsBadGrid) {
  RunResult r = run("bathtub --nk 0");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("nk"), std::string::npos) << r.err;
  EXPECT_EQ(run("bathtub --mu 5").exit_code, 1);
  EXPECT_EQ(run("bathtub --kmax -1").exit_code, 1);
}

TEST(Cli, ModelsListsBuiltins) {
  const RunResult r = run("models");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[3]["name"], "random-smooth-path");
}

}  // namespace
