// Copyright 2026 The olsc Authors
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

// Runs the olsc binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(OLSC_CLI_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(OLSC_TEST_DATA_DIR) + "/" + name;
}

bool has(const Result& r, const std::string& needle) {
  return r.out.find(needle) != std::string::npos;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("olsc_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Cli, CompileChainAdder) {
  const Result r = run("compile fulladder4");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "pulses: 8\n"));
  EXPECT_TRUE(has(r, "provenance: ols\n"));
  EXPECT_TRUE(has(r, "optimal_labelings: 645120\n"));
  EXPECT_TRUE(has(r, "verify: PASS\n"));
  EXPECT_TRUE(has(r, "S5={|0100>,|0110>,|0101>,|0111>}"));
}

TEST(Cli, CompileFromFileMatchesBuiltin) {
  const Result a = run("compile fulladder4 -l cl");
  const Result b = run("compile " + data("fulladder.tt") + " -l cl");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(b.code, 0);
  EXPECT_TRUE(has(a, "pulses: 12\n"));
  // Identical apart from the operation line.
  EXPECT_EQ(a.out.substr(a.out.find('\n')), b.out.substr(b.out.find('\n')));
}

TEST(Cli, OutputIsDeterministic) {
  const std::string args = "compile fulladder4 swap:2,4 -t hypercube";
  const Result a = run(args);
  const Result b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CompileThenVerifyRoundTrip) {
  const fs::path dir = scratch_dir("roundtrip");
  const std::string prefix = (dir / "fa").string();
  const Result c = run("compile fulladder4 -t hypercube -l cl -o " + prefix);
  ASSERT_EQ(c.code, 0) << c.out;
  EXPECT_TRUE(has(c, "rounds: 2\n"));
  EXPECT_EQ(slurp(prefix + ".report"), c.out);
  const Result v = run("verify fulladder4 -t hypercube --program " + prefix + ".pulses --labels " +
                    prefix + ".labels");
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_TRUE(has(v, "pulses: 8\n"));
  EXPECT_TRUE(has(v, "verdict: PASS"));
  fs::remove_all(dir);
}

TEST(Cli, VerifyFailureExitsFour) {
  const Result v = run("verify " + data("s5_cycle.tt") + " --program " +
                    data("s5_chain_missing.pulses") + " --labels " + data("s5_chain.labels"));
  EXPECT_EQ(v.code, 4) << v.out;
  EXPECT_TRUE(has(v, "verdict: FAIL"));
  const Result ok = run("verify " + data("s5_cycle.tt") + " --program " +
                     data("s5_chain.pulses") + " --labels " + data("s5_chain.labels"));
  EXPECT_EQ(ok.code, 0) << ok.out;
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("compile").code, 1);
  EXPECT_EQ(run("compile fulladder4 -t ring").code, 1);
  EXPECT_EQ(run("compile fulladder4 -l gray -t hypercube").code, 1);
  EXPECT_EQ(run("compile fulladder4 -l pairswap").code, 1);
  EXPECT_EQ(run("compile fulladder4 --swap 0100:0111").code, 1);
  EXPECT_EQ(run("compile nosuchgate").code, 1);
}

TEST(Cli, ParseErrorsExitTwo) {
  const Result r = run("compile " + data("not_reversible.tt"));
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r, "line 3"));
  EXPECT_EQ(run("compile " + data("bad_width.tt")).code, 2);
  EXPECT_EQ(run("verify fulladder4 -t hypercube --program " + data("bad_edge.pulses") +
                " --labels " + data("hypercube_cl.labels"))
                .code,
            2);
}

TEST(Cli, DepthCapExitsThree) {
  const Result r = run("compile fulladder4 swap:2,4 -t hypercube -l cl --depth-cap 5");
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_TRUE(has(r, "maximal sets"));
}

TEST(Cli, CompareChain) {
  const Result r = run("compare fulladder4 swap:2,4");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "ols: 12\n"));
  EXPECT_TRUE(has(r, "cl: 24\n"));
  EXPECT_TRUE(has(r, "gray: 26\n"));
  EXPECT_TRUE(has(r, "# scheme  pulses  rounds  provenance"));
}

TEST(Cli, CompareHypercubeHasNoGrayRows) {
  const Result r = run("compare fulladder4 -t hypercube");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "ols: 8\n"));
  EXPECT_TRUE(has(r, "cl: 8\n"));
  EXPECT_FALSE(has(r, "gray"));
}

TEST(Cli, SpectrumWithExplicitSwaps) {
  const Result r = run("spectrum fulladder4 -t hypercube -l pairswap --swap 0100:0111 "
                    "--swap 1000:1011 --ascii");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "## equilibrium"));
  EXPECT_TRUE(has(r, "## final"));
  EXPECT_TRUE(has(r, "-2"));
  const Result eq = run("spectrum -n 2 -t hypercube -l cl");
  EXPECT_EQ(eq.code, 0) << eq.out;
}

TEST(Cli, EnumerateCounts) {
  const Result r = run("enumerate fulladder4 --limit 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "expected: 645120\n"));
  EXPECT_TRUE(has(r, "count: 3\n"));
  const Result all = run("enumerate swap:1,2 -n 2 --limit 0 --count");
  EXPECT_EQ(all.code, 0) << all.out;
  EXPECT_TRUE(has(all, "count: 12\n"));
  EXPECT_EQ(run("enumerate fulladder4 -t hypercube").code, 1);
}

TEST(Cli, CheckRuns) {
  const Result r = run("check --count 20 --seed 3");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "failures: 0\n"));
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(run("--help").code, 0);
  const Result v = run("--version");
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(has(v, "1.0.0"));
}

}  // namespace
