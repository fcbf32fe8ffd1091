// Copyright 2026 The convwam Authors
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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "convwam/cli.hpp"
#include "support.hpp"

using namespace convwam;
using namespace convwam::testsupport;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &body) {
  const auto path = std::filesystem::temp_directory_path() / ("convwam-test-" + name);
  std::ofstream(path) << body;
  return path.string();
}

TEST(Cli, ConvIpwamText) {
  const CliResult r = cli_run({"conv", "ipwam", fixture("example1.cc")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "states: 00 10 01 11\n"
            "00: x_I*x_P ; y_I*y_P ; 0 ; 0\n"
            "10: 0 ; 0 ; x_I*y_P ; y_I*x_P\n"
            "01: y_I*y_P ; x_I*x_P ; 0 ; 0\n"
            "11: 0 ; 0 ; y_I*x_P ; x_I*y_P\n");
}

TEST(Cli, CollapseToY) {
  const CliResult r = cli_run({"--collapse", "y", "conv", "iowam", fixture("example1-nonsys.cc")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "states: 00 10 01 11\n"
            "00: 1 ; y^3 ; 0 ; 0\n"
            "10: 0 ; 0 ; y ; y^2\n"
            "01: y^2 ; y ; 0 ; 0\n"
            "11: 0 ; 0 ; y ; y^2\n");
}

TEST(Cli, OptionsAfterSubcommand) {
  const CliResult a = cli_run({"conv", "total", fixture("example1.cc"), "--dmax", "3", "--collapse", "y"});
  const CliResult b = cli_run({"--dmax", "3", "--collapse", "y", "conv", "total", fixture("example1.cc")});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, StructuredMatrixRoundTrip) {
  const CliResult r = cli_run({"--format", "structured", "quantum", "wam", fixture("u1.qcc")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_matrix_structured(r.out), quantum_wam(load_spec("u1.qcc")));
}

TEST(Cli, StructuredPolyRoundTrip) {
  const CliResult r = cli_run({"--format", "structured", "block", "hwgf", fixture("hamming7.blk")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_poly_structured(r.out), hwgf(load_block("hamming7.blk")));
  EXPECT_THROW(parse_poly_structured("{\"terms\": [{\"coeff\": 1, \"exponents\": {\"w\": 1}}]}"), InputError);
  EXPECT_THROW(parse_matrix_structured("[1, 2"), InputError);
}

TEST(Cli, DotOutput) {
  const CliResult r = cli_run({"--format", "dot", "quantum", "sd", fixture("u1.qcc")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"X\" -> \"Z\" [label=\"X,XZ\"]"), std::string::npos);
  const CliResult bad = cli_run({"--format", "dot", "conv", "wam", fixture("example1.cc")});
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, VerifyAllPasses) {
  for (const char *name : {"example1.cc", "u2-ea.qcc", "hamming7.blk"}) {
    const CliResult r = cli_run({"verify", "all", fixture(name)});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find(" 0 failed"), std::string::npos);
  }
}

TEST(Cli, InputErrorsExitTwo) {
  const CliResult missing = cli_run({"conv", "wam", "/nonexistent/file.cc"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("error"), std::string::npos);
  const std::string bad = temp_file("bad.cc", "q 2 1\nn 2\nk 1\nm 1\nT\n1 x 0\n0 1 1\n");
  const CliResult r = cli_run({"conv", "wam", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 6"), std::string::npos) << r.err;
  EXPECT_EQ(cli_run({"conv", "nonsense", fixture("example1.cc")}).code, 2);
  EXPECT_EQ(cli_run({"--collapse", "z", "conv", "wam", fixture("example1.cc")}).code, 2);
  EXPECT_EQ(cli_run({}).code, 2);
}

TEST(Cli, BudgetExceededIsReported) {
  const CliResult r = cli_run({"--budget", "3", "conv", "wam", fixture("example1.cc")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, CheckSeedFlagsNonClifford) {
  const std::string path = temp_file("bad.qcc",
                                     "n 1\nk 0\nc 0\nm 0\nIM:\nIL:\nIA: 1\nIE:\nIMout:\nIP: 1\nZ1 -> X\nX1 -> X\n");
  const CliResult r = cli_run({"quantum", "check-seed", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("invalid"), std::string::npos);
  EXPECT_EQ(cli_run({"quantum", "check-seed", fixture("u1.qcc")}).out, "valid\n");
}

TEST(Cli, DualSpecAndCheckDual) {
  const CliResult spec = cli_run({"quantum", "dual-spec", fixture("u2-ea.qcc")});
  ASSERT_EQ(spec.code, 0);
  const EaqccSpec dual = parse_eaqcc(spec.out);
  EXPECT_EQ(quantum_wam(dual), quantum_wam(dual_spec(load_spec("u2-ea.qcc"))));
  const CliResult cd = cli_run({"conv", "check-dual", fixture("example1.cc")});
  EXPECT_EQ(cd.code, 0);
  EXPECT_NE(cd.out.find("PASS orthogonality"), std::string::npos);
}

TEST(Cli, FreeDistance) {
  const CliResult r = cli_run({"conv", "dfree", fixture("example1.cc")});
  EXPECT_EQ(r.code, 0);
  const auto search = oracle::min_fundamental_weight(load_conv("example1.cc"), 8);
  ASSERT_TRUE(search);
  EXPECT_EQ(r.out, "d_free: " + std::to_string(*search) + "\n");
}

TEST(Cli, DetectKind) {
  EXPECT_EQ(detect_kind(read_file(fixture("example1.cc"))), FileKind::conv);
  EXPECT_EQ(detect_kind(read_file(fixture("u1.qcc"))), FileKind::quantum);
  EXPECT_EQ(detect_kind(read_file(fixture("hamming7.blk"))), FileKind::block);
}

}  // namespace
