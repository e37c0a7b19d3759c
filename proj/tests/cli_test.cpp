// Copyright 2026 The mubsic Authors
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

#include "mubsic/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "mubsic/json_io.hpp"

namespace mubsic {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mubsic_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    unsetenv("MUBSIC_TOL");
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& n) const { return (dir_ / n).string(); }
  fs::path dir_;
};

TEST_F(CliTest, PlaneVerify) {
  const Result r = run({"plane", "verify", "--d", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "12 points, 9 lines, all axioms pass\n");
}

TEST_F(CliTest, CompositeDimension) {
  const Result r = run({"mub", "verify", "--d", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("d must be prime"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"mub", "verify"}).code, 2);
  EXPECT_EQ(run({"sic", "verify", "--in", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"plane", "build", "--d", "3", "--export", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, MubBuildAndVerify) {
  const Result r = run({"mub", "build", "--d", "5", "--out", path("m.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(run({"mub", "verify", "--d", "5", "--in", path("m.json")}).code, 0);
}

TEST_F(CliTest, PlaneExport) {
  const Result dot = run({"plane", "build", "--d", "3", "--kind", "dapg", "--export", "dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("graph", 0), 0u);
  EXPECT_EQ(run({"plane", "build", "--d", "3", "--kind", "dapg", "--export", "json", "--out",
                 path("g.json")})
                .code,
            0);
  EXPECT_EQ(run({"plane", "verify", "--d", "3", "--in", path("g.json")}).code, 0);
  EXPECT_EQ(run({"plane", "build", "--d", "3", "--kind", "apg"}).code, 0);
}

TEST_F(CliTest, FramePipeline) {
  EXPECT_EQ(run({"frame", "from-hg", "--d", "5", "--out", path("p.json")}).code, 0);
  EXPECT_EQ(run({"frame", "bridge", "--points", path("p.json"), "--out", path("l.json")}).code, 0);
  const Result v = run({"frame", "verify", "--points", path("p.json"), "--lines", path("l.json")});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  EXPECT_EQ(run({"frame", "from-mub", "--d", "3", "--out", path("pm.json")}).code, 0);
  // frames of different dimension
  EXPECT_EQ(run({"frame", "bridge", "--points", path("pm.json"), "--out", path("lm.json")}).code, 0);
  EXPECT_EQ(run({"frame", "verify", "--points", path("p.json"), "--lines", path("lm.json")}).code, 2);
}

TEST_F(CliTest, SicPipeline) {
  EXPECT_EQ(run({"sic", "generate", "--builtin", "qutrit", "--out", path("s.json")}).code, 0);
  EXPECT_EQ(run({"sic", "verify", "--in", path("s.json")}).code, 0);
  const Result sp = run({"sic", "spectra", "--in", path("s.json"), "--geom", "auto", "--out", path("t.csv")});
  EXPECT_EQ(sp.code, 0) << sp.err;
  const Result g = run({"sic", "group", "--in", path("t.csv"), "--tol", "1e-8"});
  EXPECT_EQ(g.code, 0);
  const auto j = nlohmann::json::parse(g.out);
  EXPECT_EQ(j["groups"].size(), 1u);

  const std::string fid = std::string(MUBSIC_DATA_DIR) + "/fiducials/d5.json";
  EXPECT_EQ(run({"sic", "verify", "--in", fid}).code, 1);  // published data ~1e-7 off
  EXPECT_EQ(run({"sic", "verify", "--in", fid, "--tol", "1e-6"}).code, 0);
  EXPECT_EQ(run({"sic", "spectra", "--in", fid, "--tol", "1e-6", "--out", path("t5.csv")}).code, 0);
  const auto g5 = nlohmann::json::parse(run({"sic", "group", "--in", path("t5.csv"), "--tol", "1e-6"}).out);
  EXPECT_EQ(g5["groups"].size(), 2u);
}

TEST_F(CliTest, EnvironmentTolerance) {
  const std::string fid = std::string(MUBSIC_DATA_DIR) + "/fiducials/d5.json";
  setenv("MUBSIC_TOL", "1e-6", 1);
  EXPECT_EQ(run({"sic", "verify", "--in", fid}).code, 0);
  setenv("MUBSIC_TOL", "abc", 1);
  EXPECT_EQ(run({"sic", "verify", "--in", fid}).code, 2);
  unsetenv("MUBSIC_TOL");
}

TEST_F(CliTest, NegativeControlFiducial) {
  write_text_file(path("e0.json"), R"({"d":3,"ket":[[1,0],[0,0],[0,0]]})");
  EXPECT_EQ(run({"sic", "generate", "--fiducial", path("e0.json")}).code, 1);
  EXPECT_EQ(run({"sic", "spectra", "--in", path("e0.json")}).code, 1);
}

TEST_F(CliTest, SearchIsReproducible) {
  const Result a = run({"sic", "search", "--d", "2", "--seed", "1", "--restarts", "10", "--out", path("a.json")});
  EXPECT_EQ(a.code, 0) << a.out;
  const Result b = run({"sic", "search", "--d", "2", "--seed", "1", "--restarts", "10", "--out", path("b.json")});
  EXPECT_EQ(read_text_file(path("a.json")), read_text_file(path("b.json")));
  const Fiducial f = read_fiducial_json(read_text_file(path("a.json")), 2);
  EXPECT_EQ(f.source, FiducialSource::Searched);
  EXPECT_EQ(run({"sic", "verify", "--in", path("a.json")}).code, 0);
}

TEST_F(CliTest, SolveProb) {
  const Result r = run({"sic", "solve-prob", "--d", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.788675134595"), std::string::npos);
  EXPECT_EQ(run({"sic", "solve-prob", "--d", "3"}).code, 0);
}

TEST_F(CliTest, Quasiprob) {
  EXPECT_EQ(run({"frame", "from-mub", "--d", "3", "--out", path("p.json")}).code, 0);
  ComplexMatrix rho = ComplexMatrix::Zero(3, 3);
  rho(0, 0) = 0.5, rho(1, 1) = 0.5;
  write_text_file(path("rho.json"), write_operator_json(rho));
  const Result r = run({"quasiprob", "--rho", path("rho.json"), "--points", path("p.json"), "--out", path("q.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(read_text_file(path("q.json")));
  double total = 0.0;
  for (double p : j["line_probabilities"]) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

}  // namespace
}  // namespace mubsic
