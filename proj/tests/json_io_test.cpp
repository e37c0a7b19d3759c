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

#include "mubsic/json_io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "mubsic/errors.hpp"

namespace mubsic {
namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("mubsic_io_" + name)).string();
}

TEST(JsonIo, OperatorRoundTrip) {
  ComplexMatrix m(2, 2);
  m << 0.1, Complex(0.2, -0.3), Complex(1e-17, 4), 1.0 / 3;
  EXPECT_EQ(read_operator_json(write_operator_json(m)), m);
  EXPECT_THROW(read_operator_json(R"({"dim":2,"entries":[[1,0]]})"), DimensionError);
  EXPECT_THROW(read_operator_json("not json"), IoError);
}

TEST(JsonIo, FiducialRoundTrip) {
  const Fiducial f = qutrit_fiducial();
  const Fiducial g = read_fiducial_json(write_fiducial_json(f), 3);
  EXPECT_EQ(g.source, FiducialSource::ClosedForm);
  EXPECT_LT((g.ket - f.ket).norm(), 1e-15);
  EXPECT_THROW(read_fiducial_json(write_fiducial_json(f), 5), DimensionError);
}

TEST(JsonIo, Ingest) {
  const std::string p = temp_path("ket.json");
  write_text_file(p, R"({"d":7,"ket":[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})");
  EXPECT_EQ(ingest_fiducial(p, 7).source, FiducialSource::Ingested);
  write_text_file(p, R"({"ket":[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})");
  EXPECT_THROW(ingest_fiducial(p, 7), DimensionError);
  write_text_file(p, R"({"ket":[[0,0],[0,0],[0,0]]})");
  EXPECT_THROW(ingest_fiducial(p, 3), InvalidInput);
  write_text_file(p, R"({"ket":[[1,0],[1,0],[0,0]]})");
  EXPECT_THROW(ingest_fiducial(p, 3), InvalidInput);  // norm off by more than 1e-6
  write_text_file(p, R"({"ket":[[1,0],[0,0],)");
  EXPECT_THROW(ingest_fiducial(p, 3), IoError);
  std::remove(p.c_str());
  EXPECT_THROW(ingest_fiducial(p, 3), IoError);
}

TEST(JsonIo, MubAndFrames) {
  const MubFamily m = build_mub(3);
  const MubFamily m2 = read_mub_json(write_mub_json(m));
  EXPECT_LE(verify_mub(m2), 1e-15);
  const PointFrame pf = point_frame_from_mub(m);
  const PointFrame pf2 = read_point_frame_json(write_point_frame_json(pf));
  EXPECT_EQ(pf2.beta(), pf.beta());
  for (int i = 0; i < 12; ++i)
    EXPECT_LT(max_abs(pf2.trace_one()[i].mat() - pf.trace_one()[i].mat()), 1e-15);
  const LineFrame lf = line_ops_from_points(pf, build_dapg(3));
  const LineFrame lf2 = read_line_frame_json(write_line_frame_json(lf));
  EXPECT_EQ(lf2.alpha(), lf.alpha());
  EXPECT_THROW(read_line_frame_json(write_point_frame_json(pf)), IoError);
}

TEST(JsonIo, SicRoundTrip) {
  const SicFamily s = generate_hw_sic(qubit_fiducial());
  const SicFamily t = read_sic_json(write_sic_json(s));
  EXPECT_EQ(t.d, 2);
  EXPECT_LE(verify_sic(t), 1e-12);
  for (int i = 0; i < 4; ++i) EXPECT_LT(max_abs(t.projectors[i].mat() - s.projectors[i].mat()), 1e-15);
}

TEST(Csv, SpectraRoundTripAndFormat) {
  const MuPomFamily m = extract_mu_pom(generate_hw_sic(qutrit_fiducial()), build_dapg(3));
  const std::string csv = write_spectra_csv(m.spectra);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "m,j,lambda_1,lambda_2,lambda_3");
  // rows ordered (j asc, m asc)
  EXPECT_EQ(csv.substr(csv.find('\n') + 1, 4), "0,0,");
  const SpectraTable t = read_spectra_csv(csv);
  for (std::size_t i = 0; i < t.spectra.size(); ++i)
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(t.spectra[i].values[k], m.spectra.spectra[i].values[k], 1e-11);
  EXPECT_THROW(read_spectra_csv("a,b\n"), IoError);
  EXPECT_THROW(read_spectra_csv("m,j,lambda_1,lambda_2,lambda_3\n0,0,1,x,0\n"), IoError);
  EXPECT_EQ(format_number(1.0 / 3), "0.333333333333");
}

TEST(JsonIo, GroupingRoundTrip) {
  ColumnGrouping g;
  g.groups = {{0, 4, 5}, {1, 2, 3}};
  g.spectra = {{0.5, 0.5}, {0.7, 0.3}};
  const ColumnGrouping h = read_grouping_json(write_grouping_json(g));
  EXPECT_EQ(h.groups, g.groups);
  EXPECT_EQ(h.spectra, g.spectra);
}

}  // namespace
}  // namespace mubsic
