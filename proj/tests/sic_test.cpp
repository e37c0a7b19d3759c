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

#include "mubsic/sic.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "mubsic/errors.hpp"
#include "mubsic/json_io.hpp"
#include "reference_spectra.hpp"

namespace mubsic {
namespace {

std::string data(const std::string& name) { return std::string(MUBSIC_DATA_DIR) + "/fiducials/" + name; }

TEST(Fiducial, CanonicalPhaseAndNorm) {
  ComplexVector k(3);
  k << Complex(0, 0), Complex(0, 2), Complex(1, 1);
  const Fiducial f = make_fiducial(k, FiducialSource::Searched);
  EXPECT_NEAR(f.ket.norm(), 1.0, 1e-15);
  EXPECT_EQ(f.ket(1).imag(), 0.0);
  EXPECT_GT(f.ket(1).real(), 0.0);
  EXPECT_THROW(make_fiducial(ComplexVector::Zero(3), FiducialSource::Searched), InvalidInput);
}

TEST(Sic, QubitFiducialProjector) {
  const Fiducial f = qubit_fiducial();
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  const ComplexMatrix expect =
      0.5 * (ComplexMatrix::Identity(2, 2) + (sx + sy + sz) / std::sqrt(3.0));
  EXPECT_LT(max_abs(f.ket * f.ket.adjoint() - expect), 1e-15);
}

TEST(Sic, QubitAndQutritFamilies) {
  for (const Fiducial& f : {qubit_fiducial(), qutrit_fiducial()}) {
    const SicFamily s = generate_hw_sic(f);
    ASSERT_EQ(static_cast<int>(s.projectors.size()), f.d * f.d);
    EXPECT_LE(verify_sic(s), 1e-12);
    EXPECT_LT(max_abs(s.at(0, 0).mat() - f.ket * f.ket.adjoint()), 1e-15);
    for (const auto& p : s.projectors) EXPECT_EQ(matrix_rank(p), 1);
  }
}

TEST(Sic, NegativeControls) {
  ComplexVector e0 = ComplexVector::Zero(3);
  e0(0) = 1.0;
  EXPECT_NEAR(verify_sic(generate_hw_sic(make_fiducial(e0, FiducialSource::Searched))), 0.75, 1e-14);

  // A small generic rotation moves overlaps linearly.  (The qutrit fiducial
  // sits on a continuous family, where the change is only quadratic.)
  const Fiducial f = ingest_fiducial(data("d5.json"), 5);
  ComplexVector k = f.ket;
  k(0) += Complex(0.0, 1e-3);
  k(2) += Complex(1e-3, 0.0);
  const double dev = verify_sic(generate_hw_sic(make_fiducial(k, FiducialSource::Searched)));
  EXPECT_GT(dev, 1e-4);
  EXPECT_LT(dev, 1e-2);
  EXPECT_THROW(extract_mu_pom(generate_hw_sic(make_fiducial(k, FiducialSource::Searched)),
                              build_dapg(5)),
               VerificationError);
}

TEST(Sic, WeylHeisenbergCovariance) {
  const Fiducial f = ingest_fiducial(data("d5.json"), 5);
  const SicFamily s = generate_hw_sic(f);
  const WeylPair wp = build_weyl_pair(5);
  for (int a2 = 0; a2 < 5; ++a2)
    for (int b2 = 0; b2 < 5; ++b2) {
      const ComplexMatrix u = displacement(wp, a2, b2);
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
          const HermitianOp moved = s.at(a, b).conjugated(u);
          EXPECT_LT(max_abs(moved.mat() - s.at((a + a2) % 5, (b + b2) % 5).mat()), 1e-10);
        }
    }
}

TEST(MuPom, QubitSpectra) {
  const MuPomFamily m = extract_mu_pom(generate_hw_sic(qubit_fiducial()), build_dapg(2));
  for (const auto& s : m.spectra.spectra) {
    EXPECT_NEAR(s.values[0], (3 + std::sqrt(3.0)) / 6, 1e-12);
    EXPECT_NEAR(s.values[1], (3 - std::sqrt(3.0)) / 6, 1e-12);
  }
  EXPECT_LE(verify_mu_pom(m), 1e-10);
}

TEST(MuPom, QutritSpectra) {
  const MuPomFamily m = extract_mu_pom(generate_hw_sic(qutrit_fiducial()), build_dapg(3));
  for (const auto& s : m.spectra.spectra) {
    EXPECT_NEAR(s.values[0], 0.5, 1e-12);
    EXPECT_NEAR(s.values[1], 0.5, 1e-12);
    EXPECT_NEAR(s.values[2], 0.0, 1e-12);
  }
  EXPECT_LE(verify_mu_pom(m), 1e-10);
}

TEST(MuPom, ExplicitSumsMatchGeometry) {
  // tau_m^(d) = (1/d) sum_k lambda_{k,m};  tau_m^(j) = (1/d) sum_k lambda_{m-jk,k}
  const int d = 5;
  const SicFamily s = generate_hw_sic(ingest_fiducial(data("d5.json"), d));
  const MuPomFamily m = extract_mu_pom(s, build_dapg(d), 1e-6);
  for (int mm = 0; mm < d; ++mm) {
    HermitianOp t = HermitianOp::zero(d);
    for (int k = 0; k < d; ++k) t += s.at(k, mm);
    EXPECT_LT(max_abs(m.at(mm, d).mat() - t.mat() / d), 1e-14);
    for (int j = 0; j < d; ++j) {
      HermitianOp u = HermitianOp::zero(d);
      for (int k = 0; k < d; ++k) u += s.at(mod(mm - j * k, d), k);
      EXPECT_LT(max_abs(m.at(mm, j).mat() - u.mat() / d), 1e-14);
    }
  }
}

struct Ingested {
  const char* file;
  int d;
  const testing::ReferenceTable& (*table)();
};

class IngestedTest : public ::testing::TestWithParam<Ingested> {};

TEST_P(IngestedTest, ColumnConstantAndGrouped) {
  const auto& p = GetParam();
  const Fiducial f = ingest_fiducial(data(p.file), p.d);
  EXPECT_EQ(f.source, FiducialSource::Ingested);
  const SicFamily s = generate_hw_sic(f);
  EXPECT_LE(verify_sic(s), 1e-6);
  const MuPomFamily m = extract_mu_pom(s, build_dapg(p.d), 1e-6);
  EXPECT_LE(verify_mu_pom(m), 1e-6);
  const ColumnConstancyReport r = assert_column_constant(m.spectra, 1e-8);
  EXPECT_TRUE(r.ok()) << r.max_spread;
  const ColumnGrouping g = group_columns_by_spectrum(m.spectra, 1e-6);
  const GroupingMatch match = match_grouping(g, p.table().grouping(), 1e-4);
  EXPECT_TRUE(match.sizes_match);
  EXPECT_TRUE(match.spectra_match) << match.max_deviation;
}

INSTANTIATE_TEST_SUITE_P(Published, IngestedTest,
                         ::testing::Values(Ingested{"d5.json", 5, testing::table_d5},
                                           Ingested{"d7a.json", 7, testing::table_7a},
                                           Ingested{"d11a.json", 11, testing::table_11a}));

TEST(Grouping, SortedAndPartitioned) {
  SpectraTable t;
  t.d = 3;
  const std::vector<std::vector<double>> col = {{0.5, 0.3, 0.2}, {0.6, 0.3, 0.1}, {0.5, 0.3, 0.2},
                                                {0.6, 0.3, 0.1}};
  for (int j = 0; j <= 3; ++j)
    for (int m = 0; m < 3; ++m) t.spectra.push_back(Spectrum{col[j]});
  const ColumnGrouping g = group_columns_by_spectrum(t, 1e-9);
  EXPECT_EQ(g.groups, (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
  EXPECT_TRUE(assert_column_constant(t).ok());
  t.spectra[1].values[0] = 0.51;
  EXPECT_FALSE(assert_column_constant(t).ok());
}

TEST(Grouping, MatchUpToRelabeling) {
  const ColumnGrouping ref = testing::table_d5().grouping();
  ColumnGrouping swapped = ref;
  swapped.groups = {{0, 1, 2}, {3, 4, 5}};
  const GroupingMatch m = match_grouping(swapped, ref, 1e-12);
  EXPECT_TRUE(m.ok());
  EXPECT_FALSE(m.labels_match);
  ColumnGrouping wrong = ref;
  wrong.groups = {{0, 4}, {1, 2, 3, 5}};
  EXPECT_FALSE(match_grouping(wrong, ref, 1e-4).sizes_match);
  ColumnGrouping off = ref;
  off.spectra[0][0] += 1e-3;
  EXPECT_FALSE(match_grouping(off, ref, 1e-4).spectra_match);
}

}  // namespace
}  // namespace mubsic
