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

#ifndef MUBSIC_SIC_HPP
#define MUBSIC_SIC_HPP

#include <string>
#include <vector>

#include "mubsic/finite_plane.hpp"
#include "mubsic/matrix_core.hpp"
#include "mubsic/weyl_heisenberg.hpp"

namespace mubsic {

enum class FiducialSource { ClosedForm, Searched, Ingested };

const char* to_string(FiducialSource s);

/// Unit ket whose Weyl-Heisenberg orbit is (meant to be) a SIC.
struct Fiducial {
  int d = 0;
  ComplexVector ket;
  FiducialSource source = FiducialSource::ClosedForm;
};

/// Normalizes `ket` and rotates the global phase so that the first entry with
/// modulus above 1e-12 is real and non-negative.  Throws on a zero vector.
Fiducial make_fiducial(ComplexVector ket, FiducialSource source);

/// Fiducial whose projector is (1 + (sx + sy + sz)/sqrt 3)/2.
Fiducial qubit_fiducial();
/// (|0> - w^2 |1>)/sqrt 2.
Fiducial qutrit_fiducial();

/// lambda_(a,b) = X^{dagger b} Z^a |psi><psi| Z^{dagger a} X^b, a-major.
struct SicFamily {
  int d = 0;
  std::vector<HermitianOp> projectors;
  Fiducial fiducial;

  const HermitianOp& at(int a, int b) const { return projectors.at(a * d + b); }
};

SicFamily generate_hw_sic(const Fiducial& f);

/// Largest |tr(lambda lambda') - target|, targets 1 and 1/(d+1).
double verify_sic(const SicFamily& s);

/// Eigenvalues (descending) of every MU-POM element, j-major.
struct SpectraTable {
  int d = 0;
  std::vector<Spectrum> spectra;
  const Spectrum& at(int m, int j) const { return spectra.at(j * d + m); }
};

/// d+1 MU POMs recovered from SIC lines: tau_(m,j) = (1/d) sum over the
/// lines through (m, j) of lambda.
struct MuPomFamily {
  int d = 0;
  std::vector<HermitianOp> tau;
  SpectraTable spectra;
  const HermitianOp& at(int m, int j) const { return tau.at(j * d + m); }
};

/// Rejects families whose verify_sic deviation exceeds `tol`.
MuPomFamily extract_mu_pom(const SicFamily& s, const Dapg& geom, double tol = 1e-10);

SpectraTable spectra_table(const MuPomFamily& m);
/// Spectra of the MU-POM elements of any ket's Weyl-Heisenberg orbit, with no
/// SIC check.  Used for alignment and for non-SIC diagnostics.
SpectraTable orbit_spectra(const ComplexVector& ket);

/// Largest deviation of the MU-POM family from the SIC-line overlap table
/// {1/d across columns; 2/(d+1) same element; 1/(d+1) same column}, from
/// per-column completeness, and from positivity (eigenvalues >= -tol).
double verify_mu_pom(const MuPomFamily& m, double psd_tol = 1e-10);

struct ColumnConstancyReport {
  std::vector<double> column_spread;  // per j
  double max_spread = 0.0;
  double tol = 0.0;
  bool ok() const { return max_spread <= tol; }
};

ColumnConstancyReport assert_column_constant(const SpectraTable& table, double tol = 1e-8);

/// Partition of column labels whose (m = 0) spectra agree entrywise within
/// tol.  Groups are sorted by their smallest label, labels ascending.
struct ColumnGrouping {
  std::vector<std::vector<int>> groups;
  std::vector<std::vector<double>> spectra;  // representative spectrum per group

  std::vector<int> sizes() const;
};

ColumnGrouping group_columns_by_spectrum(const SpectraTable& table, double tol = 1e-8);

/// Compares a grouping with a reference up to relabeling of the columns:
/// group sizes must agree as multisets and there must be a size-preserving
/// pairing of groups whose spectra agree entrywise within tol.
struct GroupingMatch {
  bool sizes_match = false;
  bool spectra_match = false;
  double max_deviation = 0.0;  // best pairing; infinity if sizes differ
  bool labels_match = false;   // identical label partitions as well
  bool ok() const { return sizes_match && spectra_match; }
};

GroupingMatch match_grouping(const ColumnGrouping& found, const ColumnGrouping& reference,
                             double tol);

}  // namespace mubsic

#endif  // MUBSIC_SIC_HPP
