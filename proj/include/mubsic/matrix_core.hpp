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

#ifndef MUBSIC_MATRIX_CORE_HPP
#define MUBSIC_MATRIX_CORE_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace mubsic {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

/// Asymmetry admitted (and then symmetrized away) when forming a HermitianOp.
inline constexpr double kHermitianAdmission = 1e-12;

/// Largest absolute entry, the norm used for all residual reports.
double max_abs(const ComplexMatrix& m);

/// Throws InvalidInput unless `m` is square, non-empty and finite.
void require_square_finite(const ComplexMatrix& m, const char* what);

/// A d x d Hermitian operator with its trace cached.
///
/// Construction rejects matrices whose asymmetry ||m - m^dagger||_max exceeds
/// the admission tolerance; anything below it is replaced by (m + m^dagger)/2,
/// so the stored matrix is exactly Hermitian up to rounding of the average.
class HermitianOp {
 public:
  HermitianOp() = default;
  explicit HermitianOp(const ComplexMatrix& m, double admission_tol = kHermitianAdmission);

  static HermitianOp identity(int dim);
  static HermitianOp zero(int dim);
  /// |v><v| for a (not necessarily normalized) vector.
  static HermitianOp projector(const ComplexVector& v);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& mat() const { return mat_; }
  double trace() const { return trace_; }

  HermitianOp operator+(const HermitianOp& o) const;
  HermitianOp operator-(const HermitianOp& o) const;
  HermitianOp operator*(double s) const;
  HermitianOp& operator+=(const HermitianOp& o);

  /// U h U^dagger.
  HermitianOp conjugated(const ComplexMatrix& u) const;

 private:
  ComplexMatrix mat_;
  double trace_ = 0.0;
};

inline HermitianOp operator*(double s, const HermitianOp& h) { return h * s; }

/// Eigenvalues sorted descending plus the tolerance used for rank decisions.
struct Spectrum {
  std::vector<double> values;
  double tol = 1e-10;

  int size() const { return static_cast<int>(values.size()); }
  double sum() const;
};

struct Eigensystem {
  Spectrum spectrum;
  /// Column k is the eigenvector of spectrum.values[k].
  ComplexMatrix vectors;
  /// ||h - V diag(values) V^dagger||_max.
  double residual = 0.0;
  int sweeps = 0;
};

struct JacobiOptions {
  /// Off-diagonal Frobenius norm target relative to ||h||_F.
  double relative_threshold = 1e-14;
  /// 0 selects the default cap of 100 d^2 sweeps.
  int max_sweeps = 0;
  double spectrum_tol = 1e-10;
};

/// tr(a b); the imaginary rounding residue is discarded.
double hs_inner(const HermitianOp& a, const HermitianOp& b);

/// Cyclic complex Jacobi diagonalization.  Throws ConvergenceError (carrying
/// the remaining off-diagonal norm) when the sweep cap is reached.
Eigensystem hermitian_eigensystem(const HermitianOp& h, const JacobiOptions& opts = {});

/// Number of eigenvalues with |value| > tol.
int matrix_rank(const HermitianOp& h, double tol = 1e-8);

/// tr(h^3).
double third_moment(const HermitianOp& h);

/// Sorted-descending eigenvalues only.
Spectrum spectrum_of(const HermitianOp& h, double tol = 1e-10);

}  // namespace mubsic

#endif  // MUBSIC_MATRIX_CORE_HPP
