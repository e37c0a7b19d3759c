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

#include "mubsic/matrix_core.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mubsic/errors.hpp"

namespace mubsic {
namespace {

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  return (a + a.adjoint()) / 2.0;
}

TEST(HermitianOp, RejectsAsymmetric) {
  ComplexMatrix m(2, 2);
  m << 1.0, Complex(0, 1), Complex(0, 1), 0.0;
  EXPECT_THROW(HermitianOp{m}, InvalidInput);
}

TEST(HermitianOp, RejectsNonSquareAndNonFinite) {
  EXPECT_THROW(HermitianOp{ComplexMatrix::Zero(2, 3)}, InvalidInput);
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(HermitianOp{m}, InvalidInput);
}

TEST(HermitianOp, SymmetrizesWithinAdmission) {
  ComplexMatrix m = ComplexMatrix::Identity(3, 3);
  m(0, 1) = 1e-14;
  const HermitianOp h(m);
  EXPECT_EQ(h.mat()(0, 1), std::conj(h.mat()(1, 0)));
  EXPECT_DOUBLE_EQ(h.trace(), 3.0);
}

TEST(HermitianOp, ProjectorIsIdempotent) {
  ComplexVector v(3);
  v << 1.0, Complex(0, 2), -1.0;
  const HermitianOp p = HermitianOp::projector(v);
  EXPECT_NEAR(p.trace(), 1.0, 1e-15);
  EXPECT_LT(max_abs(p.mat() * p.mat() - p.mat()), 1e-15);
  EXPECT_NEAR(hs_inner(p, p), 1.0, 1e-15);
}

TEST(HermitianOp, DimensionMismatch) {
  EXPECT_THROW(HermitianOp::identity(2) + HermitianOp::identity(3), DimensionError);
  EXPECT_THROW(hs_inner(HermitianOp::identity(2), HermitianOp::identity(3)), DimensionError);
}

TEST(Jacobi, DiagonalAndPauli) {
  ComplexMatrix sy(2, 2);
  sy << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
  const Eigensystem es = hermitian_eigensystem(HermitianOp(sy));
  EXPECT_NEAR(es.spectrum.values[0], 1.0, 1e-14);
  EXPECT_NEAR(es.spectrum.values[1], -1.0, 1e-14);
  EXPECT_LT(es.residual, 1e-14);

  Eigen::VectorXcd diag(3);
  diag << 2.0, -1.0, 0.5;
  const Spectrum s = spectrum_of(HermitianOp(ComplexMatrix(diag.asDiagonal())));
  EXPECT_EQ(s.values, (std::vector<double>{2.0, 0.5, -1.0}));
}

// Independent oracle: Eigen's self-adjoint solver.
TEST(Jacobi, MatchesEigenOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 3, 5, 8, 13}) {
    for (int rep = 0; rep < 5; ++rep) {
      const HermitianOp h(random_hermitian(n, rng));
      const Eigensystem es = hermitian_eigensystem(h);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(h.mat());
      for (int k = 0; k < n; ++k)
        EXPECT_NEAR(es.spectrum.values[k], ref.eigenvalues()(n - 1 - k), 1e-11);
      // columns are eigenvectors in the same order, unitary
      EXPECT_LT(max_abs(es.vectors.adjoint() * es.vectors - ComplexMatrix::Identity(n, n)), 1e-12);
      for (int k = 0; k < n; ++k)
        EXPECT_LT((h.mat() * es.vectors.col(k) - es.spectrum.values[k] * es.vectors.col(k)).norm(),
                  1e-11);
      EXPECT_LT(es.residual, 1e-11);
    }
  }
}

TEST(Jacobi, DegenerateSpectrum) {
  ComplexVector v(4);
  v << 1.0, 1.0, Complex(0, 1), 0.0;
  const HermitianOp h = HermitianOp::identity(4) + HermitianOp::projector(v);
  const Spectrum s = spectrum_of(h);
  EXPECT_NEAR(s.values[0], 2.0, 1e-13);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(s.values[k], 1.0, 1e-13);
  EXPECT_NEAR(s.sum(), h.trace(), 1e-13);
}

TEST(Rank, ProjectorsAndIdentity) {
  ComplexVector v = ComplexVector::Zero(5);
  v(2) = 1.0;
  EXPECT_EQ(matrix_rank(HermitianOp::projector(v)), 1);
  EXPECT_EQ(matrix_rank(HermitianOp::identity(5)), 5);
  EXPECT_EQ(matrix_rank(HermitianOp::zero(5)), 0);
  EXPECT_NEAR(third_moment(HermitianOp::projector(v)), 1.0, 1e-15);
  EXPECT_THROW(matrix_rank(HermitianOp::identity(2), 0.0), InvalidInput);
}

TEST(HermitianOp, ConjugationPreservesSpectrum) {
  std::mt19937_64 rng(3);
  const HermitianOp h(random_hermitian(4, rng));
  const ComplexMatrix u = Eigen::HouseholderQR<ComplexMatrix>(random_hermitian(4, rng) +
                                                              Complex(0, 1) * random_hermitian(4, rng))
                              .householderQ();
  const Spectrum a = spectrum_of(h), b = spectrum_of(h.conjugated(u));
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(a.values[k], b.values[k], 1e-12);
}

}  // namespace
}  // namespace mubsic
