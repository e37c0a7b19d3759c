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

#include "mubsic/probability.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "mubsic/errors.hpp"

namespace mubsic {
namespace {

TEST(ProbabilityVector, Invariants) {
  EXPECT_NO_THROW(ProbabilityVector({0.25, 0.75}));
  EXPECT_THROW(ProbabilityVector({0.5, 0.6}), InvalidInput);
  EXPECT_THROW(ProbabilityVector({1.1, -0.1}), InvalidInput);
  EXPECT_THROW(ProbabilityVector({}), InvalidInput);
}

TEST(CyclicSolve, Qubit) {
  const CyclicSolution s = solve_cyclic_probability(2);
  ASSERT_EQ(s.solutions.size(), 2u);
  EXPECT_NEAR(s.solutions[0][0], (3 + std::sqrt(3.0)) / 6, 1e-15);
  EXPECT_NEAR(s.solutions[1][0], (3 - std::sqrt(3.0)) / 6, 1e-15);
  for (const auto& p : s.solutions) EXPECT_LE(cyclic_residual(p.values()), 1e-15);
}

TEST(CyclicSolve, QutritFamily) {
  const CyclicSolution s = solve_cyclic_probability(3);
  ASSERT_TRUE(s.family.has_value());
  const auto half = s.family->at(0.5);
  EXPECT_NEAR(half[0], 0.5, 1e-15);
  EXPECT_NEAR(half[2], 0.0, 1e-15);
  for (double p1 = 0.0; p1 <= 2.0 / 3.0; p1 += 1.0 / 60) {
    const auto p = s.family->at(p1);
    EXPECT_LE(cyclic_residual(p), 1e-12) << p1;
    for (double x : p) EXPECT_GE(x, -1e-12);
  }
  EXPECT_THROW(s.family->at(0.7), InvalidInput);
}

TEST(CyclicSolve, LargerPrimes) {
  for (int d : {5, 7}) {
    CyclicSolveOptions o;
    o.attempts = 60;
    const CyclicSolution s = solve_cyclic_probability(d, o);
    EXPECT_FALSE(s.solutions.empty());
    for (const auto& p : s.solutions) {
      EXPECT_LE(cyclic_residual(p.values()), 1e-10);
      double sq = 0.0;
      for (double x : p.values()) sq += x * x;
      EXPECT_NEAR(sq, 2.0 / (d + 1), 1e-10);
    }
  }
}

TEST(CyclicSolve, Deterministic) {
  CyclicSolveOptions o;
  o.attempts = 20;
  o.seed = 9;
  const auto a = solve_cyclic_probability(5, o), b = solve_cyclic_probability(5, o);
  ASSERT_EQ(a.solutions.size(), b.solutions.size());
  for (std::size_t i = 0; i < a.solutions.size(); ++i)
    EXPECT_EQ(a.solutions[i].values(), b.solutions[i].values());
}

std::vector<HermitianOp> same_p_everywhere(const MubFamily& m, const std::vector<double>& p) {
  std::vector<HermitianOp> taus;
  for (int b = 0; b <= m.d; ++b) taus.push_back(diagonal_in_basis(m, b, p));
  return taus;
}

TEST(FromMuPom, QubitPipeline) {
  const MubFamily m = build_mub(2);
  const double p = solve_cyclic_probability(2).solutions[0][0];
  const FiducialCandidate c = fiducial_from_mu_pom(m, same_p_everywhere(m, {p, 1 - p}));
  ASSERT_TRUE(c.rank_one);
  EXPECT_NEAR(c.lambda_spectrum.values[0], 1.0, 1e-10);
  EXPECT_NEAR(c.lambda_spectrum.values[1], 0.0, 1e-10);
  EXPECT_LE(c.sum_rule_deviation, 1e-8);
  const ComplexVector k = qubit_fiducial().ket;
  EXPECT_NEAR(std::norm(k.dot(c.fiducial->ket)), 1.0, 1e-10);
  EXPECT_LE(verify_sic(generate_hw_sic(*c.fiducial)), 1e-10);
}

TEST(FromMuPom, QutritPipeline) {
  const MubFamily m = build_mub(3);
  const FiducialCandidate c = fiducial_from_mu_pom(m, same_p_everywhere(m, {0.5, 0.5, 0.0}));
  ASSERT_TRUE(c.rank_one);
  EXPECT_NEAR(c.third_moment, 1.0, 1e-10);
  EXPECT_NEAR(c.sum_spectrum.sum(), m.d + 1.0, 1e-12);
  EXPECT_LE(c.sum_rule_deviation, 1e-8);
  EXPECT_NEAR(std::norm(qutrit_fiducial().ket.dot(c.fiducial->ket)), 1.0, 1e-10);
  EXPECT_LE(verify_sic(generate_hw_sic(*c.fiducial)), 1e-10);
}

TEST(FromMuPom, UniformIsRejected) {
  const MubFamily m = build_mub(3);
  const FiducialCandidate c = fiducial_from_mu_pom(m, same_p_everywhere(m, {1 / 3.0, 1 / 3.0, 1 / 3.0}));
  EXPECT_FALSE(c.rank_one);
  EXPECT_FALSE(c.fiducial.has_value());
  EXPECT_EQ(c.rank, 3);
}

TEST(FromMuPom, NonDiagonalInput) {
  const MubFamily m = build_mub(3);
  auto taus = same_p_everywhere(m, {0.5, 0.5, 0.0});
  taus[0] = diagonal_in_basis(m, 1, {0.5, 0.5, 0.0});
  EXPECT_THROW(fiducial_from_mu_pom(m, taus), InvalidInput);
  taus.pop_back();
  EXPECT_THROW(fiducial_from_mu_pom(m, taus), DimensionError);
}

}  // namespace
}  // namespace mubsic
