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

#ifndef MUBSIC_PROBABILITY_HPP
#define MUBSIC_PROBABILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mubsic/matrix_core.hpp"
#include "mubsic/sic.hpp"
#include "mubsic/weyl_heisenberg.hpp"

namespace mubsic {

/// Validated on construction: sum 1 to 1e-12, entries >= -1e-12.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> p);
  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int k) const { return p_.at(k); }
  const std::vector<double>& values() const { return p_; }

 private:
  std::vector<double> p_;
};

/// max_m |sum_k p_k p_{k+m} - c_m| with c_0 = 2/(d+1), c_m = 1/(d+1) for
/// m = 1..(d-1)/2 (m = 1 only for d = 2).
double cyclic_residual(const std::vector<double>& p);

/// Qutrit family p0(p1) = (1 - p1 + sqrt(2 p1 - 3 p1^2))/2, p2 = 1 - p0 - p1,
/// feasible for p1 in [0, 2/3].
struct QutritFamily {
  double p1_min = 0.0;
  double p1_max = 2.0 / 3.0;
  std::vector<double> at(double p1) const;
};

struct CyclicSolveOptions {
  std::uint64_t seed = 0;
  int attempts = 200;
  int max_iters = 20000;
  double residual_tol = 1e-12;
};

struct CyclicSolution {
  int d = 0;
  std::vector<ProbabilityVector> solutions;  // distinct up to shift/reflection
  std::optional<QutritFamily> family;        // d = 3 only
  bool closed_form = false;
  int attempts = 0;
  std::string scope;  // what the returned set does and does not cover
};

/// Solves the autocorrelation conditions for the probability vector of a
/// MU-POM element under the cyclic ansatz p_m = C^m p_0.  Closed form for
/// d = 2, 3; seeded local solves otherwise.  Throws ConvergenceError when no
/// solution is found within the budget.
CyclicSolution solve_cyclic_probability(int d, const CyclicSolveOptions& opts = {});

/// sum_k p_k |k;b><k;b|.
HermitianOp diagonal_in_basis(const MubFamily& mub, int b, const std::vector<double>& p);

struct FiducialCandidate {
  HermitianOp lambda0;         // sum tau - 1
  Spectrum sum_spectrum;       // eigenvalues of sum tau
  Spectrum lambda_spectrum;
  int rank = 0;
  double third_moment = 0.0;
  double sum_rule_deviation = 0.0;  // vs {2, 1 x (d-1)}
  bool rank_one = false;
  std::optional<Fiducial> fiducial;
};

/// One tau_0^(b) per basis b = 0..d, each diagonal in basis b (off-diagonal
/// residue <= diag_tol or InvalidInput).
FiducialCandidate fiducial_from_mu_pom(const MubFamily& mub, const std::vector<HermitianOp>& taus,
                                       double diag_tol = 1e-10);

}  // namespace mubsic

#endif  // MUBSIC_PROBABILITY_HPP
