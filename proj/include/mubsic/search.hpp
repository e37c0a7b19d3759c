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

#ifndef MUBSIC_SEARCH_HPP
#define MUBSIC_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mubsic/matrix_core.hpp"
#include "mubsic/sic.hpp"

namespace mubsic {

/// Called once per accepted local step.  `ket` is unit-norm.
using IterateObserver =
    std::function<void(int restart, int iter, const ComplexVector& ket, double objective)>;

struct SearchConfig {
  std::uint64_t seed = 0;
  int restarts = 20;
  int max_iters = 5000;           // local iterations per restart
  double objective_tol = 1e-14;   // success threshold
  double converge_tol = 1e-28;    // keep descending until here
  double grad_tol = 1e-15;
  int memory = 10;                // L-BFGS pairs
  double armijo = 1e-4;
  int max_backtracks = 60;
  int nelder_mead_iters = 2000;   // fallback budget per stall
  bool stop_at_first_success = false;
  IterateObserver observer;

  void validate() const;
};

/// F(psi) = sum_{(a,b) != 0} (|<psi|X^a Z^b|psi>|^2 - 1/(d+1))^2 for unit psi.
double sic_objective(const ComplexVector& ket);

/// dF/d(conj psi) projected onto the tangent space of the sphere at psi.
ComplexVector sic_objective_gradient(const ComplexVector& ket);

struct RestartOutcome {
  double objective = 0.0;
  ComplexVector ket;
  int iterations = 0;
  bool used_fallback = false;
};

struct SearchResult {
  int d = 0;
  Fiducial best;              // source = Searched
  double objective = 0.0;
  bool success = false;       // objective <= objective_tol
  int best_restart = -1;
  std::vector<RestartOutcome> restarts;
};

/// Seeded random restarts (restart r draws from seed_seq{seed, r}), local
/// descent from each, best picked by (objective, restart index).  Never
/// throws for an unmet tolerance: check `success`.
SearchResult search_fiducial(int d, const SearchConfig& cfg = {});

/// Local descent from the given ket only.
RestartOutcome polish_ket(const ComplexVector& ket, const SearchConfig& cfg = {});

}  // namespace mubsic

#endif  // MUBSIC_SEARCH_HPP
