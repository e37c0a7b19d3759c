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

#ifndef MUBSIC_RANK_ONE_HPP
#define MUBSIC_RANK_ONE_HPP

#include <vector>

#include "mubsic/matrix_core.hpp"
#include "mubsic/sic.hpp"

namespace mubsic {

/// phases[j][k-1], j = 0..d (d is the Z class), k = 1..(d-1)/2.
using PhaseTable = std::vector<std::vector<double>>;

/// sigma0 = (1/d) [1 + (1/sqrt(d+1)) sum_{j,k} (e^{i phi_jk} M_jk + h.c.)]
/// with M_jk = X^k Z^{kj} for j < d and M_dk = Z^k.  Hermitian, unit trace,
/// unit purity for any real phases.
HermitianOp build_sigma0_from_phases(int d, const PhaseTable& phases);

/// phi_jk = -arg <psi|M_jk|psi>.  Odd prime d.
PhaseTable phases_from_fiducial(const Fiducial& f);

struct RankOneDeviation {
  double full = 0.0;     // all (a,b) != (0,0)
  double reduced = 0.0;  // X^k Z^{-mk}, k = 1..(d-1)/2, m = 0..d-1
};

/// Max | |<psi|M|psi>|^2 - 1/(d+1) | over each set.  For d = 2 the reduced
/// set is the full set of three overlaps.
RankOneDeviation rank_one_conditions(const ComplexVector& ket);
inline RankOneDeviation rank_one_conditions(const Fiducial& f) {
  return rank_one_conditions(f.ket);
}

}  // namespace mubsic

#endif  // MUBSIC_RANK_ONE_HPP
