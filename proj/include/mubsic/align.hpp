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

#ifndef MUBSIC_ALIGN_HPP
#define MUBSIC_ALIGN_HPP

#include <optional>
#include <string>
#include <vector>

#include "mubsic/matrix_core.hpp"
#include "mubsic/sic.hpp"

namespace mubsic {

// Three maps that send a Weyl-Heisenberg SIC orbit to another one and
// relabel the MU-POM columns (odd prime d):
//   'F'  Fourier  F_{mn} = w^{mn}/sqrt d      j -> -1/j, 0 <-> d
//   'P'  phase    diag(w^{n(n-1)/2})         j -> j+1, d fixed
//   'C'  complex conjugation                 j -> -j, d fixed
ComplexVector apply_word(const ComplexVector& ket, const std::string& word);

/// Column label that column j is moved to by letter `g`.
int column_image(char g, int j, int d);

struct AlignedFiducial {
  Fiducial fiducial;
  std::string word;            // applied left to right
  std::vector<int> column_map; // raw column j -> aligned label
  double max_deviation = 0.0;  // vs the target spectra, after alignment
};

/// Searches words in {F, P, C} (breadth first, shortest first) until every
/// column spectrum of the transformed fiducial matches `target[j]` (one
/// descending spectrum per column label j = 0..d) within tol.  Returns nullopt
/// if no element of the generated group works.
std::optional<AlignedFiducial> align_columns(const Fiducial& f,
                                             const std::vector<std::vector<double>>& target,
                                             double tol = 1e-4);

}  // namespace mubsic

#endif  // MUBSIC_ALIGN_HPP
