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

#ifndef MUBSIC_WEYL_HEISENBERG_HPP
#define MUBSIC_WEYL_HEISENBERG_HPP

#include <vector>

#include "mubsic/matrix_core.hpp"

namespace mubsic {

bool is_prime(int n);
/// Throws NotPrimeError("d must be prime") unless n is prime.
void require_prime(int n);
/// Throws NotPrimeError unless n is an odd prime.
void require_odd_prime(int n);

/// Non-negative residue of a modulo d.
inline int mod(long long a, int d) {
  const long long r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

/// Shift X|n> = |n+1>, clock Z|n> = w^n |n>, w = exp(2 pi i / d).  With these
/// matrices ZX = w XZ.
struct WeylPair {
  int d = 0;
  ComplexMatrix X;
  ComplexMatrix Z;
  Complex omega;

  /// w^k for any integer k.
  Complex power(long long k) const;
};

WeylPair build_weyl_pair(int d);

/// X^a Z^b, 0 <= a, b < d.
ComplexMatrix monomial(const WeylPair& wp, int a, int b);

/// X^{dagger b} Z^a: the displacement that carries the fiducial line (0, 0) to
/// line (a, b).  Any integers are accepted and reduced mod d.
ComplexMatrix displacement(const WeylPair& wp, int a, int b);

/// d+1 orthonormal bases; bases[b][m] is |m; b>, and b = d is the
/// computational basis.  A family may hold fewer than d+1 bases (for testing
/// partial sets); construction by build_mub always yields all of them.
struct MubFamily {
  int d = 0;
  std::vector<std::vector<ComplexVector>> bases;

  const ComplexVector& ket(int m, int b) const { return bases.at(b).at(m); }
};

/// For odd d: <n|m;b> = w^{b n(n-1)/2 + m n}/sqrt(d), with the integer
/// n(n-1)/2 reduced mod d.  For d = 2: b = 0, 1, 2 are the sigma_x, sigma_y,
/// sigma_z eigenbases, each ordered (+1, -1).
MubFamily build_mub(int d);

/// Largest | |<m;b|m';b'>|^2 - target | over every ket pair, with targets 1,
/// 0 (same basis) and 1/d (different bases).
double verify_mub(const MubFamily& m);

struct MonomialIndex {
  int a = 0;  // power of X
  int b = 0;  // power of Z
  bool operator==(const MonomialIndex&) const = default;
};

/// One commuting class: generators X^k Z^{kj} (or Z^k for j = d),
/// k = 1 .. (d-1)/2.  The adjoints complete the class.
struct CommutingClass {
  int j = 0;
  std::vector<MonomialIndex> generators;
};

/// d+1 classes, j = 0 .. d-1 then j = d.  Odd primes only.
std::vector<CommutingClass> commuting_classes(const WeylPair& wp);

/// Hermitian basis built from the commuting classes:
///   h = zeta M + conj(zeta) M^dagger,  g = -i (zeta M - conj(zeta) M^dagger),
/// zeta_{j,k} = |zeta| exp(i phi_{j,k}).  Indices: h[j][k-1], j = 0 .. d.
struct HGBasis {
  int d = 0;
  double zeta_modulus = 0.0;
  std::vector<std::vector<double>> phases;
  std::vector<std::vector<HermitianOp>> h;
  std::vector<std::vector<HermitianOp>> g;

  int half() const { return (d - 1) / 2; }
};

/// phases must be (d+1) x (d-1)/2; an empty phases argument means all zero.
HGBasis build_hg_basis(const WeylPair& wp, std::vector<std::vector<double>> phases,
                       double zeta_modulus);

/// Largest operator-norm residual over the Z . Z^dagger and X^dagger . X
/// rotation laws for every (h, g) pair of the basis.  Since ZX = w XZ,
/// conjugation multiplies zeta M by w^k (w^{kj} for X), which turns (h, g)
/// into (cos h - sin g, sin h + cos g).
double verify_rotation_action(const HGBasis& basis);

}  // namespace mubsic

#endif  // MUBSIC_WEYL_HEISENBERG_HPP
