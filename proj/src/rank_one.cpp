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

#include "mubsic/rank_one.hpp"

#include <algorithm>
#include <cmath>

#include "mubsic/errors.hpp"
#include "mubsic/weyl_heisenberg.hpp"

namespace mubsic {

namespace {

ComplexMatrix class_monomial(const WeylPair& wp, int j, int k) {
  return j == wp.d ? monomial(wp, 0, k) : monomial(wp, k, mod(static_cast<long long>(k) * j, wp.d));
}

}  // namespace

HermitianOp build_sigma0_from_phases(int d, const PhaseTable& phases) {
  require_odd_prime(d);
  const int half = (d - 1) / 2;
  if (static_cast<int>(phases.size()) != d + 1)
    throw InvalidInput("build_sigma0_from_phases: need d+1 phase rows");
  for (const auto& row : phases)
    if (static_cast<int>(row.size()) != half)
      throw InvalidInput("build_sigma0_from_phases: need (d-1)/2 phases per row");

  const WeylPair wp = build_weyl_pair(d);
  const double c = 1.0 / std::sqrt(d + 1.0);
  ComplexMatrix s = ComplexMatrix::Identity(d, d);
  for (int j = 0; j <= d; ++j)
    for (int k = 1; k <= half; ++k) {
      const ComplexMatrix t = c * std::polar(1.0, phases[j][k - 1]) * class_monomial(wp, j, k);
      s += t + t.adjoint();
    }
  return HermitianOp(s / static_cast<double>(d));
}

PhaseTable phases_from_fiducial(const Fiducial& f) {
  const int d = f.d;
  require_odd_prime(d);
  const WeylPair wp = build_weyl_pair(d);
  PhaseTable out(d + 1, std::vector<double>((d - 1) / 2));
  for (int j = 0; j <= d; ++j)
    for (int k = 1; k <= (d - 1) / 2; ++k)
      out[j][k - 1] = -std::arg(f.ket.dot(class_monomial(wp, j, k) * f.ket));
  return out;
}

RankOneDeviation rank_one_conditions(const ComplexVector& ket) {
  const int d = static_cast<int>(ket.size());
  require_prime(d);
  if (std::abs(ket.norm() - 1.0) > 1e-10) throw InvalidInput("rank_one_conditions: ket not unit");
  const WeylPair wp = build_weyl_pair(d);
  const double t = 1.0 / (d + 1.0);
  auto dev = [&](int a, int b) {
    return std::abs(std::norm(ket.dot(monomial(wp, a, b) * ket)) - t);
  };
  RankOneDeviation r;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (a || b) r.full = std::max(r.full, dev(a, b));
  if (d == 2) {
    r.reduced = r.full;
    return r;
  }
  for (int k = 1; k <= (d - 1) / 2; ++k)
    for (int m = 0; m < d; ++m)
      r.reduced = std::max(r.reduced, dev(k, mod(-static_cast<long long>(m) * k, d)));
  return r;
}

}  // namespace mubsic
