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

#include "mubsic/weyl_heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mubsic/errors.hpp"

namespace mubsic {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

void require_prime(int n) {
  if (!is_prime(n)) throw NotPrimeError("d must be prime (got " + std::to_string(n) + ")");
}

void require_odd_prime(int n) {
  if (n == 2 || !is_prime(n))
    throw NotPrimeError("d must be an odd prime (got " + std::to_string(n) + ")");
}

Complex WeylPair::power(long long k) const {
  const int r = mod(k, d);
  if (r == 0) return 1.0;
  if (2 * r == d) return -1.0;
  const double ang = 2.0 * kPi * mod(k, d) / d;
  return {std::cos(ang), std::sin(ang)};
}

WeylPair build_weyl_pair(int d) {
  require_prime(d);
  WeylPair wp;
  wp.d = d;
  wp.omega = wp.power(1);
  wp.X = ComplexMatrix::Zero(d, d);
  wp.Z = ComplexMatrix::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    wp.X((n + 1) % d, n) = 1.0;
    wp.Z(n, n) = wp.power(n);
  }
  return wp;
}

ComplexMatrix monomial(const WeylPair& wp, int a, int b) {
  const int d = wp.d;
  if (a < 0 || a >= d || b < 0 || b >= d)
    throw DimensionError("monomial: index out of range");
  // (X^a Z^b)_{n+a, n} = w^{b n}
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int n = 0; n < d; ++n) m((n + a) % d, n) = wp.power(static_cast<long long>(b) * n);
  return m;
}

ComplexMatrix displacement(const WeylPair& wp, int a, int b) {
  const int d = wp.d;
  // X^{dagger b} Z^a = X^{-b} Z^a
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int n = 0; n < d; ++n)
    m(mod(n - b, d), n) = wp.power(static_cast<long long>(mod(a, d)) * n);
  return m;
}

MubFamily build_mub(int d) {
  require_prime(d);
  MubFamily fam;
  fam.d = d;
  fam.bases.assign(d + 1, std::vector<ComplexVector>(d, ComplexVector::Zero(d)));
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  if (d == 2) {
    const Complex i(0.0, 1.0);
    fam.bases[0][0] << s, s;
    fam.bases[0][1] << s, -s;
    fam.bases[1][0] << s, s * i;
    fam.bases[1][1] << s, -s * i;
  } else {
    const WeylPair wp = build_weyl_pair(d);
    for (int b = 0; b < d; ++b)
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          const long long tri = (static_cast<long long>(n) * (n - 1) / 2) % d;
          fam.bases[b][m](n) = s * wp.power(b * tri + static_cast<long long>(m) * n);
        }
  }
  for (int m = 0; m < d; ++m) fam.bases[d][m](m) = 1.0;
  return fam;
}

double verify_mub(const MubFamily& fam) {
  double dev = 0.0;
  const int nb = static_cast<int>(fam.bases.size());
  for (int b = 0; b < nb; ++b)
    for (int b2 = b; b2 < nb; ++b2)
      for (int m = 0; m < static_cast<int>(fam.bases[b].size()); ++m)
        for (int m2 = 0; m2 < static_cast<int>(fam.bases[b2].size()); ++m2) {
          const double ov = std::norm(fam.bases[b][m].dot(fam.bases[b2][m2]));
          double target = 1.0 / fam.d;
          if (b == b2) target = (m == m2) ? 1.0 : 0.0;
          dev = std::max(dev, std::abs(ov - target));
        }
  return dev;
}

std::vector<CommutingClass> commuting_classes(const WeylPair& wp) {
  require_odd_prime(wp.d);
  const int d = wp.d;
  std::vector<CommutingClass> out(d + 1);
  for (int j = 0; j <= d; ++j) {
    out[j].j = j;
    for (int k = 1; k <= (d - 1) / 2; ++k) {
      if (j == d)
        out[j].generators.push_back({0, k});
      else
        out[j].generators.push_back({k, mod(static_cast<long long>(k) * j, d)});
    }
  }
  return out;
}

HGBasis build_hg_basis(const WeylPair& wp, std::vector<std::vector<double>> phases,
                       double zeta_modulus) {
  require_odd_prime(wp.d);
  if (!(zeta_modulus > 0)) throw InvalidInput("build_hg_basis: zeta_modulus must be positive");
  const int d = wp.d, half = (d - 1) / 2;
  if (phases.empty()) phases.assign(d + 1, std::vector<double>(half, 0.0));
  if (static_cast<int>(phases.size()) != d + 1)
    throw DimensionError("build_hg_basis: expected d+1 phase rows");
  for (const auto& row : phases)
    if (static_cast<int>(row.size()) != half)
      throw DimensionError("build_hg_basis: expected (d-1)/2 phases per row");

  HGBasis basis;
  basis.d = d;
  basis.zeta_modulus = zeta_modulus;
  basis.phases = phases;
  basis.h.resize(d + 1);
  basis.g.resize(d + 1);
  const Complex i(0.0, 1.0);
  const auto classes = commuting_classes(wp);
  for (const auto& cls : classes)
    for (int k = 1; k <= half; ++k) {
      const MonomialIndex mi = cls.generators[k - 1];
      const ComplexMatrix m = monomial(wp, mi.a, mi.b);
      const Complex zeta = std::polar(zeta_modulus, phases[cls.j][k - 1]);
      const ComplexMatrix zm = zeta * m;
      const ComplexMatrix zm_adj = zm.adjoint();
      basis.h[cls.j].emplace_back(zm + zm_adj);
      basis.g[cls.j].emplace_back(-i * (zm - zm_adj));
    }
  return basis;
}

namespace {

double op_norm(const ComplexMatrix& m) {
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
}

}  // namespace

double verify_rotation_action(const HGBasis& basis) {
  const int d = basis.d;
  const WeylPair wp = build_weyl_pair(d);
  const ComplexMatrix& Z = wp.Z;
  const ComplexMatrix& X = wp.X;
  double res = 0.0;
  for (int j = 0; j <= d; ++j)
    for (int k = 1; k <= basis.half(); ++k) {
      const ComplexMatrix& h = basis.h[j][k - 1].mat();
      const ComplexMatrix& g = basis.g[j][k - 1].mat();
      const ComplexMatrix zh = Z * h * Z.adjoint();
      const ComplexMatrix zg = Z * g * Z.adjoint();
      if (j == d) {
        res = std::max({res, op_norm(zh - h), op_norm(zg - g)});
      } else {
        const double th = 2.0 * kPi * k / d;
        res = std::max(res, op_norm(zh - (std::cos(th) * h - std::sin(th) * g)));
        res = std::max(res, op_norm(zg - (std::sin(th) * h + std::cos(th) * g)));
      }
      const double tx = (j == d) ? 2.0 * kPi * k / d : 2.0 * kPi * k * j / d;
      const ComplexMatrix xh = X.adjoint() * h * X;
      const ComplexMatrix xg = X.adjoint() * g * X;
      res = std::max(res, op_norm(xh - (std::cos(tx) * h - std::sin(tx) * g)));
      res = std::max(res, op_norm(xg - (std::sin(tx) * h + std::cos(tx) * g)));
    }
  return res;
}

}  // namespace mubsic
