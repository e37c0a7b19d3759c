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

#include "mubsic/sic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mubsic/errors.hpp"

namespace mubsic {

const char* to_string(FiducialSource s) {
  switch (s) {
    case FiducialSource::ClosedForm:
      return "closed-form";
    case FiducialSource::Searched:
      return "searched";
    case FiducialSource::Ingested:
      return "ingested";
  }
  return "unknown";
}

Fiducial make_fiducial(ComplexVector ket, FiducialSource source) {
  if (ket.size() < 1) throw InvalidInput("fiducial: empty ket");
  for (Eigen::Index i = 0; i < ket.size(); ++i)
    if (!std::isfinite(ket(i).real()) || !std::isfinite(ket(i).imag()))
      throw InvalidInput("fiducial: non-finite component");
  const double n = ket.norm();
  if (!(n > 0)) throw InvalidInput("fiducial: zero vector");
  ket /= n;
  for (Eigen::Index i = 0; i < ket.size(); ++i)
    if (std::abs(ket(i)) > 1e-12) {
      ket *= std::conj(ket(i)) / std::abs(ket(i));
      ket(i) = std::abs(ket(i));
      break;
    }
  return {static_cast<int>(ket.size()), std::move(ket), source};
}

Fiducial qubit_fiducial() {
  // Bloch vector (1,1,1)/sqrt3: cos(theta) = 1/sqrt3, phi = pi/4
  const double ct = 1.0 / std::sqrt(3.0);
  ComplexVector k(2);
  k << std::sqrt((1.0 + ct) / 2.0), std::polar(std::sqrt((1.0 - ct) / 2.0), kPi / 4.0);
  return make_fiducial(k, FiducialSource::ClosedForm);
}

Fiducial qutrit_fiducial() {
  const WeylPair wp = build_weyl_pair(3);
  ComplexVector k(3);
  k << 1.0, -wp.power(2), 0.0;
  return make_fiducial(k, FiducialSource::ClosedForm);
}

SicFamily generate_hw_sic(const Fiducial& f) {
  const int d = f.d;
  require_prime(d);
  if (std::abs(f.ket.norm() - 1.0) > 1e-12) throw InvalidInput("generate_hw_sic: ket not unit");
  const WeylPair wp = build_weyl_pair(d);
  SicFamily s;
  s.d = d;
  s.fiducial = f;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      s.projectors.push_back(HermitianOp::projector(displacement(wp, a, b) * f.ket));
  return s;
}

double verify_sic(const SicFamily& s) {
  const double off = 1.0 / (s.d + 1.0);
  double dev = 0.0;
  const auto& p = s.projectors;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = x; y < p.size(); ++y)
      dev = std::max(dev, std::abs(hs_inner(p[x], p[y]) - (x == y ? 1.0 : off)));
  return dev;
}

namespace {

std::vector<HermitianOp> points_from_lines(const std::vector<HermitianOp>& lines,
                                           const Dapg& geom) {
  const int d = geom.order();
  std::vector<HermitianOp> tau;
  for (int pi = 0; pi < geom.num_points(); ++pi) {
    HermitianOp s = HermitianOp::zero(d);
    for (const auto& ln : geom.lines_through(geom.point_at(pi)))
      s += lines[geom.line_index(ln)];
    tau.push_back(s * (1.0 / d));
  }
  return tau;
}

SpectraTable table_of(int d, const std::vector<HermitianOp>& tau) {
  SpectraTable t;
  t.d = d;
  for (const auto& op : tau) t.spectra.push_back(spectrum_of(op));
  return t;
}

}  // namespace

MuPomFamily extract_mu_pom(const SicFamily& s, const Dapg& geom, double tol) {
  if (geom.order() != s.d) throw DimensionError("extract_mu_pom: order mismatch");
  const double dev = verify_sic(s);
  if (dev > tol) throw VerificationError("extract_mu_pom: SIC verification failed", dev);
  MuPomFamily m;
  m.d = s.d;
  m.tau = points_from_lines(s.projectors, geom);
  m.spectra = table_of(s.d, m.tau);
  return m;
}

SpectraTable spectra_table(const MuPomFamily& m) { return table_of(m.d, m.tau); }

SpectraTable orbit_spectra(const ComplexVector& ket) {
  const Fiducial f = make_fiducial(ket, FiducialSource::Ingested);
  const SicFamily s = generate_hw_sic(f);
  return table_of(f.d, points_from_lines(s.projectors, build_dapg(f.d)));
}

double verify_mu_pom(const MuPomFamily& m, double psd_tol) {
  const int d = m.d;
  double dev = 0.0;
  for (int j = 0; j <= d; ++j) {
    HermitianOp sum = HermitianOp::zero(d);
    for (int k = 0; k < d; ++k) {
      sum += m.at(k, j);
      const double low = m.spectra.at(k, j).values.back();
      if (low < -psd_tol) dev = std::max(dev, -low);
      for (int j2 = 0; j2 <= d; ++j2)
        for (int k2 = 0; k2 < d; ++k2) {
          double target = 1.0 / d;
          if (j == j2) target = (k == k2) ? 2.0 / (d + 1) : 1.0 / (d + 1);
          dev = std::max(dev, std::abs(hs_inner(m.at(k, j), m.at(k2, j2)) - target));
        }
    }
    dev = std::max(dev, max_abs(sum.mat() - ComplexMatrix::Identity(d, d)));
  }
  return dev;
}

namespace {

double entrywise(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

}  // namespace

ColumnConstancyReport assert_column_constant(const SpectraTable& table, double tol) {
  ColumnConstancyReport r;
  r.tol = tol;
  for (int j = 0; j <= table.d; ++j) {
    double spread = 0.0;
    for (int m = 1; m < table.d; ++m)
      spread = std::max(spread, entrywise(table.at(m, j).values, table.at(0, j).values));
    r.column_spread.push_back(spread);
    r.max_spread = std::max(r.max_spread, spread);
  }
  return r;
}

std::vector<int> ColumnGrouping::sizes() const {
  std::vector<int> s;
  for (const auto& g : groups) s.push_back(static_cast<int>(g.size()));
  std::sort(s.begin(), s.end());
  return s;
}

ColumnGrouping group_columns_by_spectrum(const SpectraTable& table, double tol) {
  ColumnGrouping g;
  for (int j = 0; j <= table.d; ++j) {
    const auto& spec = table.at(0, j).values;
    bool placed = false;
    for (std::size_t k = 0; k < g.groups.size() && !placed; ++k)
      if (entrywise(spec, g.spectra[k]) <= tol) {
        g.groups[k].push_back(j);
        placed = true;
      }
    if (!placed) {
      g.groups.push_back({j});
      g.spectra.push_back(spec);
    }
  }
  return g;
}

GroupingMatch match_grouping(const ColumnGrouping& found, const ColumnGrouping& reference,
                             double tol) {
  GroupingMatch r;
  r.max_deviation = std::numeric_limits<double>::infinity();
  r.sizes_match = found.sizes() == reference.sizes();
  if (!r.sizes_match) return r;

  const std::size_t n = found.groups.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    double dev = 0.0;
    for (std::size_t k = 0; k < n && dev <= r.max_deviation; ++k) {
      if (found.groups[k].size() != reference.groups[perm[k]].size()) {
        dev = std::numeric_limits<double>::infinity();
        break;
      }
      dev = std::max(dev, entrywise(found.spectra[k], reference.spectra[perm[k]]));
    }
    if (dev < r.max_deviation) r.max_deviation = dev;
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.spectra_match = r.max_deviation <= tol;

  auto canon = [](std::vector<std::vector<int>> gs) {
    for (auto& x : gs) std::sort(x.begin(), x.end());
    std::sort(gs.begin(), gs.end());
    return gs;
  };
  r.labels_match = canon(found.groups) == canon(reference.groups);
  return r;
}

}  // namespace mubsic
