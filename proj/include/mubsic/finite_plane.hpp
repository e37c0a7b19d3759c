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

#ifndef MUBSIC_FINITE_PLANE_HPP
#define MUBSIC_FINITE_PLANE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace mubsic {

/// Affine plane of prime order d on Z_d^2.  Point (x, y) has index x d + y.
/// Lines 0 .. d^2-1 are y = a x + b (index a d + b); lines d^2 .. d^2+d-1 are
/// the verticals x = c.
struct Apg {
  int d = 0;
  std::vector<std::vector<int>> lines;

  int num_points() const { return d * d; }
  int num_lines() const { return static_cast<int>(lines.size()); }
};

Apg build_apg(int d);

/// Point (m, j) of a dual affine plane: row m in column j, j = d being the
/// computational column.
struct DapgPoint {
  int m = 0;
  int j = 0;
  bool operator==(const DapgPoint&) const = default;
};

/// Line mu = (a, b).
struct DapgLine {
  int a = 0;
  int b = 0;
  bool operator==(const DapgLine&) const = default;
};

/// Dual affine plane of order d: d(d+1) points, d^2 lines.
///
/// Point index = j d + m, line index = a d + b.  The incidence table is kept
/// explicitly so that imported or hand-built structures can be verified with
/// the same code as the algebraic construction.
class Dapg {
 public:
  Dapg() = default;
  /// `incidence[l]` lists the points on line l; lines are labelled in order.
  Dapg(int d, std::vector<std::vector<DapgPoint>> incidence);

  int order() const { return d_; }
  int num_points() const { return d_ * (d_ + 1); }
  int num_lines() const { return static_cast<int>(incidence_.size()); }

  int point_index(DapgPoint p) const;
  int line_index(DapgLine l) const;
  DapgPoint point_at(int index) const { return {index % d_, index / d_}; }
  DapgLine line_at(int index) const { return {index / d_, index % d_}; }

  /// Points on a line, sorted by (j, m).
  const std::vector<DapgPoint>& points_on(DapgLine l) const;
  /// Lines through a point, sorted by (a, b).
  std::vector<DapgLine> lines_through(DapgPoint p) const;
  bool contains(DapgLine l, DapgPoint p) const;

  const std::vector<std::vector<DapgPoint>>& incidence() const { return incidence_; }

  bool operator==(const Dapg& o) const;

 private:
  int d_ = 0;
  std::vector<std::vector<DapgPoint>> incidence_;
  std::vector<std::vector<int>> through_;  // point index -> line indices
  std::vector<std::vector<char>> member_;  // [line][point]
};

/// Line (a, b) holds (b, column d) and (a + j b mod d, column j), j < d.
Dapg build_dapg(int d);

struct IncidenceReport {
  int num_points = 0;
  int num_lines = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Exact check of the dual-affine-plane axioms.
IncidenceReport verify_incidence(const Dapg& p);
/// Exact check of the affine-plane axioms (including the parallel axiom).
IncidenceReport verify_apg(const Apg& p);

enum class IncidenceFormat { Dot, Json };
/// Throws InvalidInput for anything other than "dot" or "json".
IncidenceFormat parse_incidence_format(std::string_view token);

std::string export_incidence(const Dapg& p, IncidenceFormat fmt);
std::string export_incidence(const Apg& p, IncidenceFormat fmt);
/// Reads the JSON produced by export_incidence(Dapg, Json).
Dapg import_dapg_json(std::string_view text);

}  // namespace mubsic

#endif  // MUBSIC_FINITE_PLANE_HPP
