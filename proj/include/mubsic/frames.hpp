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

#ifndef MUBSIC_FRAMES_HPP
#define MUBSIC_FRAMES_HPP

#include <vector>

#include <Eigen/Dense>

#include "mubsic/finite_plane.hpp"
#include "mubsic/matrix_core.hpp"
#include "mubsic/weyl_heisenberg.hpp"

namespace mubsic {

/// d(d+1) traceless point operators t_m^(j) with scale beta, and their
/// trace-one lifts tau = (1 + t)/d.  Index order is j-major: j d + m.
///
/// Nothing here forces tau >= 0; positivity is checked only by operations
/// that need a probability interpretation.
class PointFrame {
 public:
  PointFrame() = default;
  PointFrame(int d, double beta, std::vector<HermitianOp> traceless);
  static PointFrame from_trace_one(int d, double beta, const std::vector<HermitianOp>& tau);

  int d() const { return d_; }
  double beta() const { return beta_; }
  const HermitianOp& t(int m, int j) const { return t_.at(j * d_ + m); }
  const HermitianOp& tau(int m, int j) const { return tau_.at(j * d_ + m); }
  const std::vector<HermitianOp>& traceless() const { return t_; }
  const std::vector<HermitianOp>& trace_one() const { return tau_; }

 private:
  int d_ = 0;
  double beta_ = 0.0;
  std::vector<HermitianOp> t_;
  std::vector<HermitianOp> tau_;
};

/// d^2 traceless line operators l_(a,b) with scale alpha, their lifts
/// lambda = (1 + l)/d.  Index order is a-major: a d + b.
class LineFrame {
 public:
  LineFrame() = default;
  LineFrame(int d, double alpha, std::vector<HermitianOp> traceless);
  static LineFrame from_trace_one(int d, double alpha, const std::vector<HermitianOp>& lambda);

  int d() const { return d_; }
  double alpha() const { return alpha_; }
  const HermitianOp& l(int a, int b) const { return l_.at(a * d_ + b); }
  const HermitianOp& lambda(int a, int b) const { return lambda_.at(a * d_ + b); }
  const std::vector<HermitianOp>& traceless() const { return l_; }
  const std::vector<HermitianOp>& trace_one() const { return lambda_; }

 private:
  int d_ = 0;
  double alpha_ = 0.0;
  std::vector<HermitianOp> l_;
  std::vector<HermitianOp> lambda_;
};

/// d vectors in R^{d-1}; coordinate pair r holds (cos 2 pi k r/d, sin 2 pi k r/d).
struct SimplexVectors {
  int d = 0;
  std::vector<Eigen::VectorXd> vectors;
};

SimplexVectors build_simplex_vectors(int d);

/// tau_m^(b) = |m;b><m;b|, beta = d(d-1).  Rejects families whose MUB
/// deviation exceeds `tol`.
PointFrame point_frame_from_mub(const MubFamily& mub, double tol = 1e-10);

/// Point (m, j) carries sum_k cos(2 pi k m/d) h_k^(j) + sin(2 pi k m/d) g_k^(j),
/// beta = (d-1)/2.  Requires |zeta|^2 = 1/(2d).
PointFrame point_frame_from_hg(const HGBasis& basis);

/// l_mu = sum of the point operators on mu; alpha = beta (d+1).
LineFrame line_ops_from_points(const PointFrame& pf, const Dapg& geom);

/// t_(m,j) = (1/d) sum over the d lines through (m, j); beta = alpha/(d+1).
PointFrame point_ops_from_lines(const LineFrame& lf, const Dapg& geom);

/// Largest deviation from the point-frame scalar-product table
/// {0 across columns; beta; -beta/(d-1) within a column} and from the
/// per-column zero sum.
double verify_point_frame(const PointFrame& pf);
/// Same for lines: {alpha; -alpha/(d^2-1)} and sum_mu l_mu = 0.
double verify_line_frame(const LineFrame& lf);

struct PointLineReport {
  double traceless_deviation = 0.0;  // vs {beta; -beta/(d-1)}
  double trace_one_deviation = 0.0;  // vs {(d+beta)/d^2; (d-beta/(d-1))/d^2}
  double on_line_value = 0.0;        // expected tr(tau lambda) on the line
  double off_line_value = 0.0;       // expected tr(tau lambda) off the line
  double max_deviation() const { return std::max(traceless_deviation, trace_one_deviation); }
};

/// Checks tr(t l) and tr(tau lambda) against the incidence of `geom`.  The
/// trace-one table is derived from the traceless one:
/// tr(tau lambda) = (d + tr(t l))/d^2.
PointLineReport verify_point_line_products(const PointFrame& pf, const LineFrame& lf,
                                           const Dapg& geom);

/// sigma_mu = (1/d)(1 + sqrt(2d/(d+1)) l_mu) for a line frame with
/// alpha = (d+1)(d-1)/2 (within 1e-8).
std::vector<HermitianOp> scaled_so(const LineFrame& lf);

/// Q_(m,j) = tr(tau_m^(j) rho), j-major.
struct QuasiDistribution {
  int d = 0;
  std::vector<double> q;
  double at(int m, int j) const { return q.at(j * d + m); }
};

/// rho must have unit trace to 1e-10.
QuasiDistribution quasi_distribution(const HermitianOp& rho, const PointFrame& pf);

/// (1/d)(sum_{(m,j) on mu} Q - 1) for every line, a-major.
std::vector<double> line_probabilities(const QuasiDistribution& q, const Dapg& geom);

}  // namespace mubsic

#endif  // MUBSIC_FRAMES_HPP
