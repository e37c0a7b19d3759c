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

#include "mubsic/frames.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mubsic/errors.hpp"

namespace mubsic {

namespace {

std::vector<HermitianOp> lift(int d, const std::vector<HermitianOp>& traceless) {
  const HermitianOp one = HermitianOp::identity(d);
  std::vector<HermitianOp> out;
  out.reserve(traceless.size());
  for (const auto& t : traceless) out.push_back((one + t) * (1.0 / d));
  return out;
}

std::vector<HermitianOp> unlift(int d, const std::vector<HermitianOp>& trace_one) {
  const HermitianOp one = HermitianOp::identity(d);
  std::vector<HermitianOp> out;
  out.reserve(trace_one.size());
  for (const auto& tau : trace_one) out.push_back(tau * static_cast<double>(d) - one);
  return out;
}

void check_ops(int d, const std::vector<HermitianOp>& ops, std::size_t count, const char* what) {
  if (ops.size() != count)
    throw DimensionError(std::string(what) + ": expected " + std::to_string(count) +
                         " operators, got " + std::to_string(ops.size()));
  for (const auto& o : ops)
    if (o.dim() != d) throw DimensionError(std::string(what) + ": operator dimension mismatch");
}

}  // namespace

PointFrame::PointFrame(int d, double beta, std::vector<HermitianOp> traceless)
    : d_(d), beta_(beta), t_(std::move(traceless)) {
  check_ops(d, t_, static_cast<std::size_t>(d) * (d + 1), "PointFrame");
  tau_ = lift(d, t_);
}

PointFrame PointFrame::from_trace_one(int d, double beta, const std::vector<HermitianOp>& tau) {
  check_ops(d, tau, static_cast<std::size_t>(d) * (d + 1), "PointFrame");
  return PointFrame(d, beta, unlift(d, tau));
}

LineFrame::LineFrame(int d, double alpha, std::vector<HermitianOp> traceless)
    : d_(d), alpha_(alpha), l_(std::move(traceless)) {
  check_ops(d, l_, static_cast<std::size_t>(d) * d, "LineFrame");
  lambda_ = lift(d, l_);
}

LineFrame LineFrame::from_trace_one(int d, double alpha, const std::vector<HermitianOp>& lambda) {
  check_ops(d, lambda, static_cast<std::size_t>(d) * d, "LineFrame");
  return LineFrame(d, alpha, unlift(d, lambda));
}

SimplexVectors build_simplex_vectors(int d) {
  require_odd_prime(d);
  SimplexVectors sv;
  sv.d = d;
  const int half = (d - 1) / 2;
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXd v(d - 1);
    for (int r = 1; r <= half; ++r) {
      const double ang = 2.0 * kPi * k * r / d;
      v(2 * (r - 1)) = std::cos(ang);
      v(2 * (r - 1) + 1) = std::sin(ang);
    }
    sv.vectors.push_back(std::move(v));
  }
  return sv;
}

PointFrame point_frame_from_mub(const MubFamily& mub, double tol) {
  const int d = mub.d;
  if (static_cast<int>(mub.bases.size()) != d + 1)
    throw DimensionError("point_frame_from_mub: need d+1 bases");
  const double dev = verify_mub(mub);
  if (dev > tol) throw VerificationError("point_frame_from_mub: MUB verification failed", dev);
  std::vector<HermitianOp> tau;
  for (int j = 0; j <= d; ++j)
    for (int m = 0; m < d; ++m) tau.push_back(HermitianOp::projector(mub.ket(m, j)));
  return PointFrame::from_trace_one(d, static_cast<double>(d) * (d - 1), tau);
}

PointFrame point_frame_from_hg(const HGBasis& basis) {
  const int d = basis.d;
  const double z2 = basis.zeta_modulus * basis.zeta_modulus;
  if (std::abs(z2 * 2.0 * d - 1.0) > 1e-12)
    throw InvalidInput("point_frame_from_hg: |zeta|^2 must equal 1/(2d)");
  std::vector<HermitianOp> t;
  for (int j = 0; j <= d; ++j)
    for (int m = 0; m < d; ++m) {
      HermitianOp f = HermitianOp::zero(d);
      for (int k = 1; k <= basis.half(); ++k) {
        const double ang = 2.0 * kPi * k * m / d;
        f += basis.h[j][k - 1] * std::cos(ang) + basis.g[j][k - 1] * std::sin(ang);
      }
      t.push_back(std::move(f));
    }
  return PointFrame(d, (d - 1) / 2.0, std::move(t));
}

LineFrame line_ops_from_points(const PointFrame& pf, const Dapg& geom) {
  const int d = pf.d();
  if (geom.order() != d) throw DimensionError("line_ops_from_points: order mismatch");
  std::vector<HermitianOp> l;
  for (int li = 0; li < geom.num_lines(); ++li) {
    HermitianOp s = HermitianOp::zero(d);
    for (const auto& p : geom.incidence()[li]) s += pf.t(p.m, p.j);
    l.push_back(std::move(s));
  }
  return LineFrame(d, pf.beta() * (d + 1), std::move(l));
}

PointFrame point_ops_from_lines(const LineFrame& lf, const Dapg& geom) {
  const int d = lf.d();
  if (geom.order() != d) throw DimensionError("point_ops_from_lines: order mismatch");
  std::vector<HermitianOp> t;
  for (int pi = 0; pi < geom.num_points(); ++pi) {
    const DapgPoint p = geom.point_at(pi);
    HermitianOp s = HermitianOp::zero(d);
    for (const auto& ln : geom.lines_through(p)) s += lf.l(ln.a, ln.b);
    t.push_back(s * (1.0 / d));
  }
  return PointFrame(d, lf.alpha() / (d + 1), std::move(t));
}

double verify_point_frame(const PointFrame& pf) {
  const int d = pf.d();
  const double beta = pf.beta();
  double dev = 0.0;
  for (int j = 0; j <= d; ++j) {
    HermitianOp sum = HermitianOp::zero(d);
    for (int m = 0; m < d; ++m) {
      sum += pf.t(m, j);
      for (int j2 = 0; j2 <= d; ++j2)
        for (int m2 = 0; m2 < d; ++m2) {
          double target = 0.0;
          if (j == j2) target = (m == m2) ? beta : -beta / (d - 1);
          dev = std::max(dev, std::abs(hs_inner(pf.t(m, j), pf.t(m2, j2)) - target));
        }
    }
    dev = std::max(dev, max_abs(sum.mat()));
  }
  return dev;
}

double verify_line_frame(const LineFrame& lf) {
  const int d = lf.d();
  const double alpha = lf.alpha();
  const auto& l = lf.traceless();
  double dev = 0.0;
  HermitianOp sum = HermitianOp::zero(d);
  for (std::size_t x = 0; x < l.size(); ++x) {
    sum += l[x];
    for (std::size_t y = 0; y < l.size(); ++y) {
      const double target = (x == y) ? alpha : -alpha / (d * d - 1.0);
      dev = std::max(dev, std::abs(hs_inner(l[x], l[y]) - target));
    }
  }
  return std::max(dev, max_abs(sum.mat()));
}

PointLineReport verify_point_line_products(const PointFrame& pf, const LineFrame& lf,
                                           const Dapg& geom) {
  const int d = pf.d();
  if (lf.d() != d || geom.order() != d)
    throw DimensionError("verify_point_line_products: order mismatch");
  const double beta = pf.beta();
  const double on_t = beta, off_t = -beta / (d - 1);
  PointLineReport r;
  r.on_line_value = (d + on_t) / (static_cast<double>(d) * d);
  r.off_line_value = (d + off_t) / (static_cast<double>(d) * d);
  for (int li = 0; li < geom.num_lines(); ++li) {
    const DapgLine ln = geom.line_at(li);
    for (int pi = 0; pi < geom.num_points(); ++pi) {
      const DapgPoint p = geom.point_at(pi);
      const bool on = geom.contains(ln, p);
      const double tl = hs_inner(pf.t(p.m, p.j), lf.l(ln.a, ln.b));
      const double tt = hs_inner(pf.tau(p.m, p.j), lf.lambda(ln.a, ln.b));
      r.traceless_deviation = std::max(r.traceless_deviation, std::abs(tl - (on ? on_t : off_t)));
      r.trace_one_deviation =
          std::max(r.trace_one_deviation,
                   std::abs(tt - (on ? r.on_line_value : r.off_line_value)));
    }
  }
  return r;
}

std::vector<HermitianOp> scaled_so(const LineFrame& lf) {
  const int d = lf.d();
  const double expected = (d + 1.0) * (d - 1.0) / 2.0;
  if (std::abs(lf.alpha() - expected) > 1e-8)
    throw InvalidInput("scaled_so: line frame alpha must be (d+1)(d-1)/2");
  const double c = std::sqrt(2.0 * d / (d + 1.0));
  const HermitianOp one = HermitianOp::identity(d);
  std::vector<HermitianOp> out;
  for (const auto& l : lf.traceless()) out.push_back((one + l * c) * (1.0 / d));
  return out;
}

QuasiDistribution quasi_distribution(const HermitianOp& rho, const PointFrame& pf) {
  if (rho.dim() != pf.d()) throw DimensionError("quasi_distribution: dimension mismatch");
  if (std::abs(rho.trace() - 1.0) > 1e-10)
    throw InvalidInput("quasi_distribution: rho must have unit trace");
  QuasiDistribution q;
  q.d = pf.d();
  for (const auto& tau : pf.trace_one()) q.q.push_back(hs_inner(tau, rho));
  return q;
}

std::vector<double> line_probabilities(const QuasiDistribution& q, const Dapg& geom) {
  if (geom.order() != q.d) throw DimensionError("line_probabilities: order mismatch");
  std::vector<double> p;
  for (const auto& pts : geom.incidence()) {
    double s = 0.0;
    for (const auto& pt : pts) s += q.at(pt.m, pt.j);
    p.push_back((s - 1.0) / q.d);
  }
  return p;
}

}  // namespace mubsic
