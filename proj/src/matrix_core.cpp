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

#include "mubsic/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mubsic/errors.hpp"

namespace mubsic {

double max_abs(const ComplexMatrix& m) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

void require_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() < 1 || m.rows() != m.cols())
    throw InvalidInput(std::string(what) + ": matrix must be square with dim >= 1");
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvalidInput(std::string(what) + ": non-finite entry");
  }
}

HermitianOp::HermitianOp(const ComplexMatrix& m, double admission_tol) {
  require_square_finite(m, "HermitianOp");
  const ComplexMatrix adj = m.adjoint();
  const double asym = max_abs(m - adj);
  if (asym > admission_tol)
    throw InvalidInput("HermitianOp: asymmetry " + std::to_string(asym) +
                       " exceeds admission tolerance");
  mat_ = 0.5 * (m + adj);
  for (Eigen::Index i = 0; i < mat_.rows(); ++i) mat_(i, i) = mat_(i, i).real();
  trace_ = mat_.trace().real();
}

HermitianOp HermitianOp::identity(int dim) {
  return HermitianOp(ComplexMatrix::Identity(dim, dim));
}

HermitianOp HermitianOp::zero(int dim) { return HermitianOp(ComplexMatrix::Zero(dim, dim)); }

HermitianOp HermitianOp::projector(const ComplexVector& v) {
  const double n2 = v.squaredNorm();
  if (!(n2 > 0) || !std::isfinite(n2)) throw InvalidInput("projector: zero or non-finite vector");
  return HermitianOp(v * v.adjoint() / n2);
}

HermitianOp HermitianOp::operator+(const HermitianOp& o) const {
  if (o.dim() != dim()) throw DimensionError("HermitianOp +: dimension mismatch");
  HermitianOp r = *this;
  r.mat_ += o.mat_;
  r.trace_ += o.trace_;
  return r;
}

HermitianOp HermitianOp::operator-(const HermitianOp& o) const {
  if (o.dim() != dim()) throw DimensionError("HermitianOp -: dimension mismatch");
  HermitianOp r = *this;
  r.mat_ -= o.mat_;
  r.trace_ -= o.trace_;
  return r;
}

HermitianOp HermitianOp::operator*(double s) const {
  HermitianOp r = *this;
  r.mat_ *= s;
  r.trace_ *= s;
  return r;
}

HermitianOp& HermitianOp::operator+=(const HermitianOp& o) {
  *this = *this + o;
  return *this;
}

HermitianOp HermitianOp::conjugated(const ComplexMatrix& u) const {
  if (u.rows() != dim() || u.cols() != dim())
    throw DimensionError("HermitianOp::conjugated: dimension mismatch");
  return HermitianOp(u * mat_ * u.adjoint(), 1e-10);
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

double hs_inner(const HermitianOp& a, const HermitianOp& b) {
  if (a.dim() != b.dim()) throw DimensionError("hs_inner: dimension mismatch");
  // tr(ab) = sum_ij a_ij b_ji
  return (a.mat().cwiseProduct(b.mat().transpose())).sum().real();
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Zeroes a(p,q) with U = D J, where D puts the phase of a(p,q) on column q and
// J is the real Jacobi rotation of the resulting real 2x2 problem.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex apq = a(p, q);
  const double b = std::abs(apq);
  if (b == 0.0) return;
  const Complex ph = apq / b;  // e^{i phi}
  const Complex phc = std::conj(ph);
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * b);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const int n = static_cast<int>(a.rows());
  // U_pp = c, U_pq = s, U_qp = -s e^{-i phi}, U_qq = c e^{-i phi}
  for (int k = 0; k < n; ++k) {  // A <- A U
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * phc * akq;
    a(k, q) = s * akp + c * phc * akq;
  }
  for (int k = 0; k < n; ++k) {  // A <- U^dagger A
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * ph * aqk;
    a(q, k) = s * apk + c * ph * aqk;
  }
  a(p, q) = a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (int k = 0; k < n; ++k) {  // V <- V U
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - s * phc * vkq;
    v(k, q) = s * vkp + c * phc * vkq;
  }
}

}  // namespace

Eigensystem hermitian_eigensystem(const HermitianOp& h, const JacobiOptions& opts) {
  const int n = h.dim();
  ComplexMatrix a = h.mat();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double scale = a.norm();
  const double target = opts.relative_threshold * scale;
  const int cap = opts.max_sweeps > 0 ? opts.max_sweeps : 100 * n * n;

  int sweeps = 0;
  double off = offdiag_norm(a);
  while (off > target) {
    if (sweeps >= cap)
      throw ConvergenceError("hermitian_eigensystem: sweep cap reached", off);
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweeps;
    off = offdiag_norm(a);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a(x, x).real() > a(y, y).real(); });

  Eigensystem es;
  es.spectrum.tol = opts.spectrum_tol;
  es.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    es.spectrum.values.push_back(a(order[k], order[k]).real());
    es.vectors.col(k) = v.col(order[k]);
  }
  Eigen::VectorXd lam(n);
  for (int k = 0; k < n; ++k) lam(k) = es.spectrum.values[k];
  es.residual = max_abs(h.mat() - es.vectors * lam.cast<Complex>().asDiagonal() *
                                      es.vectors.adjoint());
  es.sweeps = sweeps;
  return es;
}

int matrix_rank(const HermitianOp& h, double tol) {
  if (!(tol > 0)) throw InvalidInput("matrix_rank: tol must be positive");
  const auto es = hermitian_eigensystem(h);
  return static_cast<int>(std::count_if(es.spectrum.values.begin(), es.spectrum.values.end(),
                                        [tol](double x) { return std::abs(x) > tol; }));
}

double third_moment(const HermitianOp& h) {
  const ComplexMatrix& m = h.mat();
  return (m * m * m).trace().real();
}

Spectrum spectrum_of(const HermitianOp& h, double tol) {
  JacobiOptions o;
  o.spectrum_tol = tol;
  return hermitian_eigensystem(h, o).spectrum;
}

}  // namespace mubsic
