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

#include "mubsic/probability.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mubsic/errors.hpp"

namespace mubsic {

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw InvalidInput("probability vector: empty");
  double s = 0.0;
  for (double x : p_) {
    if (!std::isfinite(x) || x < -1e-12) throw InvalidInput("probability vector: negative entry");
    s += x;
  }
  if (std::abs(s - 1.0) > 1e-12) throw InvalidInput("probability vector: sum != 1");
}

namespace {

int num_lags(int d) { return d == 2 ? 2 : (d - 1) / 2 + 1; }

double target(int d, int m) { return (m == 0 ? 2.0 : 1.0) / (d + 1.0); }

double autocorr(const std::vector<double>& p, int m) {
  const int d = static_cast<int>(p.size());
  double s = 0.0;
  for (int k = 0; k < d; ++k) s += p[k] * p[(k + m) % d];
  return s;
}

// Euclidean projection onto the probability simplex.
void project_simplex(std::vector<double>& v) {
  std::vector<double> u(v);
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    const double t = (css - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0) theta = t;
  }
  for (double& x : v) x = std::max(0.0, x - theta);
}

double objective(const std::vector<double>& p) {
  const int d = static_cast<int>(p.size());
  double f = 0.0;
  for (int m = 0; m < num_lags(d); ++m) {
    const double r = autocorr(p, m) - target(d, m);
    f += r * r;
  }
  return f;
}

std::vector<double> gradient(const std::vector<double>& p) {
  const int d = static_cast<int>(p.size());
  std::vector<double> g(d, 0.0);
  for (int m = 0; m < num_lags(d); ++m) {
    const double r = autocorr(p, m) - target(d, m);
    for (int i = 0; i < d; ++i) g[i] += 2.0 * r * (p[(i + m) % d] + p[mod(i - m, d)]);
  }
  return g;
}

// Gauss-Newton on the active (nonzero) coordinates with the sum constraint.
bool polish(std::vector<double>& p, double tol) {
  const int d = static_cast<int>(p.size());
  std::vector<int> free;
  for (int i = 0; i < d; ++i)
    if (p[i] > 1e-7) free.push_back(i);
    else p[i] = 0.0;
  const int nl = num_lags(d);
  for (int it = 0; it < 50; ++it) {
    Eigen::MatrixXd J(nl + 1, free.size());
    Eigen::VectorXd r(nl + 1);
    for (int m = 0; m < nl; ++m) {
      r(m) = autocorr(p, m) - target(d, m);
      for (std::size_t c = 0; c < free.size(); ++c) {
        const int i = free[c];
        J(m, c) = p[(i + m) % d] + p[mod(i - m, d)];
      }
    }
    double s = 0.0;
    for (double x : p) s += x;
    r(nl) = s - 1.0;
    J.row(nl).setOnes();
    if (r.cwiseAbs().maxCoeff() <= tol) break;
    const Eigen::VectorXd step = J.completeOrthogonalDecomposition().solve(r);
    for (std::size_t c = 0; c < free.size(); ++c) p[free[c]] -= step(c);
  }
  for (double x : p)
    if (x < -1e-12) return false;
  for (double& x : p) x = std::max(0.0, x);
  double s = 0.0;
  for (double x : p) s += x;
  for (double& x : p) x /= s;
  return cyclic_residual(p) <= tol;
}

// Lexicographically largest of the 2d shifts/reflections, rounded for dedup.
std::vector<double> canonical(const std::vector<double>& p) {
  const int d = static_cast<int>(p.size());
  std::vector<double> best;
  for (int refl = 0; refl < 2; ++refl)
    for (int s = 0; s < d; ++s) {
      std::vector<double> v(d);
      for (int k = 0; k < d; ++k) v[k] = p[mod(refl ? s - k : s + k, d)];
      if (best.empty() || v > best) best = v;
    }
  return best;
}

bool same(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-6) return false;
  return true;
}

}  // namespace

double cyclic_residual(const std::vector<double>& p) {
  const int d = static_cast<int>(p.size());
  double r = 0.0;
  for (int m = 0; m < num_lags(d); ++m) r = std::max(r, std::abs(autocorr(p, m) - target(d, m)));
  return r;
}

std::vector<double> QutritFamily::at(double p1) const {
  if (p1 < p1_min || p1 > p1_max) throw InvalidInput("qutrit family: p1 outside [0, 2/3]");
  const double p0 = (1.0 - p1 + std::sqrt(std::max(0.0, 2.0 * p1 - 3.0 * p1 * p1))) / 2.0;
  return {p0, p1, std::max(0.0, 1.0 - p0 - p1)};
}

CyclicSolution solve_cyclic_probability(int d, const CyclicSolveOptions& opts) {
  require_prime(d);
  CyclicSolution out;
  out.d = d;
  if (d == 2) {
    const double p = (3.0 + std::sqrt(3.0)) / 6.0;
    out.solutions.emplace_back(std::vector<double>{p, 1.0 - p});
    out.solutions.emplace_back(std::vector<double>{1.0 - p, p});
    out.closed_form = true;
    out.scope = "complete: the only solution and its swap";
    return out;
  }
  if (d == 3) {
    out.family = QutritFamily{};
    out.solutions.emplace_back(std::vector<double>{0.5, 0.5, 0.0});
    out.closed_form = true;
    out.scope = "one-parameter family p0(p1), p1 in [0, 2/3]; (1/2, 1/2, 0) distinguished";
    return out;
  }

  std::mt19937_64 rng(opts.seed);
  std::gamma_distribution<double> gam(1.0, 1.0);
  std::vector<std::vector<double>> found;
  for (int a = 0; a < opts.attempts; ++a) {
    ++out.attempts;
    std::vector<double> p(d);
    double s = 0.0;
    for (double& x : p) s += (x = gam(rng));
    for (double& x : p) x /= s;

    double f = objective(p), step = 0.5;
    for (int it = 0; it < opts.max_iters && f > 1e-16; ++it) {
      const auto g = gradient(p);
      bool moved = false;
      for (int bt = 0; bt < 40; ++bt) {
        std::vector<double> q(p);
        for (int i = 0; i < d; ++i) q[i] -= step * g[i];
        project_simplex(q);
        const double fq = objective(q);
        if (fq < f) {
          p = std::move(q);
          f = fq;
          step *= 1.5;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    if (f > 1e-8 || !polish(p, opts.residual_tol)) continue;
    auto c = canonical(p);
    if (std::none_of(found.begin(), found.end(), [&](const auto& x) { return same(x, c); }))
      found.push_back(std::move(c));
  }
  if (found.empty())
    throw ConvergenceError("solve_cyclic_probability: no solution within budget", 0.0);
  std::sort(found.begin(), found.end(), std::greater<>());
  for (auto& x : found) out.solutions.emplace_back(std::move(x));
  out.scope = "cyclic ansatz only; local solves from seeded random starts, not exhaustive";
  return out;
}

HermitianOp diagonal_in_basis(const MubFamily& mub, int b, const std::vector<double>& p) {
  if (static_cast<int>(p.size()) != mub.d) throw DimensionError("diagonal_in_basis: length != d");
  HermitianOp h = HermitianOp::zero(mub.d);
  for (int k = 0; k < mub.d; ++k) h += HermitianOp::projector(mub.ket(k, b)) * p[k];
  return h;
}

FiducialCandidate fiducial_from_mu_pom(const MubFamily& mub, const std::vector<HermitianOp>& taus,
                                       double diag_tol) {
  const int d = mub.d;
  if (static_cast<int>(taus.size()) != d + 1)
    throw DimensionError("fiducial_from_mu_pom: need one operator per basis (d+1)");
  HermitianOp sum = HermitianOp::zero(d);
  for (int b = 0; b <= d; ++b) {
    if (taus[b].dim() != d) throw DimensionError("fiducial_from_mu_pom: operator size != d");
    ComplexMatrix u(d, d);
    for (int k = 0; k < d; ++k) u.col(k) = mub.ket(k, b);
    ComplexMatrix in_basis = u.adjoint() * taus[b].mat() * u;
    in_basis.diagonal().setZero();
    if (max_abs(in_basis) > diag_tol)
      throw InvalidInput("fiducial_from_mu_pom: operator " + std::to_string(b) +
                         " is not diagonal in its basis");
    sum += taus[b];
  }

  FiducialCandidate c;
  c.lambda0 = sum - HermitianOp::identity(d);
  c.sum_spectrum = spectrum_of(sum);
  const Eigensystem es = hermitian_eigensystem(c.lambda0);
  c.lambda_spectrum = es.spectrum;
  c.rank = matrix_rank(c.lambda0);
  c.third_moment = third_moment(c.lambda0);
  for (int k = 0; k < d; ++k)
    c.sum_rule_deviation =
        std::max(c.sum_rule_deviation, std::abs(c.sum_spectrum.values[k] - (k == 0 ? 2.0 : 1.0)));
  c.rank_one = c.rank == 1 && std::abs(c.third_moment - 1.0) <= 1e-8 &&
               std::abs(c.lambda0.trace() - 1.0) <= 1e-8;
  if (c.rank_one)
    c.fiducial = make_fiducial(es.vectors.col(0), FiducialSource::ClosedForm);
  return c;
}

}  // namespace mubsic
