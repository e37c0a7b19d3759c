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

#include "mubsic/search.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "mubsic/errors.hpp"
#include "mubsic/weyl_heisenberg.hpp"

namespace mubsic {

void SearchConfig::validate() const {
  if (restarts < 1) throw InvalidInput("search: restarts must be >= 1");
  if (!(objective_tol > 0)) throw InvalidInput("search: objective_tol must be > 0");
  if (max_iters < 1 || memory < 1 || max_backtracks < 1)
    throw InvalidInput("search: iteration budgets must be positive");
}

namespace {

// c(a,b) = <psi| X^a Z^b |psi> = sum_n conj(psi_{n+a}) w^{bn} psi_n
struct Overlaps {
  int d;
  std::vector<Complex> w;  // w^k, k = 0..d-1
  std::vector<Complex> c;  // a-major

  explicit Overlaps(const ComplexVector& psi) : d(static_cast<int>(psi.size())) {
    for (int k = 0; k < d; ++k) w.push_back(std::polar(1.0, 2.0 * kPi * k / d));
    c.assign(d * d, Complex(0.0));
    for (int a = 0; a < d; ++a)
      for (int n = 0; n < d; ++n) {
        const Complex v = std::conj(psi((n + a) % d)) * psi(n);
        for (int b = 0; b < d; ++b) c[a * d + b] += v * w[(b * n) % d];
      }
  }
};

double objective_of(const Overlaps& o) {
  const double t = 1.0 / (o.d + 1.0);
  double f = 0.0;
  for (std::size_t i = 1; i < o.c.size(); ++i) {
    const double r = std::norm(o.c[i]) - t;
    f += r * r;
  }
  return f;
}

// Unprojected dF/d(conj psi) = sum 2 r (conj(c) D psi + c D^dagger psi).
ComplexVector raw_gradient(const ComplexVector& psi, const Overlaps& o) {
  const int d = o.d;
  const double t = 1.0 / (d + 1.0);
  ComplexVector g = ComplexVector::Zero(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (!a && !b) continue;
      const Complex c = o.c[a * d + b];
      const double r2 = 2.0 * (std::norm(c) - t);
      for (int n = 0; n < d; ++n) {
        // (D psi)_{n+a} = w^{bn} psi_n ; (D^dag psi)_n = w^{-bn} psi_{n+a}
        g((n + a) % d) += r2 * std::conj(c) * o.w[(b * n) % d] * psi(n);
        g(n) += r2 * c * std::conj(o.w[(b * n) % d]) * psi((n + a) % d);
      }
    }
  return g;
}

ComplexVector tangent(const ComplexVector& u, const ComplexVector& g) {
  return g - u.dot(g).real() * u;
}

// Scale-invariant real parametrization: x in R^{2d}, psi = x / |x|.
Eigen::VectorXd to_real(const ComplexVector& z) {
  const int d = static_cast<int>(z.size());
  Eigen::VectorXd x(2 * d);
  x.head(d) = z.real();
  x.tail(d) = z.imag();
  return x;
}

ComplexVector to_complex(const Eigen::VectorXd& x) {
  const int d = static_cast<int>(x.size() / 2);
  ComplexVector z(d);
  for (int i = 0; i < d; ++i) z(i) = Complex(x(i), x(d + i));
  return z;
}

double value(const Eigen::VectorXd& x) { return objective_of(Overlaps(to_complex(x).normalized())); }

double value_grad(const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
  const double nx = x.norm();
  const ComplexVector u = to_complex(x) / nx;
  const Overlaps o(u);
  grad = to_real(tangent(u, raw_gradient(u, o))) * (2.0 / nx);
  return objective_of(o);
}

// Plain Nelder-Mead on the 2d reals; used when the quasi-Newton line search
// stalls above the success threshold.
Eigen::VectorXd nelder_mead(Eigen::VectorXd x0, int iters) {
  const int n = static_cast<int>(x0.size());
  std::vector<Eigen::VectorXd> s(n + 1, x0);
  std::vector<double> f(n + 1);
  for (int i = 0; i < n; ++i) s[i + 1](i) += 0.05;
  for (int i = 0; i <= n; ++i) f[i] = value(s[i]);
  std::vector<int> idx(n + 1);
  for (int it = 0; it < iters; ++it) {
    for (int i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return f[a] < f[b]; });
    const int hi = idx[n], lo = idx[0];
    Eigen::VectorXd cen = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) cen += s[idx[i]];
    cen /= n;
    const Eigen::VectorXd xr = cen + (cen - s[hi]);
    const double fr = value(xr);
    if (fr < f[lo]) {
      const Eigen::VectorXd xe = cen + 2.0 * (cen - s[hi]);
      const double fe = value(xe);
      if (fe < fr) s[hi] = xe, f[hi] = fe;
      else s[hi] = xr, f[hi] = fr;
    } else if (fr < f[idx[n - 1]]) {
      s[hi] = xr, f[hi] = fr;
    } else {
      const Eigen::VectorXd xc = cen + 0.5 * (s[hi] - cen);
      const double fc = value(xc);
      if (fc < f[hi]) {
        s[hi] = xc, f[hi] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          s[idx[i]] = s[lo] + 0.5 * (s[idx[i]] - s[lo]);
          f[idx[i]] = value(s[idx[i]]);
        }
      }
    }
  }
  return s[std::min_element(f.begin(), f.end()) - f.begin()];
}

RestartOutcome descend(const ComplexVector& start, const SearchConfig& cfg, int restart) {
  Eigen::VectorXd x = to_real(start.normalized());
  Eigen::VectorXd g;
  double f = value_grad(x, g);
  std::deque<std::pair<Eigen::VectorXd, Eigen::VectorXd>> mem;
  RestartOutcome out;
  int stalls = 0;
  for (int it = 0; it < cfg.max_iters; ++it) {
    if (f <= cfg.converge_tol || g.norm() <= cfg.grad_tol) break;

    // two-loop recursion
    Eigen::VectorXd q = g;
    std::vector<double> alpha(mem.size());
    for (int i = static_cast<int>(mem.size()) - 1; i >= 0; --i) {
      alpha[i] = mem[i].first.dot(q) / mem[i].second.dot(mem[i].first);
      q -= alpha[i] * mem[i].second;
    }
    if (!mem.empty()) {
      const auto& [s, y] = mem.back();
      q *= s.dot(y) / y.dot(y);
    } else {
      q *= std::min(1.0, 0.1 / g.norm());
    }
    for (std::size_t i = 0; i < mem.size(); ++i) {
      const double beta = mem[i].second.dot(q) / mem[i].second.dot(mem[i].first);
      q += (alpha[i] - beta) * mem[i].first;
    }
    Eigen::VectorXd dir = -q;
    double slope = g.dot(dir);
    if (!(slope < 0)) {
      mem.clear();
      dir = -g * std::min(1.0, 0.1 / g.norm());
      slope = g.dot(dir);
    }

    double step = 1.0, fn = 0.0;
    Eigen::VectorXd xn, gn;
    bool accepted = false;
    for (int bt = 0; bt < cfg.max_backtracks; ++bt, step *= 0.5) {
      xn = x + step * dir;
      fn = value_grad(xn, gn);
      if (fn <= f + cfg.armijo * step * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (!mem.empty()) {
        mem.clear();
        continue;
      }
      if (f <= cfg.objective_tol || cfg.nelder_mead_iters <= 0 || ++stalls > 2) break;
      x = nelder_mead(x, cfg.nelder_mead_iters);
      x.normalize();
      f = value_grad(x, g);
      out.used_fallback = true;
      continue;
    }

    const Eigen::VectorXd s = xn - x, y = gn - g;
    if (s.dot(y) > 1e-12 * s.norm() * y.norm()) {
      mem.emplace_back(s, y);
      if (static_cast<int>(mem.size()) > cfg.memory) mem.pop_front();
    }
    x = std::move(xn);
    g = std::move(gn);
    f = fn;
    const double nx = x.norm();
    if (nx < 0.5 || nx > 2.0) {
      x /= nx;
      f = value_grad(x, g);
      mem.clear();
    }
    out.iterations = it + 1;
    if (cfg.observer) cfg.observer(restart, it, to_complex(x).normalized(), f);
  }
  out.ket = to_complex(x).normalized();
  out.objective = sic_objective(out.ket);
  return out;
}

}  // namespace

double sic_objective(const ComplexVector& ket) {
  require_prime(static_cast<int>(ket.size()));
  return objective_of(Overlaps(ket.normalized()));
}

ComplexVector sic_objective_gradient(const ComplexVector& ket) {
  require_prime(static_cast<int>(ket.size()));
  const ComplexVector u = ket.normalized();
  return tangent(u, raw_gradient(u, Overlaps(u)));
}

RestartOutcome polish_ket(const ComplexVector& ket, const SearchConfig& cfg) {
  cfg.validate();
  require_prime(static_cast<int>(ket.size()));
  return descend(ket, cfg, 0);
}

SearchResult search_fiducial(int d, const SearchConfig& cfg) {
  require_prime(d);
  cfg.validate();
  SearchResult res;
  res.d = d;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    ComplexVector start(d);
    for (int i = 0; i < d; ++i) start(i) = Complex(normal(rng), normal(rng));
    res.restarts.push_back(descend(start, cfg, r));
    const double fr = res.restarts.back().objective;
    if (res.best_restart < 0 || fr < res.objective) {
      res.best_restart = r;
      res.objective = fr;
    }
    if (cfg.stop_at_first_success && fr <= cfg.objective_tol) break;
  }
  res.best = make_fiducial(res.restarts[res.best_restart].ket, FiducialSource::Searched);
  res.success = res.objective <= cfg.objective_tol;
  return res;
}

}  // namespace mubsic
