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

#include "mubsic/align.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "mubsic/errors.hpp"
#include "mubsic/weyl_heisenberg.hpp"

namespace mubsic {

namespace {

int inverse_mod(int a, int d) {
  for (int x = 1; x < d; ++x)
    if (mod(static_cast<long long>(a) * x, d) == 1) return x;
  throw InvalidInput("inverse_mod: not invertible");
}

constexpr char kLetters[] = {'F', 'P', 'C'};

}  // namespace

int column_image(char g, int j, int d) {
  if (j < 0 || j > d) throw DimensionError("column_image: label out of range");
  switch (g) {
    case 'F':
      if (j == 0) return d;
      if (j == d) return 0;
      return mod(-inverse_mod(j, d), d);
    case 'P':
      return j == d ? d : (j + 1) % d;
    case 'C':
      return j == d ? d : mod(-j, d);
  }
  throw InvalidInput(std::string("column_image: unknown letter ") + g);
}

ComplexVector apply_word(const ComplexVector& ket, const std::string& word) {
  const int d = static_cast<int>(ket.size());
  require_odd_prime(d);
  const WeylPair wp = build_weyl_pair(d);
  ComplexVector v = ket;
  for (char g : word) {
    if (g == 'C') {
      v = v.conjugate().eval();
    } else if (g == 'P') {
      for (int n = 0; n < d; ++n) v(n) *= wp.power(static_cast<long long>(n) * (n - 1) / 2);
    } else if (g == 'F') {
      ComplexVector u = ComplexVector::Zero(d);
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) u(m) += wp.power(static_cast<long long>(m) * n) * v(n);
      v = u / std::sqrt(static_cast<double>(d));
    } else {
      throw InvalidInput(std::string("apply_word: unknown letter ") + g);
    }
  }
  return v;
}

std::optional<AlignedFiducial> align_columns(const Fiducial& f,
                                             const std::vector<std::vector<double>>& target,
                                             double tol) {
  const int d = f.d;
  require_odd_prime(d);
  if (static_cast<int>(target.size()) != d + 1)
    throw DimensionError("align_columns: need one target spectrum per column");
  const SpectraTable raw = orbit_spectra(f.ket);

  auto fits = [&](const std::vector<int>& p) {
    for (int j = 0; j <= d; ++j) {
      const auto& s = raw.at(0, j).values;
      const auto& t = target[p[j]];
      if (t.size() != s.size()) return false;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (std::abs(s[i] - t[i]) > tol) return false;
    }
    return true;
  };

  std::vector<int> start(d + 1);
  for (int j = 0; j <= d; ++j) start[j] = j;
  std::map<std::vector<int>, std::string> seen{{start, ""}};
  std::deque<std::vector<int>> queue{start};
  while (!queue.empty()) {
    const std::vector<int> p = queue.front();
    queue.pop_front();
    const std::string word = seen[p];
    if (fits(p)) {
      AlignedFiducial out;
      out.word = word;
      out.column_map = p;
      out.fiducial = make_fiducial(apply_word(f.ket, word), f.source);
      const SpectraTable aligned = orbit_spectra(out.fiducial.ket);
      for (int j = 0; j <= d; ++j)
        for (int i = 0; i < d; ++i)
          out.max_deviation = std::max(
              out.max_deviation, std::abs(aligned.at(0, j).values[i] - target[j][i]));
      if (out.max_deviation <= tol) return out;
      continue;  // permutation bookkeeping disagreed with the actual spectra
    }
    for (char g : kLetters) {
      std::vector<int> q(d + 1);
      for (int j = 0; j <= d; ++j) q[j] = column_image(g, p[j], d);
      if (seen.emplace(q, word + g).second) queue.push_back(std::move(q));
    }
  }
  return std::nullopt;
}

}  // namespace mubsic
