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

#include "mubsic/finite_plane.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mubsic/errors.hpp"
#include "mubsic/weyl_heisenberg.hpp"

namespace mubsic {

Apg build_apg(int d) {
  require_prime(d);
  Apg g;
  g.d = d;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      std::vector<int> line;
      for (int x = 0; x < d; ++x) line.push_back(x * d + mod(static_cast<long long>(a) * x + b, d));
      g.lines.push_back(std::move(line));
    }
  for (int c = 0; c < d; ++c) {
    std::vector<int> line;
    for (int y = 0; y < d; ++y) line.push_back(c * d + y);
    g.lines.push_back(std::move(line));
  }
  return g;
}

Dapg::Dapg(int d, std::vector<std::vector<DapgPoint>> incidence)
    : d_(d), incidence_(std::move(incidence)) {
  if (d < 2) throw InvalidInput("Dapg: order must be >= 2");
  const int np = num_points();
  through_.assign(np, {});
  member_.assign(incidence_.size(), std::vector<char>(np, 0));
  for (int l = 0; l < num_lines(); ++l) {
    auto& pts = incidence_[l];
    for (const auto& p : pts)
      if (p.m < 0 || p.m >= d || p.j < 0 || p.j > d)
        throw DimensionError("Dapg: point label out of range");
    std::sort(pts.begin(), pts.end(),
              [](DapgPoint x, DapgPoint y) { return x.j != y.j ? x.j < y.j : x.m < y.m; });
    for (const auto& p : pts) {
      const int pi = point_index(p);
      if (!member_[l][pi]) through_[pi].push_back(l);
      member_[l][pi] = 1;
    }
  }
}

int Dapg::point_index(DapgPoint p) const {
  if (p.m < 0 || p.m >= d_ || p.j < 0 || p.j > d_)
    throw DimensionError("Dapg: point label out of range");
  return p.j * d_ + p.m;
}

int Dapg::line_index(DapgLine l) const {
  if (l.a < 0 || l.a >= d_ || l.b < 0 || l.b >= d_)
    throw DimensionError("Dapg: line label out of range");
  const int idx = l.a * d_ + l.b;
  if (idx >= num_lines()) throw DimensionError("Dapg: line label out of range");
  return idx;
}

const std::vector<DapgPoint>& Dapg::points_on(DapgLine l) const {
  return incidence_[line_index(l)];
}

std::vector<DapgLine> Dapg::lines_through(DapgPoint p) const {
  std::vector<DapgLine> out;
  for (int l : through_[point_index(p)]) out.push_back(line_at(l));
  return out;
}

bool Dapg::contains(DapgLine l, DapgPoint p) const {
  return member_[line_index(l)][point_index(p)] != 0;
}

bool Dapg::operator==(const Dapg& o) const { return d_ == o.d_ && incidence_ == o.incidence_; }

Dapg build_dapg(int d) {
  require_prime(d);
  std::vector<std::vector<DapgPoint>> inc;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      std::vector<DapgPoint> pts;
      for (int j = 0; j < d; ++j) pts.push_back({mod(a + static_cast<long long>(j) * b, d), j});
      pts.push_back({b, d});
      inc.push_back(std::move(pts));
    }
  return Dapg(d, std::move(inc));
}

IncidenceReport verify_incidence(const Dapg& p) {
  IncidenceReport r;
  const int d = p.order();
  r.num_points = p.num_points();
  r.num_lines = p.num_lines();
  auto& v = r.violations;
  if (r.num_lines != d * d)
    v.push_back("expected " + std::to_string(d * d) + " lines, found " + std::to_string(r.num_lines));

  const auto& inc = p.incidence();
  for (int l = 0; l < r.num_lines; ++l) {
    if (static_cast<int>(inc[l].size()) != d + 1)
      v.push_back("line " + std::to_string(l) + " contains " + std::to_string(inc[l].size()) +
                  " points, expected d+1");
    std::vector<int> per_col(d + 1, 0);
    for (const auto& pt : inc[l]) ++per_col[pt.j];
    for (int j = 0; j <= d; ++j)
      if (per_col[j] != 1)
        v.push_back("line " + std::to_string(l) + " meets column " + std::to_string(j) + " in " +
                    std::to_string(per_col[j]) + " points");
  }

  std::vector<int> degree(r.num_points, 0);
  for (const auto& pts : inc)
    for (const auto& pt : pts) ++degree[p.point_index(pt)];
  for (int i = 0; i < r.num_points; ++i)
    if (degree[i] != d)
      v.push_back("point " + std::to_string(i) + " lies on " + std::to_string(degree[i]) +
                  " lines, expected d");

  for (int l1 = 0; l1 < r.num_lines; ++l1)
    for (int l2 = l1 + 1; l2 < r.num_lines; ++l2) {
      int common = 0;
      for (const auto& pt : inc[l1])
        if (std::find(inc[l2].begin(), inc[l2].end(), pt) != inc[l2].end()) ++common;
      if (common > 1)
        v.push_back("two lines meet in > 1 point (" + std::to_string(l1) + ", " +
                    std::to_string(l2) + ")");
      else if (common == 0)
        v.push_back("two lines do not meet (" + std::to_string(l1) + ", " + std::to_string(l2) +
                    ")");
    }

  for (const auto& pts : inc)
    for (std::size_t x = 0; x < pts.size(); ++x)
      for (std::size_t y = x + 1; y < pts.size(); ++y)
        if (pts[x].j == pts[y].j && !(pts[x] == pts[y]))
          v.push_back("two points of column " + std::to_string(pts[x].j) + " share a line");
  return r;
}

IncidenceReport verify_apg(const Apg& p) {
  IncidenceReport r;
  const int d = p.d;
  r.num_points = p.num_points();
  r.num_lines = p.num_lines();
  auto& v = r.violations;
  if (r.num_lines != d * (d + 1)) v.push_back("expected d(d+1) lines");
  std::vector<std::set<int>> sets;
  for (const auto& l : p.lines) {
    sets.emplace_back(l.begin(), l.end());
    if (static_cast<int>(sets.back().size()) != d) v.push_back("line without d distinct points");
  }
  std::vector<int> degree(r.num_points, 0);
  for (const auto& s : sets)
    for (int x : s) ++degree[x];
  for (int x = 0; x < r.num_points; ++x)
    if (degree[x] != d + 1) v.push_back("point " + std::to_string(x) + " not on d+1 lines");
  for (int x = 0; x < r.num_points; ++x)
    for (int y = x + 1; y < r.num_points; ++y) {
      int joins = 0;
      for (const auto& s : sets) joins += s.count(x) && s.count(y);
      if (joins != 1)
        v.push_back("points " + std::to_string(x) + ", " + std::to_string(y) + " joined by " +
                    std::to_string(joins) + " lines");
    }
  // through a point off a line there is exactly one parallel
  for (std::size_t l = 0; l < sets.size(); ++l)
    for (int x = 0; x < r.num_points; ++x) {
      if (sets[l].count(x)) continue;
      int parallels = 0;
      for (std::size_t k = 0; k < sets.size(); ++k) {
        if (!sets[k].count(x)) continue;
        bool meets = false;
        for (int y : sets[k]) meets = meets || sets[l].count(y);
        parallels += !meets;
      }
      if (parallels != 1) v.push_back("parallel axiom fails at line " + std::to_string(l));
    }
  return r;
}

IncidenceFormat parse_incidence_format(std::string_view token) {
  if (token == "dot") return IncidenceFormat::Dot;
  if (token == "json") return IncidenceFormat::Json;
  throw InvalidInput("unknown export format '" + std::string(token) + "' (expected dot|json)");
}

std::string export_incidence(const Dapg& p, IncidenceFormat fmt) {
  const int d = p.order();
  if (fmt == IncidenceFormat::Json) {
    nlohmann::json j;
    j["kind"] = "dapg";
    j["d"] = d;
    j["points"] = nlohmann::json::array();
    for (int i = 0; i < p.num_points(); ++i) {
      const auto pt = p.point_at(i);
      j["points"].push_back({pt.m, pt.j});
    }
    j["lines"] = nlohmann::json::array();
    j["incidence"] = nlohmann::json::array();
    for (int l = 0; l < p.num_lines(); ++l) {
      const auto ln = p.line_at(l);
      j["lines"].push_back({ln.a, ln.b});
      for (const auto& pt : p.incidence()[l]) j["incidence"].push_back({p.point_index(pt), l});
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "graph dapg_" << d << " {\n";
  for (int i = 0; i < p.num_points(); ++i) {
    const auto pt = p.point_at(i);
    os << "  p_" << pt.j << "_" << pt.m << " [shape=circle, label=\"(" << pt.m << "," << pt.j
       << ")\"];\n";
  }
  for (int l = 0; l < p.num_lines(); ++l) {
    const auto ln = p.line_at(l);
    os << "  l_" << ln.a << "_" << ln.b << " [shape=box, label=\"[" << ln.a << "," << ln.b
       << "]\"];\n";
  }
  for (int l = 0; l < p.num_lines(); ++l) {
    const auto ln = p.line_at(l);
    for (const auto& pt : p.incidence()[l])
      os << "  p_" << pt.j << "_" << pt.m << " -- l_" << ln.a << "_" << ln.b << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_incidence(const Apg& p, IncidenceFormat fmt) {
  const int d = p.d;
  if (fmt == IncidenceFormat::Json) {
    nlohmann::json j;
    j["kind"] = "apg";
    j["d"] = d;
    j["points"] = nlohmann::json::array();
    for (int i = 0; i < p.num_points(); ++i) j["points"].push_back({i / d, i % d});
    j["lines"] = p.lines;
    j["incidence"] = nlohmann::json::array();
    for (int l = 0; l < p.num_lines(); ++l)
      for (int x : p.lines[l]) j["incidence"].push_back({x, l});
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "graph apg_" << d << " {\n";
  for (int i = 0; i < p.num_points(); ++i)
    os << "  p_" << i / d << "_" << i % d << " [shape=circle, label=\"(" << i / d << ","
       << i % d << ")\"];\n";
  for (int l = 0; l < p.num_lines(); ++l) os << "  l_" << l << " [shape=box];\n";
  for (int l = 0; l < p.num_lines(); ++l)
    for (int x : p.lines[l]) os << "  p_" << x / d << "_" << x % d << " -- l_" << l << ";\n";
  os << "}\n";
  return os.str();
}

Dapg import_dapg_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("dapg json: ") + e.what());
  }
  if (j.value("kind", "") != "dapg") throw InvalidInput("dapg json: kind must be \"dapg\"");
  const int d = j.at("d").get<int>();
  const auto& lines = j.at("lines");
  const auto& points = j.at("points");
  std::vector<std::vector<DapgPoint>> inc(lines.size());
  for (const auto& pair : j.at("incidence")) {
    const int pi = pair.at(0).get<int>(), li = pair.at(1).get<int>();
    if (pi < 0 || pi >= static_cast<int>(points.size()) || li < 0 ||
        li >= static_cast<int>(lines.size()))
      throw DimensionError("dapg json: incidence index out of range");
    inc[li].push_back({points[pi].at(0).get<int>(), points[pi].at(1).get<int>()});
  }
  return Dapg(d, std::move(inc));
}

}  // namespace mubsic
