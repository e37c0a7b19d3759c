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

#include "mubsic/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <sstream>

#include "json.hpp"
#include "mubsic/errors.hpp"

namespace mubsic {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw IoError(std::string("missing or invalid field '") + key + "'");
  }
}

json ket_json(const ComplexVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back({v(i).real(), v(i).imag()});
  return a;
}

ComplexVector ket_from(const json& a) {
  if (!a.is_array()) throw IoError("ket: expected an array of [re, im]");
  ComplexVector v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const json& e = a[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw IoError("ket: entry " + std::to_string(i) + " is not [re, im]");
    v(i) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return v;
}

json op_json(const ComplexMatrix& m) {
  json e = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) e.push_back({m(r, c).real(), m(r, c).imag()});
  return {{"dim", m.rows()}, {"entries", e}};
}

ComplexMatrix op_from(const json& j) {
  const int n = field<int>(j, "dim");
  if (n < 1) throw DimensionError("operator: dim must be positive");
  const ComplexVector flat = ket_from(j.at("entries"));
  if (flat.size() != static_cast<Eigen::Index>(n) * n)
    throw DimensionError("operator: entries size != dim^2");
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = flat(r * n + c);
  return m;
}

std::vector<HermitianOp> ops_from(const json& j, int d, std::size_t count) {
  if (!j.is_array() || j.size() != count) throw DimensionError("ops: wrong operator count");
  std::vector<HermitianOp> out;
  for (const auto& e : j) {
    ComplexMatrix m = op_from(e);
    if (m.rows() != d) throw DimensionError("ops: operator size != d");
    out.emplace_back(m, 1e-10);
  }
  return out;
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

std::string format_number(double x) {
  std::ostringstream ss;
  ss.imbue(std::locale::classic());
  ss << std::setprecision(12) << x;
  return ss.str();
}

std::string write_operator_json(const ComplexMatrix& m) { return dump(op_json(m)); }

ComplexMatrix read_operator_json(std::string_view text) { return op_from(parse(text)); }

std::string write_fiducial_json(const Fiducial& f) {
  return dump({{"d", f.d}, {"ket", ket_json(f.ket)}, {"source", to_string(f.source)}});
}

Fiducial read_fiducial_json(std::string_view text, int expected_d) {
  const json j = parse(text);
  const int d = field<int>(j, "d");
  const ComplexVector ket = ket_from(j.at("ket"));
  if (ket.size() != d) throw DimensionError("fiducial: ket length != d");
  if (expected_d && d != expected_d)
    throw DimensionError("fiducial: expected d = " + std::to_string(expected_d) + ", got " +
                         std::to_string(d));
  require_prime(d);
  FiducialSource src = FiducialSource::Ingested;
  if (j.contains("source")) {
    const auto s = j["source"].get<std::string>();
    if (s == "closed-form") src = FiducialSource::ClosedForm;
    else if (s == "searched") src = FiducialSource::Searched;
  }
  return make_fiducial(ket, src);
}

Fiducial ingest_fiducial(const std::string& path, int d) {
  const json j = parse(read_text_file(path));
  const ComplexVector ket = ket_from(j.at("ket"));
  if (ket.size() != d)
    throw DimensionError("ingest_fiducial: ket length " + std::to_string(ket.size()) +
                         " != d = " + std::to_string(d));
  if (j.contains("d") && j["d"].get<int>() != d)
    throw DimensionError("ingest_fiducial: file declares a different d");
  const double n = ket.norm();
  if (!(n > 0)) throw InvalidInput("ingest_fiducial: zero vector");
  if (std::abs(n - 1.0) > 1e-6) throw InvalidInput("ingest_fiducial: norm not within 1e-6 of 1");
  return make_fiducial(ket, FiducialSource::Ingested);
}

std::string write_mub_json(const MubFamily& m) {
  json bases = json::array();
  for (const auto& b : m.bases) {
    json kets = json::array();
    for (const auto& k : b) kets.push_back(ket_json(k));
    bases.push_back(kets);
  }
  return dump({{"d", m.d}, {"bases", bases}});
}

MubFamily read_mub_json(std::string_view text) {
  const json j = parse(text);
  MubFamily m;
  m.d = field<int>(j, "d");
  for (const auto& b : j.at("bases")) {
    std::vector<ComplexVector> kets;
    for (const auto& k : b) {
      kets.push_back(ket_from(k));
      if (kets.back().size() != m.d) throw DimensionError("mub: ket length != d");
    }
    m.bases.push_back(std::move(kets));
  }
  return m;
}

std::string write_point_frame_json(const PointFrame& pf) {
  json ops = json::array();
  for (const auto& t : pf.trace_one()) ops.push_back(op_json(t.mat()));
  return dump({{"kind", "point_frame"}, {"d", pf.d()}, {"beta", pf.beta()}, {"ops", ops}});
}

PointFrame read_point_frame_json(std::string_view text) {
  const json j = parse(text);
  if (field<std::string>(j, "kind") != "point_frame") throw IoError("expected a point_frame");
  const int d = field<int>(j, "d");
  require_prime(d);
  return PointFrame::from_trace_one(d, field<double>(j, "beta"),
                                    ops_from(j.at("ops"), d, static_cast<std::size_t>(d) * (d + 1)));
}

std::string write_line_frame_json(const LineFrame& lf) {
  json ops = json::array();
  for (const auto& t : lf.trace_one()) ops.push_back(op_json(t.mat()));
  return dump({{"kind", "line_frame"}, {"d", lf.d()}, {"alpha", lf.alpha()}, {"ops", ops}});
}

LineFrame read_line_frame_json(std::string_view text) {
  const json j = parse(text);
  if (field<std::string>(j, "kind") != "line_frame") throw IoError("expected a line_frame");
  const int d = field<int>(j, "d");
  require_prime(d);
  return LineFrame::from_trace_one(d, field<double>(j, "alpha"),
                                   ops_from(j.at("ops"), d, static_cast<std::size_t>(d) * d));
}

std::string write_sic_json(const SicFamily& s) {
  json ops = json::array();
  for (const auto& p : s.projectors) ops.push_back(op_json(p.mat()));
  return dump({{"kind", "sic"},
               {"d", s.d},
               {"source", to_string(s.fiducial.source)},
               {"fiducial", ket_json(s.fiducial.ket)},
               {"projectors", ops}});
}

SicFamily read_sic_json(std::string_view text) {
  const json j = parse(text);
  if (field<std::string>(j, "kind") != "sic") throw IoError("expected a sic family");
  SicFamily s;
  s.d = field<int>(j, "d");
  require_prime(s.d);
  json fj = {{"d", s.d}, {"ket", j.at("fiducial")}};
  if (j.contains("source")) fj["source"] = j["source"];
  s.fiducial = read_fiducial_json(fj.dump(), s.d);
  s.projectors = ops_from(j.at("projectors"), s.d, static_cast<std::size_t>(s.d) * s.d);
  return s;
}

std::string write_spectra_csv(const SpectraTable& t) {
  std::string out = "m,j";
  for (int i = 1; i <= t.d; ++i) out += ",lambda_" + std::to_string(i);
  out += "\n";
  for (int j = 0; j <= t.d; ++j)
    for (int m = 0; m < t.d; ++m) {
      out += std::to_string(m) + "," + std::to_string(j);
      for (double v : t.at(m, j).values) out += "," + format_number(v);
      out += "\n";
    }
  return out;
}

SpectraTable read_spectra_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  in.imbue(std::locale::classic());
  std::string line;
  if (!std::getline(in, line) || line.rfind("m,j,lambda_1", 0) != 0)
    throw IoError("spectra CSV: missing header");
  const int d = static_cast<int>(std::count(line.begin(), line.end(), ',')) - 1;
  require_prime(d);
  SpectraTable t;
  t.d = d;
  t.spectra.assign(static_cast<std::size_t>(d) * (d + 1), Spectrum{});
  std::vector<char> filled(t.spectra.size(), 0);
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::istringstream row(line);
    row.imbue(std::locale::classic());
    std::string cell;
    std::vector<double> vals;
    while (std::getline(row, cell, ',')) {
      std::istringstream c(cell);
      c.imbue(std::locale::classic());
      double x;
      if (!(c >> x)) throw IoError("spectra CSV: bad number '" + cell + "'");
      vals.push_back(x);
    }
    if (static_cast<int>(vals.size()) != d + 2) throw IoError("spectra CSV: wrong column count");
    const int m = static_cast<int>(vals[0]), j = static_cast<int>(vals[1]);
    if (m < 0 || m >= d || j < 0 || j > d) throw IoError("spectra CSV: label out of range");
    t.spectra[j * d + m].values.assign(vals.begin() + 2, vals.end());
    filled[j * d + m] = 1;
  }
  if (std::find(filled.begin(), filled.end(), 0) != filled.end())
    throw IoError("spectra CSV: missing rows");
  return t;
}

std::string write_grouping_json(const ColumnGrouping& g) {
  return dump({{"groups", g.groups}, {"spectra", g.spectra}});
}

ColumnGrouping read_grouping_json(std::string_view text) {
  const json j = parse(text);
  ColumnGrouping g;
  g.groups = field<std::vector<std::vector<int>>>(j, "groups");
  g.spectra = field<std::vector<std::vector<double>>>(j, "spectra");
  if (g.groups.size() != g.spectra.size()) throw IoError("grouping: groups/spectra mismatch");
  return g;
}

std::string write_quasi_json(const QuasiDistribution& q, const std::vector<double>& lines) {
  return dump({{"d", q.d}, {"q", q.q}, {"line_probabilities", lines}});
}

}  // namespace mubsic
