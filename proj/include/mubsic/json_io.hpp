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

#ifndef MUBSIC_JSON_IO_HPP
#define MUBSIC_JSON_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mubsic/frames.hpp"
#include "mubsic/matrix_core.hpp"
#include "mubsic/sic.hpp"
#include "mubsic/weyl_heisenberg.hpp"

// JSON writers keep full double precision (shortest round-trip form); the
// CSV writer uses 12 significant digits.  Readers throw IoError on malformed
// text and DimensionError on inconsistent sizes.

namespace mubsic {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// {"dim": n, "entries": [[re, im], ...]} row-major.
std::string write_operator_json(const ComplexMatrix& m);
ComplexMatrix read_operator_json(std::string_view text);

/// {"d": d, "ket": [[re, im], ...], "source": "..."}
std::string write_fiducial_json(const Fiducial& f);
/// expected_d = 0 accepts any prime length.
Fiducial read_fiducial_json(std::string_view text, int expected_d = 0);
/// Reads a fiducial file; the norm must be within 1e-6 of 1 (then
/// renormalized).  Tagged as ingested.
Fiducial ingest_fiducial(const std::string& path, int d);

/// {"d": d, "bases": [[ket, ...], ...]}
std::string write_mub_json(const MubFamily& m);
MubFamily read_mub_json(std::string_view text);

/// {"kind": "point_frame", "d", "beta", "ops": [operator, ...]}  (trace-one
/// point operators, j-major) and {"kind": "line_frame", "d", "alpha", "ops"}
/// (trace-one line operators, a-major).
std::string write_point_frame_json(const PointFrame& pf);
PointFrame read_point_frame_json(std::string_view text);
std::string write_line_frame_json(const LineFrame& lf);
LineFrame read_line_frame_json(std::string_view text);

/// {"kind": "sic", "d", "source", "fiducial": ket, "projectors": [operator]}
std::string write_sic_json(const SicFamily& s);
SicFamily read_sic_json(std::string_view text);

/// Header "m,j,lambda_1,...,lambda_d"; rows (j asc, m asc).
std::string write_spectra_csv(const SpectraTable& t);
SpectraTable read_spectra_csv(std::string_view text);

/// {"groups": [[j, ...], ...], "spectra": [[...], ...]}
std::string write_grouping_json(const ColumnGrouping& g);
ColumnGrouping read_grouping_json(std::string_view text);

/// {"d", "q": [...j-major...], "line_probabilities": [...a-major...]}
std::string write_quasi_json(const QuasiDistribution& q, const std::vector<double>& lines);

/// Formats with 12 significant digits, '.' decimal.
std::string format_number(double x);

}  // namespace mubsic

#endif  // MUBSIC_JSON_IO_HPP
