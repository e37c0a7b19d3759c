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

#include "mubsic/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mubsic/errors.hpp"
#include "mubsic/finite_plane.hpp"
#include "mubsic/frames.hpp"
#include "mubsic/json_io.hpp"
#include "mubsic/probability.hpp"
#include "mubsic/search.hpp"
#include "mubsic/sic.hpp"
#include "mubsic/weyl_heisenberg.hpp"

namespace mubsic::cli {

namespace {

constexpr double kDefaultTol = 1e-10;

double env_tolerance() {
  const char* s = std::getenv("MUBSIC_TOL");
  if (!s || !*s) return kDefaultTol;
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double t = 0.0;
  if (!(in >> t) || !(in >> std::ws).eof() || !(t > 0))
    throw InvalidInput(std::string("MUBSIC_TOL: not a positive number: ") + s);
  return t;
}

struct Options {
  int d = 0;
  std::string kind = "dapg";
  std::string format = "json";
  std::string out;
  std::string in;
  std::string fiducial;
  std::string builtin;
  std::string points;
  std::string lines;
  std::string rho;
  std::string geom = "auto";
  std::optional<double> tol;
  std::uint64_t seed = 0;
  int restarts = 20;
  int max_iters = 5000;
};

struct Context {
  Options o;
  std::ostream& out;
  std::ostream& err;
  double default_tol;
  double tol() const { return o.tol.value_or(default_tol); }
};

int verdict(Context& c, const std::string& what, double dev, double tol) {
  const bool ok = dev <= tol;
  c.out << what << ": max deviation " << format_number(dev) << " (tol " << format_number(tol)
        << ") " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitVerification;
}

void emit(Context& c, const std::string& text) {
  if (c.o.out.empty() || c.o.out == "-") c.out << text;
  else write_text_file(c.o.out, text);
}

bool is_sic_file(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  return j.is_object() && j.value("kind", "") == "sic";
}

SicFamily load_family(const std::string& path) {
  const std::string text = read_text_file(path);
  if (is_sic_file(text)) return read_sic_json(text);
  return generate_hw_sic(read_fiducial_json(text));
}

Dapg geometry_for(const Context& c, int d) {
  if (c.o.geom == "auto") return build_dapg(d);
  Dapg g = import_dapg_json(read_text_file(c.o.geom));
  if (g.order() != d) throw DimensionError("geometry order does not match d");
  return g;
}

// --- mub -------------------------------------------------------------------

int mub_build(Context& c) {
  const MubFamily m = build_mub(c.o.d);
  if (!c.o.out.empty()) write_text_file(c.o.out, write_mub_json(m));
  return verdict(c, "mub d=" + std::to_string(c.o.d), verify_mub(m), c.tol());
}

int mub_verify(Context& c) {
  const MubFamily m = c.o.in.empty() ? build_mub(c.o.d) : read_mub_json(read_text_file(c.o.in));
  require_prime(m.d);
  return verdict(c, "mub d=" + std::to_string(m.d), verify_mub(m), c.tol());
}

// --- plane -----------------------------------------------------------------

int plane_build(Context& c) {
  require_prime(c.o.d);
  const IncidenceFormat fmt = parse_incidence_format(c.o.format);
  if (c.o.kind == "apg") emit(c, export_incidence(build_apg(c.o.d), fmt));
  else if (c.o.kind == "dapg") emit(c, export_incidence(build_dapg(c.o.d), fmt));
  else throw InvalidInput("--kind must be apg or dapg");
  return kExitOk;
}

int plane_verify(Context& c) {
  require_prime(c.o.d);
  const Dapg g = c.o.in.empty() ? build_dapg(c.o.d) : import_dapg_json(read_text_file(c.o.in));
  const IncidenceReport r = verify_incidence(g);
  c.out << r.num_points << " points, " << r.num_lines << " lines, ";
  if (r.ok()) {
    c.out << "all axioms pass\n";
    return kExitOk;
  }
  c.out << r.violations.size() << " violations\n";
  for (const auto& v : r.violations) c.out << "  " << v << "\n";
  return kExitVerification;
}

// --- frame -----------------------------------------------------------------

int frame_from_mub(Context& c) {
  const PointFrame pf = point_frame_from_mub(build_mub(c.o.d), c.tol());
  emit(c, write_point_frame_json(pf));
  if (c.o.out.empty()) return kExitOk;
  return verdict(c, "point frame d=" + std::to_string(c.o.d) + " beta=" + format_number(pf.beta()),
                 verify_point_frame(pf), c.tol());
}

int frame_from_hg(Context& c) {
  require_odd_prime(c.o.d);
  const WeylPair wp = build_weyl_pair(c.o.d);
  const HGBasis hg = build_hg_basis(wp, {}, 1.0 / std::sqrt(2.0 * c.o.d));
  const PointFrame pf = point_frame_from_hg(hg);
  emit(c, write_point_frame_json(pf));
  if (c.o.out.empty()) return kExitOk;
  return verdict(c, "point frame d=" + std::to_string(c.o.d) + " beta=" + format_number(pf.beta()),
                 verify_point_frame(pf), c.tol());
}

int frame_bridge(Context& c) {
  const PointFrame pf = read_point_frame_json(read_text_file(c.o.points));
  const LineFrame lf = line_ops_from_points(pf, geometry_for(c, pf.d()));
  emit(c, write_line_frame_json(lf));
  if (c.o.out.empty()) return kExitOk;
  return verdict(c, "line frame d=" + std::to_string(lf.d()) + " alpha=" + format_number(lf.alpha()),
                 verify_line_frame(lf), c.tol());
}

int frame_verify(Context& c) {
  const PointFrame pf = read_point_frame_json(read_text_file(c.o.points));
  int rc = verdict(c, "point frame", verify_point_frame(pf), c.tol());
  if (!c.o.lines.empty()) {
    const LineFrame lf = read_line_frame_json(read_text_file(c.o.lines));
    if (lf.d() != pf.d()) throw DimensionError("point and line frames differ in d");
    rc = std::max(rc, verdict(c, "line frame", verify_line_frame(lf), c.tol()));
    const PointLineReport r = verify_point_line_products(pf, lf, geometry_for(c, pf.d()));
    rc = std::max(rc, verdict(c, "point-line products", r.max_deviation(), c.tol()));
  }
  return rc;
}

// --- sic -------------------------------------------------------------------

int sic_generate(Context& c) {
  Fiducial f;
  if (!c.o.builtin.empty()) {
    if (!c.o.fiducial.empty()) throw InvalidInput("use either --fiducial or --builtin");
    if (c.o.builtin == "qubit") f = qubit_fiducial();
    else if (c.o.builtin == "qutrit") f = qutrit_fiducial();
    else throw InvalidInput("--builtin must be qubit or qutrit");
  } else if (!c.o.fiducial.empty()) {
    f = read_fiducial_json(read_text_file(c.o.fiducial));
  } else {
    throw InvalidInput("sic generate needs --fiducial or --builtin");
  }
  const SicFamily s = generate_hw_sic(f);
  if (!c.o.out.empty()) write_text_file(c.o.out, write_sic_json(s));
  return verdict(c, "sic d=" + std::to_string(s.d), verify_sic(s), c.tol());
}

int sic_verify(Context& c) {
  const SicFamily s = load_family(c.o.in);
  return verdict(c, "sic d=" + std::to_string(s.d), verify_sic(s), c.tol());
}

int sic_spectra(Context& c) {
  const SicFamily s = load_family(c.o.in);
  const MuPomFamily m = extract_mu_pom(s, geometry_for(c, s.d), c.tol());
  emit(c, write_spectra_csv(m.spectra));
  const ColumnConstancyReport r = assert_column_constant(m.spectra, 1e-8);
  std::ostream& log = (c.o.out.empty() || c.o.out == "-") ? c.err : c.out;
  log << "column spread " << format_number(r.max_spread) << (r.ok() ? " PASS" : " FAIL") << "\n";
  return r.ok() ? kExitOk : kExitVerification;
}

int sic_group(Context& c) {
  const SpectraTable t = read_spectra_csv(read_text_file(c.o.in));
  const double tol = c.o.tol.value_or(1e-8);
  const ColumnConstancyReport r = assert_column_constant(t, tol);
  emit(c, write_grouping_json(group_columns_by_spectrum(t, tol)));
  return r.ok() ? kExitOk : kExitVerification;
}

int sic_solve_prob(Context& c) {
  CyclicSolveOptions opts;
  opts.seed = c.o.seed;
  const CyclicSolution s = solve_cyclic_probability(c.o.d, opts);
  c.out << "d=" << s.d << " solutions=" << s.solutions.size() << " (" << s.scope << ")\n";
  for (const auto& p : s.solutions) {
    c.out << "p =";
    for (double x : p.values()) c.out << " " << format_number(x);
    c.out << "  residual " << format_number(cyclic_residual(p.values())) << "\n";
  }
  if (s.family)
    c.out << "family: p0 = (1 - p1 + sqrt(2 p1 - 3 p1^2))/2, p1 in [" << format_number(s.family->p1_min)
          << ", " << format_number(s.family->p1_max) << "]\n";
  return kExitOk;
}

int sic_search(Context& c) {
  SearchConfig cfg;
  cfg.seed = c.o.seed;
  cfg.restarts = c.o.restarts;
  cfg.max_iters = c.o.max_iters;
  if (c.o.tol) cfg.objective_tol = *c.o.tol;
  const SearchResult r = search_fiducial(c.o.d, cfg);
  const std::string path =
      c.o.out.empty() ? "fiducial_d" + std::to_string(c.o.d) + ".json" : c.o.out;
  write_text_file(path, write_fiducial_json(r.best));
  c.out << "d=" << r.d << " best restart " << r.best_restart << " of " << r.restarts.size()
        << " objective " << format_number(r.objective) << (r.success ? " fiducial" : " non-fiducial")
        << " -> " << path << "\n";
  return r.success ? kExitOk : kExitVerification;
}

// --- quasiprob -------------------------------------------------------------

int quasiprob(Context& c) {
  const PointFrame pf = read_point_frame_json(read_text_file(c.o.points));
  const HermitianOp rho(read_operator_json(read_text_file(c.o.rho)), 1e-10);
  if (rho.dim() != pf.d()) throw DimensionError("rho and frame differ in dimension");
  const QuasiDistribution q = quasi_distribution(rho, pf);
  const std::vector<double> lines = line_probabilities(q, geometry_for(c, pf.d()));
  emit(c, write_quasi_json(q, lines));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutually unbiased bases, finite planes, operator frames and SIC tooling", "mubsic"};
  app.require_subcommand(1);
  Options o;
  std::function<int(Context&)> handler;

  auto add_d = [&](CLI::App* s) { s->add_option("--d", o.d, "Dimension (prime)")->required(); };
  auto add_tol = [&](CLI::App* s) { s->add_option("--tol", o.tol, "Tolerance override"); };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                  std::function<int(Context&)> fn) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };

  CLI::App* mub = app.add_subcommand("mub", "Mutually unbiased bases")->require_subcommand(1);
  {
    auto* b = leaf(mub, "build", "Build the d+1 bases", mub_build);
    add_d(b), add_tol(b);
    b->add_option("--out", o.out, "Write bases as JSON");
    auto* v = leaf(mub, "verify", "Verify pairwise unbiasedness", mub_verify);
    add_d(v), add_tol(v);
    v->add_option("--in", o.in, "Bases JSON to verify instead of the built family");
  }

  CLI::App* plane = app.add_subcommand("plane", "Finite affine planes")->require_subcommand(1);
  {
    auto* b = leaf(plane, "build", "Export an incidence structure", plane_build);
    add_d(b);
    b->add_option("--kind", o.kind, "apg | dapg");
    b->add_option("--export", o.format, "dot | json");
    b->add_option("--out", o.out, "Output path (stdout if omitted)");
    auto* v = leaf(plane, "verify", "Check the dual-plane axioms", plane_verify);
    add_d(v);
    v->add_option("--in", o.in, "Incidence JSON to verify");
  }

  CLI::App* frame = app.add_subcommand("frame", "Point and line operator frames")->require_subcommand(1);
  {
    auto* a = leaf(frame, "from-mub", "Point operators from MUB projectors", frame_from_mub);
    add_d(a), add_tol(a);
    a->add_option("--out", o.out, "Output JSON");
    auto* h = leaf(frame, "from-hg", "Point operators from the h/g basis", frame_from_hg);
    add_d(h), add_tol(h);
    h->add_option("--out", o.out, "Output JSON");
    auto* br = leaf(frame, "bridge", "Line operators from point operators", frame_bridge);
    br->add_option("--points", o.points, "Point frame JSON")->required();
    br->add_option("--out", o.out, "Output JSON");
    br->add_option("--geom", o.geom, "auto | incidence JSON");
    add_tol(br);
    auto* v = leaf(frame, "verify", "Verify frames and point-line products", frame_verify);
    v->add_option("--points", o.points, "Point frame JSON")->required();
    v->add_option("--lines", o.lines, "Line frame JSON");
    v->add_option("--geom", o.geom, "auto | incidence JSON");
    add_tol(v);
  }

  CLI::App* sic = app.add_subcommand("sic", "SIC families, MU POMs and search")->require_subcommand(1);
  {
    auto* g = leaf(sic, "generate", "Weyl-Heisenberg orbit of a fiducial", sic_generate);
    g->add_option("--fiducial", o.fiducial, "Fiducial JSON");
    g->add_option("--builtin", o.builtin, "qubit | qutrit");
    g->add_option("--out", o.out, "Write the family as JSON");
    add_tol(g);
    auto* v = leaf(sic, "verify", "Verify pairwise overlaps", sic_verify);
    v->add_option("--in", o.in, "SIC family or fiducial JSON")->required();
    add_tol(v);
    auto* sp = leaf(sic, "spectra", "MU-POM spectra as CSV", sic_spectra);
    sp->add_option("--in", o.in, "SIC family or fiducial JSON")->required();
    sp->add_option("--geom", o.geom, "auto | incidence JSON");
    sp->add_option("--out", o.out, "Output CSV (stdout if omitted)");
    add_tol(sp);
    auto* gr = leaf(sic, "group", "Group columns by spectrum", sic_group);
    gr->add_option("--in", o.in, "Spectra CSV")->required();
    gr->add_option("--out", o.out, "Output JSON (stdout if omitted)");
    add_tol(gr);
    auto* pr = leaf(sic, "solve-prob", "Cyclic probability-vector conditions", sic_solve_prob);
    add_d(pr);
    pr->add_option("--seed", o.seed, "Seed for d >= 5");
    auto* se = leaf(sic, "search", "Numerical fiducial search", sic_search);
    add_d(se);
    se->add_option("--seed", o.seed, "Seed (default 0)");
    se->add_option("--restarts", o.restarts, "Random restarts")->check(CLI::PositiveNumber);
    se->add_option("--max-iters", o.max_iters, "Local iterations per restart")->check(CLI::PositiveNumber);
    se->add_option("--out", o.out, "Fiducial JSON (default fiducial_d<N>.json)");
    se->add_option("--tol", o.tol, "Objective threshold (default 1e-14)");
  }

  auto* qp = leaf(&app, "quasiprob", "Quasi-probabilities and line probabilities", quasiprob);
  qp->add_option("--rho", o.rho, "Density matrix JSON")->required();
  qp->add_option("--points", o.points, "Point frame JSON")->required();
  qp->add_option("--out", o.out, "Output JSON (stdout if omitted)");
  qp->add_option("--geom", o.geom, "auto | incidence JSON");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    Context c{o, out, err, env_tolerance()};
    if (!handler) throw InvalidInput("no command given");
    return handler(c);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << " (deviation " << format_number(e.deviation())
        << ")\n";
    return kExitVerification;
  } catch (const ConvergenceError& e) {
    err << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace mubsic::cli
