// Copyright 2026 The toric3d Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// toric3d: lattice generation and validation, single-shot decoding and
// Monte Carlo sweeps. Exit codes: 0 success, 1 usage or input error, 2
// decoder failure (decode only).

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric3d/decoder_boundary.h"
#include "toric3d/decoder_periodic.h"
#include "toric3d/lattice.h"
#include "toric3d/lattice_io.h"
#include "toric3d/sim.h"
#include "toric3d/stabilizer.h"

namespace toric3d::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDecodeFailure = 2;
constexpr int kMaxSize = 64;

/// Input problems the user can fix; reported with exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, LatticeFamily> kFamilies = {
    {"cubic-torus", LatticeFamily::kCubicTorus},
    {"slab", LatticeFamily::kClosedSlab},
    {"slab-rough", LatticeFamily::kRoughSlab},
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

long parse_int(const std::string& s, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError(std::string("bad ") + what + " '" + s + "'");
  }
  return value;
}

double parse_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InputError(std::string("bad ") + what + " '" + s + "'");
  return value;
}

FamilyInfo family_from(const std::string& name, const std::string& size) {
  FamilyInfo info;
  info.kind = kFamilies.at(name);
  const auto parts = split(size, ',');
  if (parts.size() != 1 && parts.size() != 3) throw InputError("--size takes L or L,Ly,Lz");
  for (int i = 0; i < 3; ++i) {
    const long v = parse_int(parts[parts.size() == 1 ? 0 : i], "size");
    if (v < 1 || v > kMaxSize) {
      throw InputError("size " + std::to_string(v) + " outside [1, " + std::to_string(kMaxSize) +
                       "]");
    }
    info.dims[i] = static_cast<int>(v);
  }
  if (info.kind == LatticeFamily::kCubicTorus &&
      (info.dims[1] != info.dims[0] || info.dims[2] != info.dims[0])) {
    throw InputError("cubic-torus takes a single size");
  }
  return info;
}

ChainComplex3 build_checked(const FamilyInfo& family) {
  try {
    return build_family(family);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

/// `a:b:step` (inclusive) or a comma list.
std::vector<double> parse_ps(const std::string& text) {
  std::vector<double> ps;
  const auto range = split(text, ':');
  if (range.size() == 3) {
    const double a = parse_double(range[0], "p");
    const double b = parse_double(range[1], "p");
    const double step = parse_double(range[2], "p step");
    if (!(step > 0) || b < a) throw InputError("--ps range needs a <= b and step > 0");
    const auto n = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
    for (long i = 0; i < n; ++i) {
      // Snap to 12 decimals so 0.105 + 2*0.005 prints and seeds as 0.115.
      ps.push_back(std::round((a + step * static_cast<double>(i)) * 1e12) / 1e12);
    }
  } else if (range.size() == 1) {
    for (const auto& item : split(text, ',')) ps.push_back(parse_double(item, "p"));
  } else {
    throw InputError("--ps takes a:b:step or a comma list");
  }
  for (double p : ps) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("p outside [0, 1]");
  }
  if (ps.empty()) throw InputError("--ps is empty");
  return ps;
}

/// One id per line; '#' starts a comment.
std::vector<CellId> read_id_file(const std::string& path, std::size_t limit, const char* kind) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + std::string(kind) + " file '" + path + "'");
  std::vector<CellId> ids;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    for (std::string w; words >> w;) {
      const long id = parse_int(w, kind);
      if (id < 0 || static_cast<std::size_t>(id) >= limit) {
        throw InputError(path + ":" + std::to_string(line_no) + ": " + kind + " id " + w +
                         " out of range");
      }
      ids.push_back(static_cast<CellId>(id));
    }
  }
  return ids;
}

LatticeDocument load_document(const std::string& path) {
  try {
    return load_lattice_file(path);
  } catch (const LatticeParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const LatticeValidationError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

LogicalBasis basis_for(const LatticeDocument& doc) {
  try {
    if (!doc.xlogical.empty() || !doc.zlogical.empty()) {
      return basis_from_lists(doc.complex, doc.xlogical, doc.zlogical);
    }
    return logical_basis(doc.complex, face_equivalence_classes(doc.complex));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("logical basis: ") + e.what());
  }
}

std::string join_ids(const std::vector<CellId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("TORIC3D_THREADS")) {
    try {
      const long n = parse_int(env, "TORIC3D_THREADS");
      if (n >= 1) return static_cast<int>(n);
    } catch (const InputError&) {
    }
    throw InputError("TORIC3D_THREADS must be a positive integer");
  }
  return 1;
}

struct DecoderFlags {
  std::string estimator = "cubic";
  int retries = 1;
  bool no_fallback = false;
  std::string cut = "incremental";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--estimator", estimator, "Residual estimator on the artificial boundary")
        ->check(CLI::IsMember({"cubic", "general"}));
    cmd->add_option("--retries", retries, "Extra attempts with another artificial boundary")
        ->check(CLI::Range(0, 16));
    cmd->add_flag("--no-fallback", no_fallback, "Disable the elimination fallback");
    cmd->add_option("--cut", cut, "Cut-set test")->check(CLI::IsMember({"incremental", "fresh"}));
  }
  DecoderOptions options() const {
    DecoderOptions o;
    o.estimator = estimator == "general" ? ResidualEstimator::kGeneral : ResidualEstimator::kCubic;
    o.retries = retries;
    o.gf2_fallback = !no_fallback;
    o.cut_strategy = cut == "fresh" ? CutStrategy::kFreshTraversal : CutStrategy::kIncremental;
    return o;
  }
};

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::string size;
  std::string out;
  bool no_logicals = false;
};

int run_gen(const GenArgs& a) {
  const ChainComplex3 c = build_checked(family_from(a.family, a.size));
  std::vector<std::vector<FaceId>> x, z;
  if (!a.no_logicals) {
    const LogicalBasis basis = logical_basis(c, face_equivalence_classes(c));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      x.push_back(basis.x_reps[i].ids());
      z.push_back(basis.z_reps[i].ids());
    }
  }
  const std::string text = serialize_lattice(c, x, z);
  std::ostream* log = &std::cout;
  if (a.out.empty()) {
    std::cout << text;
    log = &std::cerr;
  } else {
    std::ofstream file(a.out, std::ios::binary);
    if (!file || !(file << text)) throw InputError("cannot write '" + a.out + "'");
  }
  std::size_t partial = 0;
  for (EdgeId e = 0; e < c.edge_count(); ++e) partial += c.is_partial(e);
  *log << "family=" << a.family << " vertices=" << c.vertex_count() << " edges=" << c.edge_count()
       << " faces=" << c.face_count() << " volumes=" << c.volume_count()
       << " partial_edges=" << partial << " logicals=" << x.size()
       << " periodic=" << (c.periodic() ? "true" : "false");
  if (!a.out.empty()) *log << " out=" << a.out;
  *log << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

std::string kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::kFaceOverIncident: return "face-over-incident";
    case ViolationKind::kOddVolumeEdge: return "odd-volume-edge";
    case ViolationKind::kEdgeNotFacePath: return "edge-not-face-path";
    case ViolationKind::kFaceBoundaryShape: return "face-boundary-shape";
    case ViolationKind::kDuplicateIncidence: return "duplicate-incidence";
  }
  return "unknown";
}

int run_validate(const std::string& path) {
  try {
    const LatticeDocument doc = load_lattice_file(path);
    const ChainComplex3& c = doc.complex;
    const BoundaryClasses classes = face_equivalence_classes(c);
    const ValidationReport report = validate(c);
    std::cout << "valid=true vertices=" << c.vertex_count() << " edges=" << c.edge_count()
              << " faces=" << c.face_count() << " volumes=" << c.volume_count()
              << " periodic=" << (c.periodic() ? "true" : "false")
              << " family=" << family_name(c.family().kind)
              << " boundary_classes=" << classes.count() << " logicals=" << doc.xlogical.size()
              << " interior_boundary_verified="
              << (report.interior_boundary_free_verified ? "true" : "false") << "\n";
    return kExitOk;
  } catch (const LatticeValidationError& e) {
    std::cout << "valid=false violations=" << e.report().violations.size() << "\n";
    for (const auto& v : e.report().violations) {
      std::cout << "violation=" << kind_name(v.kind) << " cell=" << v.cell << " message=\""
                << v.message << "\"\n";
    }
    return kExitInput;
  } catch (const LatticeParseError& e) {
    std::cout << "valid=false parse_error_line=" << e.line() << " message=\"" << e.what()
              << "\"\n";
    return kExitInput;
  }
}

// ---------------------------------------------------------------------------

struct DecodeArgs {
  std::string lattice;
  std::string syndrome;
  std::string error;
  std::string mode;
  bool json = false;
  DecoderFlags decoder;
};

int run_decode(const DecodeArgs& a) {
  const LatticeDocument doc = load_document(a.lattice);
  const ChainComplex3& c = doc.complex;
  const std::string mode = a.mode.empty() ? (c.periodic() ? "periodic" : "boundary") : a.mode;
  if ((mode == "periodic") != c.periodic()) {
    throw InputError("--mode " + mode + " does not match a " +
                     (c.periodic() ? "periodic" : "non-periodic") + " lattice");
  }

  std::optional<FaceSet> error;
  EdgeSet s = c.empty_edges();
  if (!a.error.empty()) {
    error = c.empty_faces();
    for (FaceId f : read_id_file(a.error, c.face_count(), "face")) error->toggle(f);
    s = syndrome(c, *error);
  } else {
    for (EdgeId e : read_id_file(a.syndrome, c.edge_count(), "edge")) s.toggle(e);
  }

  std::optional<LogicalBasis> basis;
  if (mode == "periodic" || error) basis = basis_for(doc);
  DecodeOutcome out;
  if (mode == "periodic") {
    out = PeriodicDecoder(c, *basis, a.decoder.options()).decode(s);
  } else {
    out = BoundaryDecoder(c, a.decoder.options()).decode(s);
  }

  std::optional<HomologyClass> residual;
  if (error && out.success()) residual = classify_zero_syndrome(c, *basis, *error ^ out.estimate);
  const auto ids = out.estimate.ids();
  const auto& d = out.diagnostics;
  if (a.json) {
    nlohmann::json j;
    j["status"] = status_name(out.status);
    j["mode"] = mode;
    j["syndrome_weight"] = s.weight();
    j["estimate"] = ids;
    if (residual) {
      j["residual_class"] = residual->str();
      j["residual_trivial"] = residual->trivial();
    }
    j["diagnostics"] = {{"erasure_size", d.erasure_size},   {"rejected_faces", d.rejected_faces},
                        {"waves", d.waves},                 {"reseeds", d.reseeds},
                        {"peeled", d.peeled},               {"retried", d.retried},
                        {"projection_failures", d.projection_failures},
                        {"fallback_used", d.fallback_used}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "status=" << status_name(out.status) << " mode=" << mode
              << " syndrome_weight=" << s.weight() << " estimate_weight=" << ids.size() << "\n";
    std::cout << "estimate=" << join_ids(ids) << "\n";
    if (residual) {
      std::cout << "residual_class=" << residual->str()
                << " residual_trivial=" << (residual->trivial() ? "true" : "false") << "\n";
    }
    std::cout << "erasure_size=" << d.erasure_size << " rejected_faces=" << d.rejected_faces
              << " waves=" << d.waves << " reseeds=" << d.reseeds << " peeled=" << d.peeled
              << " retried=" << (d.retried ? "true" : "false")
              << " projection_failures=" << d.projection_failures
              << " fallback_used=" << (d.fallback_used ? "true" : "false") << "\n";
  }
  return out.success() ? kExitOk : kExitDecodeFailure;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  std::string family = "cubic-torus";
  std::string lattice;
  std::string sizes = "4,6,8";
  std::string ps = "0.105:0.135:0.005";
  std::uint64_t trials = StopRule{}.max_trials;
  std::uint64_t min_trials = 0;
  std::uint64_t max_logical = StopRule{}.max_failures;
  std::uint64_t seed = 1;
  std::string out;
  std::string summary;
  int threads = 0;
  bool timing = false;
  DecoderFlags decoder;
};

nlohmann::json point_json(const SweepPoint& pt) {
  nlohmann::json j = {{"family", pt.family},
                      {"L", pt.size},
                      {"n", pt.qubits},
                      {"p", pt.p},
                      {"trials", pt.trials},
                      {"decode_failures", pt.decode_failures},
                      {"logical_failures", pt.logical_failures},
                      {"logical_rate", pt.logical_rate},
                      {"stderr", pt.std_error},
                      {"seed", pt.seed},
                      {"retried", pt.retried},
                      {"projection_failed_after_retry", pt.projection_failed_after_retry},
                      {"fallback_used", pt.fallback_used},
                      {"mean_error_weight",
                       static_cast<double>(pt.error_weight_sum) / static_cast<double>(pt.trials)}};
  j["mean_decode_ms"] = pt.mean_decode_ms ? nlohmann::json(*pt.mean_decode_ms) : nlohmann::json();
  nlohmann::json status;
  for (int k = 0; k < 4; ++k) status[status_name(static_cast<DecodeStatus>(k))] = pt.by_status[k];
  j["by_status"] = status;
  return j;
}

int run_simulate(SimulateArgs a) {
  SweepConfig config;
  config.ps = parse_ps(a.ps);
  config.seed = a.seed;
  config.stop = {a.min_trials, a.trials, a.max_logical};
  if (a.trials == 0) throw InputError("--trials must be positive");
  if (a.min_trials > a.trials) throw InputError("--min-trials exceeds --trials");
  config.threads = a.threads > 0 ? a.threads : default_threads();
  config.timing = a.timing;

  std::vector<TrialContext> lattices;
  std::vector<int> sizes;
  if (!a.lattice.empty()) {
    LatticeDocument doc = load_document(a.lattice);
    LogicalBasis basis = basis_for(doc);
    lattices.emplace_back(std::move(doc.complex), std::move(basis), a.decoder.options());
  } else {
    for (const auto& item : split(a.sizes, ',')) {
      const FamilyInfo family = family_from(a.family, item);
      sizes.push_back(family.dims[0]);
      try {
        lattices.push_back(TrialContext::for_family(family, a.decoder.options()));
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
    if (lattices.empty()) throw InputError("--sizes is empty");
  }

  // Open outputs before any trial runs.
  std::ofstream csv_file;
  if (!a.out.empty()) {
    csv_file.open(a.out, std::ios::binary);
    if (!csv_file) throw InputError("cannot write '" + a.out + "'");
  }
  std::ofstream summary_file;
  if (!a.summary.empty()) {
    summary_file.open(a.summary, std::ios::binary);
    if (!summary_file) throw InputError("cannot write '" + a.summary + "'");
  }
  std::ostream& csv = a.out.empty() ? std::cout : csv_file;
  std::ostream& log = a.out.empty() ? std::cerr : std::cout;

  log << "threads=" << config.threads << " seed=" << config.seed << " max_trials=" << a.trials
      << " min_trials=" << a.min_trials << " max_logical=" << a.max_logical
      << " points=" << lattices.size() * config.ps.size() << "\n";
  csv << kCsvHeader << "\n";
  SweepReport report;
  for (const auto& ctx : lattices) {
    for (double p : config.ps) {
      const SweepPoint pt = run_point(ctx, p, config);
      csv << csv_row(pt) << "\n";
      csv.flush();
      char rate[64];
      std::snprintf(rate, sizeof rate, "%.6g", pt.logical_rate);
      log << "family=" << pt.family << " L=" << pt.size << " p=" << pt.p
          << " trials=" << pt.trials << " logical_failures=" << pt.logical_failures
          << " decode_failures=" << pt.decode_failures << " logical_rate=" << rate
          << " retried=" << pt.retried << "\n";
      report.points.push_back(pt);
    }
  }

  if (!a.summary.empty()) {
    nlohmann::json j;
    j["config"] = {{"family", a.lattice.empty() ? a.family : std::string("custom")},
                   {"lattice", a.lattice},
                   {"sizes", sizes},
                   {"ps", config.ps},
                   {"max_trials", a.trials},
                   {"min_trials", a.min_trials},
                   {"max_logical", a.max_logical},
                   {"seed", a.seed},
                   {"threads", config.threads},
                   {"timing", a.timing},
                   {"estimator", a.decoder.estimator},
                   {"retries", a.decoder.retries},
                   {"gf2_fallback", !a.decoder.no_fallback},
                   {"cut", a.decoder.cut}};
    j["points"] = nlohmann::json::array();
    for (const auto& pt : report.points) j["points"].push_back(point_json(pt));
    summary_file << j.dump(2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"3D toric code peeling decoder"};
  app.name("toric3d");
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-lattice", "Write a built-in lattice file");
  gen_cmd->add_option("--family", gen.family, "Lattice family")
      ->required()
      ->check(CLI::IsMember({"cubic-torus", "slab", "slab-rough"}));
  gen_cmd->add_option("--size", gen.size, "L or L,Ly,Lz")->required();
  gen_cmd->add_option("--out", gen.out, "Output path (stdout when omitted)");
  gen_cmd->add_flag("--no-logicals", gen.no_logicals, "Omit xlogical/zlogical records");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Parse and check a lattice file");
  validate_cmd->add_option("--lattice", validate_path, "Lattice file")->required();

  DecodeArgs dec;
  auto* decode_cmd = app.add_subcommand("decode", "Decode one syndrome");
  decode_cmd->add_option("--lattice", dec.lattice, "Lattice file")->required();
  auto* syn = decode_cmd->add_option("--syndrome", dec.syndrome, "Edge ids, one per line");
  auto* err = decode_cmd->add_option("--error", dec.error, "Face ids, one per line");
  syn->excludes(err);
  decode_cmd->add_option("--mode", dec.mode, "Defaults to the lattice's periodicity")
      ->check(CLI::IsMember({"boundary", "periodic"}));
  decode_cmd->add_flag("--json", dec.json, "JSON report instead of key=value lines");
  dec.decoder.add_to(decode_cmd);

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo sweep of logical error rates");
  auto* fam = sim_cmd->add_option("--family", sim.family, "Lattice family")
                  ->check(CLI::IsMember({"cubic-torus", "slab", "slab-rough"}));
  auto* lat = sim_cmd->add_option("--lattice", sim.lattice, "Lattice file instead of a family");
  fam->excludes(lat);
  sim_cmd->add_option("--sizes", sim.sizes, "Comma-separated sizes (L or LxLyxLz as L,Ly,Lz)")
      ->excludes(lat);
  sim_cmd->add_option("--ps", sim.ps, "a:b:step or comma list");
  sim_cmd->add_option("--trials", sim.trials, "Maximum trials per point");
  sim_cmd->add_option("--min-trials", sim.min_trials, "Trials before the failure cap applies");
  sim_cmd->add_option("--max-logical", sim.max_logical, "Stop a point after this many failures");
  sim_cmd->add_option("--seed", sim.seed, "Master seed");
  sim_cmd->add_option("--out", sim.out, "CSV path (stdout when omitted)");
  sim_cmd->add_option("--summary", sim.summary, "JSON summary path");
  sim_cmd->add_option("--threads", sim.threads, "Worker threads (default $TORIC3D_THREADS or 1)")
      ->check(CLI::Range(1, 1024));
  sim_cmd->add_flag("--timing", sim.timing, "Record mean decode time");
  sim.decoder.add_to(sim_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*validate_cmd) return run_validate(validate_path);
    if (*decode_cmd) {
      if (dec.syndrome.empty() && dec.error.empty()) {
        throw InputError("decode needs --syndrome or --error");
      }
      return run_decode(dec);
    }
    return run_simulate(sim);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace
}  // namespace toric3d::cli

int main(int argc, char** argv) {
  try {
    return toric3d::cli::run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
