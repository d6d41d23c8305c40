#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "cli.hpp"
#include "su4/density.hpp"
#include "su4/errors.hpp"
#include "su4/haar.hpp"
#include "su4/kernels.hpp"
#include "su4/scan.hpp"
#include "su4/separability.hpp"
#include "su4/su_algebra.hpp"

namespace su4::cli {

namespace {

using nlohmann::json;

std::string num(double x) { return fmt::format("{:.17g}", x); }

std::string matrix_rows(const Matrix4c& m, std::string_view indent) {
  std::string out;
  for (int r = 0; r < 4; ++r) {
    out += indent;
    for (int c = 0; c < 4; ++c) {
      if (c > 0) out += ' ';
      out += num(m(r, c).real()) + ' ' + num(m(r, c).imag());
    }
    out += '\n';
  }
  return out;
}

template <class Range>
std::string join_nums(const Range& values) {
  std::string out;
  for (double x : values) {
    if (!out.empty()) out += ' ';
    out += num(x);
  }
  return out;
}

json matrix_json(const Matrix4c& m) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

json envelope(std::string_view command, json config, json payload) {
  return {{"command", command}, {"config", std::move(config)}, {"payload", std::move(payload)},
          {"version", SU4_VERSION}};
}

// Options shared by several subcommands.
struct Common {
  std::string format = "text";
  std::string output;
  std::optional<std::string> threads;
  bool timing = false;
};

unsigned resolve_threads(const Common& c) {
  std::string text;
  if (c.threads) {
    text = *c.threads;
  } else if (const char* env = std::getenv("SU4_THREADS"); env != nullptr && *env != '\0') {
    text = env;
  } else {
    return std::max(1u, std::thread::hardware_concurrency());
  }
  const long long n = parse_count(text);
  if (n < 1 || n > 4096) throw ArgumentError("thread count must be in 1..4096 (got " + text + ")");
  return static_cast<unsigned>(n);
}

Group parse_group(const std::string& s) {
  if (s == "su2") return Group::SU2;
  if (s == "su3") return Group::SU3;
  if (s == "su4") return Group::SU4;
  throw ArgumentError("unknown group '" + s + "' (su2, su3, su4)");
}

Subsystem parse_subsystem(const std::string& s) {
  if (s == "A" || s == "a") return Subsystem::A;
  if (s == "B" || s == "b") return Subsystem::B;
  throw ArgumentError("unknown subsystem '" + s + "' (A, B)");
}

SpectrumAngles parse_theta(const std::string& s) {
  const auto v = parse_expression_list(s);
  if (v.size() != 3) throw ArgumentError("--theta needs 3 values, got " + std::to_string(v.size()));
  return {v[0], v[1], v[2]};
}

// 12 values: conjugation angles alpha_1..alpha_12 (same path as scans).
// 15 values: the full Euler product.
DensityMatrix state_from_angles(const std::string& angles, const SpectrumAngles& theta) {
  const auto v = angles.empty() ? std::vector<double>(12, 0.0) : parse_expression_list(angles);
  if (v.size() == 12) {
    ConjugationAngles a{};
    std::copy(v.begin(), v.end(), a.begin());
    return rho_full(a, theta);
  }
  if (v.size() == 15) return rho_from_unitary(compose(EulerAngles(Group::SU4, v)), theta);
  throw ArgumentError("--angles needs 12 or 15 values, got " + std::to_string(v.size()));
}

void require_format(const Common& c, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed) {
    if (c.format == f) return;
  }
  throw ArgumentError("unsupported --format '" + c.format + "' for this command");
}

// ---- basis

struct BasisArgs {
  std::optional<int> index;
  bool structure = false;
};

void cmd_basis(const BasisArgs& a, const Common& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  if (a.structure) {
    const auto entries = StructureConstants::instance().nonzero_ordered();
    if (c.format == "json") {
      json list = json::array();
      for (const auto& e : entries) list.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"f", e.value}});
      out << envelope("basis", {{"structure", true}}, {{"structure_constants", list}}).dump(2) << '\n';
      return;
    }
    for (const auto& e : entries) out << fmt::format("f({},{},{}) = {}\n", e.i, e.j, e.k, num(e.value));
    return;
  }

  std::vector<int> indices;
  if (a.index) {
    gell_mann(*a.index);  // range check
    indices.push_back(*a.index);
  } else {
    for (int i = 1; i <= kNumGenerators; ++i) indices.push_back(i);
  }
  if (c.format == "json") {
    json list = json::array();
    for (int i : indices) list.push_back({{"index", i}, {"matrix", matrix_json(gell_mann(i).matrix())}});
    json config = json::object();
    if (a.index) config["index"] = *a.index;
    out << envelope("basis", config, {{"generators", list}}).dump(2) << '\n';
    return;
  }
  for (int i : indices) {
    out << "lambda_" << i << " (re im per entry)\n" << matrix_rows(gell_mann(i).matrix(), "  ");
  }
}

// ---- volume

struct VolumeArgs {
  std::string group = "su4";
  std::string method = "quad";
  std::string nodes = "64";
  std::string samples = "1000000";
  std::uint64_t seed = 0;
};

void cmd_volume(const VolumeArgs& a, const Common& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const Group group = parse_group(a.group);
  VolumeMethod method;
  if (a.method == "quad" || a.method == "quadrature") {
    method = VolumeMethod::quadrature;
  } else if (a.method == "mc" || a.method == "monte_carlo") {
    method = VolumeMethod::monte_carlo;
  } else {
    throw ArgumentError("unknown method '" + a.method + "' (quad, mc)");
  }
  const long long resolution = parse_count(method == VolumeMethod::quadrature ? a.nodes : a.samples);
  const VolumeResult r = group_volume(group, method, resolution, a.seed, resolve_threads(c));
  const double target = analytic_volume(group);
  const double rel = std::abs(r.estimate - target) / target;

  if (c.format == "json") {
    json config{{"group", a.group}, {"method", to_string(method)}};
    json payload{{"estimate", r.estimate},       {"analytic", target},
                 {"relative_error", rel},        {"normalization", r.normalization}};
    if (method == VolumeMethod::quadrature) {
      config["nodes"] = resolution;
    } else {
      config["samples"] = resolution;
      config["seed"] = a.seed;
      payload["standard_error"] = r.standard_error;
    }
    out << envelope("volume", config, payload).dump(2) << '\n';
    return;
  }
  out << "group: " << a.group << '\n' << "method: " << to_string(method) << '\n';
  if (method == VolumeMethod::quadrature) {
    out << "nodes: " << resolution << '\n';
  } else {
    out << "samples: " << resolution << '\n' << "seed: " << a.seed << '\n';
  }
  out << "normalization: " << r.normalization << '\n'
      << "estimate: " << num(r.estimate) << '\n'
      << "analytic: " << num(target) << '\n'
      << "relative_error: " << num(rel) << '\n';
  if (method == VolumeMethod::monte_carlo) out << "standard_error: " << num(r.standard_error) << '\n';
}

// ---- check

struct CheckArgs {
  std::string matrix;
  std::string angles;
  std::string theta;
  double tolerance = kDefaultBoundaryTolerance;
  std::string subsystem = "B";
};

void cmd_check(const CheckArgs& a, const Common& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const Subsystem subsystem = parse_subsystem(a.subsystem);
  Matrix4c m;
  if (!a.matrix.empty()) {
    if (!a.angles.empty() || !a.theta.empty()) throw ArgumentError("--matrix excludes --angles/--theta");
    m = read_matrix_file(a.matrix);
  } else {
    if (a.theta.empty()) throw ArgumentError("check needs --matrix FILE or --theta (with optional --angles)");
    m = state_from_angles(a.angles, parse_theta(a.theta)).matrix();
  }
  const SeparabilityVerdict v = is_entangled(m, a.tolerance, subsystem);
  const Matrix4c pt = partial_transpose(m, subsystem);
  const auto pt_eig = hermitian_eigenvalues(pt);
  const auto resolvent = eigenvalues_via_resolvent(depressed_quartic(char_poly_coeffs(pt)));

  const char* verdict = v.entangled ? "entangled" : "separable";
  if (c.format == "json") {
    json config{{"tolerance", a.tolerance}, {"subsystem", a.subsystem}};
    if (!a.matrix.empty()) config["matrix"] = a.matrix;
    if (!a.angles.empty()) config["angles"] = a.angles;
    if (!a.theta.empty()) config["theta"] = a.theta;
    json payload{{"d", v.d_value},
                 {"min_eigenvalue", v.min_eigenvalue},
                 {"negative_count", v.negative_count},
                 {"verdict", verdict},
                 {"boundary", v.boundary},
                 {"pt_eigenvalues", pt_eig}};
    payload["resolvent_eigenvalues"] = resolvent ? json(*resolvent) : json(nullptr);
    out << envelope("check", config, payload).dump(2) << '\n';
    return;
  }
  out << "d: " << num(v.d_value) << '\n'
      << "min_eigenvalue: " << num(v.min_eigenvalue) << '\n'
      << "negative_count: " << v.negative_count << '\n'
      << "verdict: " << verdict << '\n'
      << "boundary: " << (v.boundary ? "true" : "false") << '\n'
      << "pt_eigenvalues: " << join_nums(pt_eig) << '\n';
  if (resolvent) {
    out << "resolvent_eigenvalues: " << join_nums(*resolvent)
        << '\n';
  } else {
    out << "resolvent_eigenvalues: branch invalid\n";
  }
}

// ---- rho

struct RhoArgs {
  std::string angles;
  std::string theta;
};

void cmd_rho(const RhoArgs& a, const Common& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  if (a.theta.empty()) throw ArgumentError("rho needs --theta");
  const SpectrumAngles theta = parse_theta(a.theta);
  const DensityMatrix rho = state_from_angles(a.angles, theta);
  const auto eig = hermitian_eigenvalues(rho.matrix());
  const auto diag = spectrum(theta);
  const BlochCoefficients w = bloch_coefficients(theta);

  if (c.format == "json") {
    json config{{"theta", a.theta}};
    if (!a.angles.empty()) config["angles"] = a.angles;
    json payload{{"rho", matrix_json(rho.matrix())},
                 {"eigenvalues", eig},
                 {"diagonal", diag},
                 {"bloch", {{"w0", w.w0}, {"w3", w.w3}, {"w8", w.w8}, {"w15", w.w15}}},
                 {"in_spectrum_profile", spectrum_profile_check(theta)}};
    out << envelope("rho", config, payload).dump(2) << '\n';
    return;
  }
  out << "rho (re im per entry):\n" << matrix_rows(rho.matrix(), "  ");
  out << "eigenvalues: " << join_nums(eig) << '\n'
      << "diagonal: " << join_nums(diag) << '\n'
      << "bloch: w0 " << num(w.w0) << " w3 " << num(w.w3) << " w8 " << num(w.w8) << " w15 " << num(w.w15) << '\n'
      << "in_spectrum_profile: " << (spectrum_profile_check(theta) ? "true" : "false") << '\n';
}

// ---- scan

struct ScanArgs {
  std::string samples = "1000";
  std::uint64_t seed = 0;
  bool corners = false;
  std::string profile = "volume";
  std::string theta;
  double tolerance = kDefaultBoundaryTolerance;
  std::string subsystem = "B";
};

void write_csv_record(std::ostream& os, const ScanRecord& r) {
  std::string line = std::to_string(r.index);
  for (double x : r.alpha) line += ',' + num(x);
  line += ',' + num(r.theta.theta1) + ',' + num(r.theta.theta2) + ',' + num(r.theta.theta3);
  line += ',' + num(r.d) + ',' + num(r.min_eigenvalue) + ',' + std::to_string(r.negative_count);
  line += r.entangled ? ",entangled," : ",separable,";
  line += r.boundary ? "1\n" : "0\n";
  os << line;
}

json record_json(const ScanRecord& r) {
  return {{"sample_index", r.index},
          {"alpha", r.alpha},
          {"theta", {r.theta.theta1, r.theta.theta2, r.theta.theta3}},
          {"d", r.d},
          {"min_eig", r.min_eigenvalue},
          {"neg_count", r.negative_count},
          {"verdict", r.entangled ? "entangled" : "separable"},
          {"boundary", r.boundary}};
}

void cmd_scan(const ScanArgs& a, const Common& c, std::ostream& stdout_stream) {
  const std::string format = c.format == "text" ? "csv" : c.format;
  if (format != "csv" && format != "json") throw ArgumentError("scan supports --format csv or json");

  ScanConfig cfg;
  cfg.seed = a.seed;
  cfg.tolerance = a.tolerance;
  cfg.subsystem = parse_subsystem(a.subsystem);
  cfg.workers = resolve_threads(c);
  if (a.profile == "volume") {
    cfg.range = RangeKind::volume;
  } else if (a.profile == "covering") {
    cfg.range = RangeKind::covering;
  } else {
    throw ArgumentError("unknown profile '" + a.profile + "' (volume, covering)");
  }
  if (!a.corners) {
    cfg.samples = parse_count(a.samples);
    if (cfg.samples < 1) throw ArgumentError("--samples must be at least 1");
    if (!a.theta.empty()) {
      cfg.spectrum = SpectrumPolicy::fixed;
      cfg.theta = parse_theta(a.theta);
    }
  }

  std::ofstream file;
  if (!c.output.empty()) {
    file.open(c.output, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file '" + c.output + "'");
  }
  std::ostream& os = c.output.empty() ? stdout_stream : file;

  bool first = true;
  ScanSink sink;
  if (format == "csv") {
    os << "sample_index";
    for (int i = 1; i <= 12; ++i) os << ",alpha" << i;
    os << ",theta1,theta2,theta3,d,min_eig,neg_count,verdict,boundary\n";
    sink = [&](const ScanRecord& r) { write_csv_record(os, r); };
  } else {
    json config{{"mode", a.corners ? "corners" : "random"},
                {"profile", a.profile},
                {"tolerance", a.tolerance},
                {"subsystem", a.subsystem}};
    if (!a.corners) {
      config["samples"] = cfg.samples;
      config["seed"] = a.seed;
      config["spectrum"] = a.theta.empty() ? "uniform" : "fixed";
      if (!a.theta.empty()) config["theta"] = a.theta;
    }
    os << "{\"command\":\"scan\",\"config\":" << config.dump() << ",\"records\":[\n";
    sink = [&](const ScanRecord& r) {
      os << (first ? "" : ",\n") << record_json(r).dump();
      first = false;
    };
  }

  const ScanSummary s = a.corners ? scan_corners(cfg, sink) : scan(cfg, sink);

  if (format == "csv") {
    os << fmt::format("# summary total={} separable={} entangled={} boundary={} max_neg_count={} min_d={} max_d={}\n",
                      s.total, s.separable, s.entangled, s.boundary, s.max_negative_count, num(s.min_d),
                      num(s.max_d));
  } else {
    const json summary{{"total", s.total},       {"separable", s.separable},
                       {"entangled", s.entangled}, {"boundary", s.boundary},
                       {"max_neg_count", s.max_negative_count}, {"min_d", s.min_d},
                       {"max_d", s.max_d}};
    os << "\n],\"summary\":" << summary.dump() << ",\"version\":\"" << SU4_VERSION << "\"}\n";
  }
  os.flush();
  if (!os) throw IoError("failed writing scan output");
}

void add_common(CLI::App* sub, Common& c, bool with_output) {
  sub->add_option("--format", c.format, "text | json (scan: csv | json)");
  sub->add_option("--threads", c.threads, "worker threads (default: SU4_THREADS, else all cores)");
  sub->add_flag("--timing", c.timing, "report elapsed time on stderr");
  if (with_output) sub->add_option("-o,--output", c.output, "write to a file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SU(4) Euler angles, Haar measure and two-qubit separability"};
  app.name("su4euler");
  app.set_version_flag("--version", SU4_VERSION);
  app.require_subcommand(1);

  Common common;
  BasisArgs basis;
  VolumeArgs volume;
  CheckArgs check;
  RhoArgs rho;
  ScanArgs scan_args;

  auto* b = app.add_subcommand("basis", "print Gell-Mann generators or structure constants");
  b->add_option("--index", basis.index, "generator index 1..15");
  b->add_flag("--structure", basis.structure, "list nonzero f(i,j,k) with i<j<k");
  add_common(b, common, false);

  auto* v = app.add_subcommand("volume", "group volume by quadrature or Monte Carlo");
  v->add_option("--group", volume.group, "su2 | su3 | su4")->capture_default_str();
  v->add_option("--method", volume.method, "quad | mc")->capture_default_str();
  v->add_option("--nodes", volume.nodes, "Gauss-Legendre nodes per axis")->capture_default_str();
  v->add_option("--samples", volume.samples, "Monte Carlo samples")->capture_default_str();
  v->add_option("--seed", volume.seed, "random seed")->capture_default_str();
  add_common(v, common, false);

  auto* k = app.add_subcommand("check", "separability verdict for one state");
  k->add_option("--matrix", check.matrix, "matrix file: 4 rows of 8 reals (re im ...)");
  k->add_option("--angles", check.angles, "12 or 15 comma-separated angles (default all zero)");
  k->add_option("--theta", check.theta, "3 comma-separated spectrum angles");
  k->add_option("--tolerance", check.tolerance, "boundary tolerance on |d|")->capture_default_str();
  k->add_option("--subsystem", check.subsystem, "A | B")->capture_default_str();
  add_common(k, common, false);

  auto* r = app.add_subcommand("rho", "build a density matrix from angles");
  r->add_option("--angles", rho.angles, "12 or 15 comma-separated angles (default all zero)");
  r->add_option("--theta", rho.theta, "3 comma-separated spectrum angles");
  add_common(r, common, false);

  auto* s = app.add_subcommand("scan", "classify many random or corner states");
  s->add_option("--samples", scan_args.samples, "number of random states")->capture_default_str();
  s->add_option("--seed", scan_args.seed, "random seed")->capture_default_str();
  s->add_flag("--corners", scan_args.corners, "all 2^15 range corners instead of random states");
  s->add_option("--profile", scan_args.profile, "volume | covering")->capture_default_str();
  s->add_option("--theta", scan_args.theta, "fix the spectrum angles (default: uniform in profile)");
  s->add_option("--tolerance", scan_args.tolerance, "boundary tolerance on |d|")->capture_default_str();
  s->add_option("--subsystem", scan_args.subsystem, "A | B")->capture_default_str();
  add_common(s, common, true);

  std::vector<const char*> argv{"su4euler"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SU4_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (b->parsed()) cmd_basis(basis, common, out);
    if (v->parsed()) cmd_volume(volume, common, out);
    if (k->parsed()) cmd_check(check, common, out);
    if (r->parsed()) cmd_rho(rho, common, out);
    if (s->parsed()) cmd_scan(scan_args, common, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  if (common.timing) {
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << fmt::format("elapsed_seconds: {:.6f}\n", elapsed);
  }
  return kExitOk;
}

}  // namespace su4::cli
