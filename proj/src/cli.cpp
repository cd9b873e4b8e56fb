#include "janus/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "janus/analytic.hpp"
#include "janus/error.hpp"
#include "janus/fock.hpp"
#include "janus/optimizer.hpp"

namespace janus {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text, const std::string& what) {
  const std::string_view t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw Error(ErrorKind::InvalidInput, what + ": expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

int parse_int(std::string_view text, const std::string& what) {
  const std::string_view t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw Error(ErrorKind::InvalidInput, what + ": expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::string num(double v, int digits = 10) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// ---- g2 --------------------------------------------------------------------

struct G2Flags {
  double r = 0.0;
  std::optional<double> s;
  std::string theta = "0";
  std::string phi = "0";
  std::optional<std::string> Delta;
  std::string delta = "0";
  double eta = 0.0;
  std::optional<double> chi;
};

int cmd_g2(const G2Flags& f, const CliConfig& cfg, std::ostream& out) {
  const double s = f.s.value_or(f.r);
  const double phi = parse_angle(f.phi);
  const double theta = f.Delta ? phi + parse_angle(*f.Delta) : parse_angle(f.theta);
  const double delta = parse_angle(f.delta);
  const SqueezeParam xi = SqueezeParam::make(f.r, theta);
  const SqueezeParam zeta = SqueezeParam::make(s, phi);
  const double chi = f.chi ? *f.chi : solve_chi(f.eta, xi, zeta, delta);
  const JanusParams p = JanusParams::make(xi, zeta, chi, f.eta, delta);

  const double g2 = g2_general(p, cfg.tol);
  fock::FockVector v = [&] {
    if (!cfg.cutoff) return fock::janus_fock(p, cfg.tol.tail);
    return fock::superpose(chi, fock::squeezed_fock(xi, *cfg.cutoff, cfg.tol.tail),
                           std::polar(f.eta, delta),
                           fock::squeezed_fock(zeta, *cfg.cutoff, cfg.tol.tail));
  }();
  const double g2_oracle = fock::g2_fock(v, cfg.tol.min_mean_photon);
  const double diff = g2 - g2_oracle;

  out << "g2 (analytic)  " << num(g2, 12) << '\n';
  out << "g2 (oracle)    " << num(g2_oracle, 12) << '\n';
  out << "difference     " << sci(diff) << '\n';
  out << "|chi|          " << num(chi, 12) << (f.chi ? "" : "  (solved)") << '\n';
  out << "norm residual  " << sci(norm_residual(p)) << '\n';
  out << "mean photons   " << num(moments(p).mean_photon, 12) << '\n';
  out << "cutoff         " << v.cutoff() << '\n';
  if (std::abs(diff) > cfg.tol.oracle) {
    out << "oracle disagreement exceeds " << sci(cfg.tol.oracle) << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  SqueezeParam squeeze() {
    const double r = uniform(0.05, 1.2);
    return SqueezeParam::make(r, uniform(0.0, kTwoPi));
  }

 private:
  std::mt19937_64 rng_;
};

struct SuiteReport {
  std::string name;
  int samples = 0;
  double max_dev = 0.0;
  double tol = 0.0;
  std::string worst;
  bool pass() const { return max_dev <= tol; }
};

void track(SuiteReport& rep, double dev, const std::function<std::string()>& where) {
  ++rep.samples;
  if (!(dev <= rep.max_dev)) {
    rep.max_dev = std::isnan(dev) ? std::numeric_limits<double>::infinity() : dev;
    rep.worst = where();
  }
}

std::string describe(const SqueezeParam& a, const SqueezeParam& b) {
  return "r=" + num(a.r, 17) + " theta=" + num(a.theta, 17) + " s=" + num(b.r, 17) +
         " phi=" + num(b.theta, 17);
}

SuiteReport suite_overlap(int samples, std::uint64_t seed, const CliConfig& cfg) {
  SuiteReport rep{"overlap", 0, 0.0, cfg.tol.oracle, {}};
  Sampler rng(seed);
  for (int i = 0; i < samples; ++i) {
    const SqueezeParam a = rng.squeeze();
    const SqueezeParam b = rng.squeeze();
    const int cutoff = fock::select_cutoff(std::max(a.r, b.r), cfg.tol.tail);
    const cplx oracle = fock::cross_moment_fock(fock::squeezed_fock(a, cutoff),
                                                fock::squeezed_fock(b, cutoff), fock::CrossOrder::Overlap);
    const double dev = std::max(std::abs(overlap(a, b) - oracle),
                                std::abs(overlap(a, b) - std::conj(overlap(b, a))));
    track(rep, dev, [&] { return describe(a, b); });
  }
  return rep;
}

SuiteReport suite_cross(int samples, std::uint64_t seed, const CliConfig& cfg) {
  SuiteReport rep{"cross", 0, 0.0, cfg.tol.oracle, {}};
  Sampler rng(seed);
  for (int i = 0; i < samples; ++i) {
    const SqueezeParam a = rng.squeeze();
    const SqueezeParam b = rng.squeeze();
    const int cutoff = fock::select_cutoff(std::max(a.r, b.r), cfg.tol.tail);
    const fock::FockVector va = fock::squeezed_fock(a, cutoff);
    const fock::FockVector vb = fock::squeezed_fock(b, cutoff);
    const cplx n1 = cross_n(a, b);
    const cplx n2 = cross_n2(a, b);
    const double dev1 =
        std::abs(n1 - fock::cross_moment_fock(va, vb, fock::CrossOrder::N)) / std::max(1.0, std::abs(n1));
    const double dev2 =
        std::abs(n2 - fock::cross_moment_fock(va, vb, fock::CrossOrder::N2)) / std::max(1.0, std::abs(n2));
    track(rep, std::max(dev1, dev2), [&] { return describe(a, b); });
  }
  return rep;
}

SuiteReport suite_g2(int samples, std::uint64_t seed, const CliConfig& cfg) {
  SuiteReport rep{"g2", 0, 0.0, cfg.tol.oracle, {}};
  Sampler rng(seed);
  while (rep.samples < samples) {
    const SqueezeParam a = rng.squeeze();
    const SqueezeParam b = rng.squeeze();
    const double eta = rng.uniform(0.0, 3.0);
    const double delta = rng.uniform(0.0, kTwoPi);
    double chi = 0.0;
    try {
      chi = solve_chi(eta, a, b, delta);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Infeasible) continue;
      throw;
    }
    const JanusParams p = JanusParams::make(a, b, chi, eta, delta);
    const double dev = std::abs(g2_general(p, cfg.tol) - fock::g2_fock(fock::janus_fock(p, cfg.tol.tail)));
    track(rep, dev, [&] {
      return describe(a, b) + " chi=" + num(chi, 17) + " eta=" + num(eta, 17) + " delta=" + num(delta, 17);
    });
  }
  return rep;
}

// z sqrt(1-z) Σ (2n+1)^k C_n z^n with C_n the coefficients of (1-z)^{-1/2}
cplx weighted_series(cplx z, int power, int terms) {
  std::complex<long double> acc{};
  std::complex<long double> zn{1.0L, 0.0L};
  const std::complex<long double> zl{z.real(), z.imag()};
  long double c = 1.0L;
  for (int n = 0; n < terms; ++n) {
    const long double w = (power == 1) ? (2.0L * n + 1.0L) : (2.0L * n + 1.0L) * (2.0L * n + 1.0L);
    acc += w * c * zn;
    zn *= zl;
    c *= (2.0L * n + 1.0L) / (2.0L * n + 2.0L);
  }
  const cplx sum{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  return z * std::sqrt(1.0 - z) * sum;
}

SuiteReport suite_series(int samples, std::uint64_t seed) {
  SuiteReport rep{"series", 0, 0.0, 1e-10, {}};
  Sampler rng(seed);
  for (int i = 0; i < samples; ++i) {
    const cplx z = std::polar(0.9 * std::sqrt(rng.uniform(0.0, 1.0)), rng.uniform(0.0, kTwoPi));
    const cplx first = z / (1.0 - z);
    const cplx second = z * (2.0 * z + 1.0) / ((1.0 - z) * (1.0 - z));
    const double dev =
        std::max(std::abs(weighted_series(z, 1, 500) - first) / std::max(1.0, std::abs(first)),
                 std::abs(weighted_series(z, 2, 500) - second) / std::max(1.0, std::abs(second)));
    track(rep, dev, [&] { return "z=" + num(z.real(), 17) + (z.imag() < 0 ? "" : "+") + num(z.imag(), 17) + "i"; });
  }
  return rep;
}

std::vector<SuiteReport> suite_oddcat(int samples, std::uint64_t seed, const CliConfig& cfg) {
  SuiteReport curve{"oddcat/boundary_curve", 0, 0.0, cfg.tol.oracle, {}};
  SuiteReport poly{"oddcat/g2_boundary", 0, 0.0, cfg.tol.oracle, {}};
  Sampler rng(seed);
  for (int i = 0; i < samples; ++i) {
    const double r = rng.uniform(0.05, 1.5);
    const double oracle = fock::g2_fock(fock::odd_cat(r));
    const double rs[] = {r};
    const double dev_curve = std::abs(boundary_curve(rs).front().g2 - oracle);
    const double dev_poly = std::abs(g2_boundary(r) - oracle);
    track(curve, dev_curve, [&] { return "r=" + num(r, 17); });
    track(poly, dev_poly, [&] { return "r=" + num(r, 17); });
  }
  return {curve, poly};
}

int cmd_verify(const std::string& suite, int samples, std::uint64_t seed, const CliConfig& cfg,
               std::ostream& out) {
  if (samples < 1) throw Error(ErrorKind::InvalidInput, "--samples must be >= 1");
  std::vector<SuiteReport> reports;
  const bool all = suite == "all";
  if (all || suite == "overlap") reports.push_back(suite_overlap(samples, seed, cfg));
  if (all || suite == "cross") reports.push_back(suite_cross(samples, seed, cfg));
  if (all || suite == "g2") reports.push_back(suite_g2(samples, seed, cfg));
  if (all || suite == "series") reports.push_back(suite_series(samples, seed));
  if (all || suite == "oddcat") {
    for (SuiteReport& r : suite_oddcat(samples, seed, cfg)) reports.push_back(std::move(r));
  }
  bool ok = true;
  for (const SuiteReport& r : reports) {
    out << r.name << ": samples=" << r.samples << " max_dev=" << sci(r.max_dev) << " tol=" << sci(r.tol)
        << ' ' << (r.pass() ? "PASS" : "FAIL") << '\n';
    if (!r.pass()) {
      out << "  worst: " << r.worst << '\n';
      ok = false;
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

// ---- scan ------------------------------------------------------------------

Axis parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 4) {
    throw Error(ErrorKind::InvalidInput, "--axis expects NAME:lo:hi:points, got '" + text + "'");
  }
  return Axis{param_from_string(parts[0]), parse_angle(parts[1]), parse_angle(parts[2]),
              parse_int(parts[3], "--axis points")};
}

void apply_fix(FixedParams& fixed, const std::string& text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos) throw Error(ErrorKind::InvalidInput, "--fix expects NAME=value, got '" + text + "'");
  fixed.set(param_from_string(trim(std::string_view(text).substr(0, eq))),
            parse_angle(std::string_view(text).substr(eq + 1)));
}

std::filesystem::path resolve_out(const CliConfig& cfg, const std::string& out, const std::string& fallback) {
  std::filesystem::path p = out.empty() ? std::filesystem::path(fallback) : std::filesystem::path(out);
  if (p.is_relative() && !cfg.out_dir.empty()) p = cfg.out_dir / p;
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create directory '" + p.parent_path().string() + "': " + ec.message());
  }
  return p;
}

struct ScanFlags {
  std::string fig;
  std::vector<std::string> axes;
  std::vector<std::string> fixes;
  bool equal_squeeze = false;
  std::string formula;
  std::string out;
  std::string format;
  std::optional<int> points;
};

int cmd_scan(const ScanFlags& f, const CliConfig& cfg, std::ostream& out) {
  GridSpec spec;
  Formula formula = Formula::General;
  if (!f.fig.empty()) {
    if (!f.axes.empty()) throw Error(ErrorKind::InvalidInput, "--fig and --axis are mutually exclusive");
    ScanPreset preset = figure_preset(f.fig, f.points.value_or(cfg.points));
    spec = preset.spec;
    formula = preset.formula;
  } else {
    if (f.axes.empty()) throw Error(ErrorKind::InvalidInput, "scan needs --fig or at least one --axis");
    for (const std::string& a : f.axes) spec.axes.push_back(parse_axis(a));
  }
  for (const std::string& fix : f.fixes) apply_fix(spec.fixed, fix);
  if (f.equal_squeeze) spec.equal_squeeze = true;
  if (!f.formula.empty()) formula = formula_from_string(f.formula);

  ScanFormat format = cfg.format;
  if (!f.format.empty()) {
    format = format_from_string(f.format);
  } else if (!f.out.empty()) {
    const std::string ext = std::filesystem::path(f.out).extension().string();
    if (ext == ".csv" || ext == ".json") format = format_from_path(f.out);
  }
  const std::string ext = format == ScanFormat::Json ? ".json" : ".csv";
  const std::filesystem::path path =
      resolve_out(cfg, f.out, (f.fig.empty() ? std::string("scan") : "fig" + f.fig) + ext);

  const ScanResult res = run_scan(spec, formula, cfg.tol);
  write_scan(res, path, format);
  const auto feasible = std::count_if(res.values.begin(), res.values.end(), [](const auto& v) { return v.has_value(); });
  out << "wrote " << path.string() << '\n';
  out << "points " << res.values.size() << ", feasible " << feasible << '\n';
  if (const auto m = res.min_value()) out << "min g2 " << num(*m, 12) << '\n';
  return kExitOk;
}

// ---- optimize --------------------------------------------------------------

nlohmann::ordered_json record_json(const OptimumRecord& r) {
  return {{"r", r.r},           {"s", r.s},     {"Delta", r.Delta},
          {"delta", r.delta},   {"eta", r.eta_mag}, {"chi", r.chi_mag},
          {"g2", r.g2},         {"kind", std::string(to_string(r.kind))},
          {"evaluations", r.evaluations}, {"skipped", r.skipped}, {"converged", r.converged}};
}

void print_record(std::ostream& out, const std::string& label, const OptimumRecord& r) {
  out << label << ": r=" << num(r.r) << " eta=" << num(r.eta_mag) << " chi=" << num(r.chi_mag)
      << " g2=" << num(r.g2, 12) << " evaluations=" << r.evaluations
      << (r.converged ? "" : " (not converged)") << '\n';
}

void write_json_file(const CliConfig& cfg, const std::string& out, const nlohmann::ordered_json& j,
                     std::ostream& os) {
  if (out.empty()) return;
  const std::filesystem::path path = resolve_out(cfg, out, out);
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
  f << j.dump(2) << '\n';
  if (!f) throw Error(ErrorKind::Io, "write to '" + path.string() + "' failed");
  os << "wrote " << path.string() << '\n';
}

int cmd_optimize(const std::string& mode, const std::string& out_file, const CliConfig& cfg,
                 std::ostream& out) {
  nlohmann::ordered_json j;
  int code = kExitOk;
  if (mode == "sweet-spot") {
    SweetSpotOptions opts;
    opts.r_points = cfg.points;
    opts.eta_points = cfg.points;
    const SweetSpot s = sweet_spot(opts);
    print_record(out, "grid   ", s.grid);
    print_record(out, "refined", s.refined);
    print_record(out, "slice  ", s.slice);
    const bool in_band = s.refined.g2 >= 0.5670 && s.refined.g2 <= 0.5678;
    out << "reference band [0.5670, 0.5678]: " << (in_band ? "inside" : "outside") << '\n';
    if (!in_band) code = kExitVerifyFailed;
    j = {{"grid", record_json(s.grid)}, {"refined", record_json(s.refined)}, {"slice", record_json(s.slice)}};
  } else if (mode == "boundary") {
    std::vector<double> rs{1e-4};
    for (int i = 1; i <= 600; ++i) rs.push_back(0.01 * i);
    const std::vector<CurvePoint> curve = boundary_curve(rs);
    out << "r            boundary        polynomial\n";
    j = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const CurvePoint& c = curve[i];
      j.push_back({{"r", c.r}, {"g2", c.g2}, {"g2_polynomial", g2_boundary(c.r)}});
      if (i == 0 || i % 50 == 0 || i + 1 == curve.size()) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-12.6g %-15.10f %.10f\n", c.r, c.g2, g2_boundary(c.r));
        out << buf;
      }
    }
  } else if (mode == "table-s1") {
    out << "r     |chi|        g2           reference  deviation\n";
    j = nlohmann::ordered_json::array();
    for (const RidgeReference& row : kRidgeReference) {
      char buf[128];
      try {
        const OptimumRecord rec = ridge_row(row.r, kRidgeEta, cfg.tol);
        const double dev = rec.g2 - row.g2;
        const bool ok = std::abs(dev) <= 5e-5;
        if (!ok) code = kExitVerifyFailed;
        std::snprintf(buf, sizeof buf, "%.2f  %-11.8f  %-11.8f  %.5f    %+.2e%s\n", row.r, rec.chi_mag, rec.g2,
                      row.g2, dev, ok ? "" : "  MISMATCH");
        auto rj = record_json(rec);
        rj["reference"] = row.g2;
        rj["deviation"] = dev;
        j.push_back(rj);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Infeasible) throw;
        code = kExitVerifyFailed;
        std::snprintf(buf, sizeof buf, "%.2f  infeasible at |eta|=%.5f      %.5f\n", row.r, kRidgeEta, row.g2);
        j.push_back({{"r", row.r}, {"reference", row.g2}, {"status", "infeasible"}});
      }
      out << buf;
    }
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown optimize mode '" + mode + "'");
  }
  write_json_file(cfg, out_file, j, out);
  return code;
}

}  // namespace

// ---- config ----------------------------------------------------------------

void CliConfig::set(std::string_view key, std::string_view value) {
  const std::string k(trim(key));
  const std::string_view v = trim(value);
  if (k == "tol.norm") {
    tol.norm = parse_double(v, k);
  } else if (k == "tol.oracle") {
    tol.oracle = parse_double(v, k);
  } else if (k == "tol.tail") {
    tol.tail = parse_double(v, k);
  } else if (k == "cutoff") {
    if (v == "auto") {
      cutoff.reset();
    } else {
      cutoff = parse_int(v, k);
    }
  } else if (k == "out_dir") {
    out_dir = std::string(v);
  } else if (k == "format") {
    format = format_from_string(std::string(v));
  } else if (k == "points") {
    points = parse_int(v, k);
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown config key '" + k + "'");
  }
}

void CliConfig::load_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorKind::Io, "cannot open config '" + path.string() + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string_view text(line);
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::Parse, path.string() + ":" + std::to_string(lineno) + ": expected key = value");
    }
    try {
      set(text.substr(0, eq), text.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.kind(), path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void CliConfig::validate() const {
  if (!(tol.norm > 0.0) || !(tol.oracle > 0.0) || !(tol.tail > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "tolerances must be > 0");
  }
  if (cutoff && (*cutoff < 2 || *cutoff % 2 != 0 || *cutoff > fock::kMaxCutoff)) {
    throw Error(ErrorKind::InvalidInput, "cutoff must be even, >= 2 and <= " + std::to_string(fock::kMaxCutoff));
  }
  if (points < 2) throw Error(ErrorKind::InvalidInput, "points must be >= 2");
}

double parse_angle(std::string_view text) {
  std::string_view t = trim(text);
  const auto pos = t.find("pi");
  if (pos == std::string_view::npos) return parse_double(t, "angle");
  double factor = 1.0;
  std::string_view head = t.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty() && head != "+") {
    factor = parse_double(head, "angle");
  }
  std::string_view tail = t.substr(pos + 2);
  if (!tail.empty()) {
    if (tail.front() != '/') throw Error(ErrorKind::InvalidInput, "angle: cannot parse '" + std::string(text) + "'");
    const double divisor = parse_double(tail.substr(1), "angle");
    if (divisor == 0.0) throw Error(ErrorKind::InvalidInput, "angle: division by zero");
    return factor * kPi / divisor;
  }
  return factor * kPi;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Undefined:
    case ErrorKind::Singular:
    case ErrorKind::ZeroVector: return kExitUndefined;
    case ErrorKind::Io: return kExitIo;
    default: return kExitInvalid;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Second-order coherence of two-squeezed-vacuum superpositions", "janus"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kEngineVersion);

  std::string config_path;
  std::optional<double> tol_norm, tol_oracle, tol_tail;
  std::optional<std::string> cutoff_flag, out_dir_flag;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--tol-norm", tol_norm, "normalization tolerance (default 1e-10)");
  app.add_option("--tol-oracle", tol_oracle, "analytic/oracle agreement tolerance (default 1e-8)");
  app.add_option("--tail", tol_tail, "certified Fock truncation tail (default 1e-12)");
  app.add_option("--cutoff", cutoff_flag, "Fock cutoff: even integer or 'auto'");
  app.add_option("--out-dir", out_dir_flag, std::string("output directory (default $") + kOutDirEnv + ")");

  G2Flags g2f;
  CLI::App* g2 = app.add_subcommand("g2", "evaluate g2 analytically and with the Fock oracle");
  g2->add_option("--r", g2f.r, "squeezing magnitude of the first component")->required();
  g2->add_option("--s", g2f.s, "squeezing magnitude of the second component (default r)");
  g2->add_option("--theta", g2f.theta, "phase of the first squeezer");
  g2->add_option("--phi", g2f.phi, "phase of the second squeezer");
  g2->add_option("--Delta", g2f.Delta, "relative squeezing phase theta - phi (overrides --theta)");
  g2->add_option("--delta", g2f.delta, "relative superposition phase");
  g2->add_option("--eta", g2f.eta, "amplitude |eta| of the second component");
  g2->add_option("--chi", g2f.chi, "amplitude |chi| (default: solved from normalization)");

  std::string suite = "all";
  int samples = 100;
  std::uint64_t seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "check analytic formulas against the Fock oracle");
  verify->add_option("--suite", suite, "overlap|cross|g2|series|oddcat|all")
      ->check(CLI::IsMember({"overlap", "cross", "g2", "series", "oddcat", "all"}));
  verify->add_option("--samples", samples, "samples per suite");
  verify->add_option("--seed", seed, "sampler seed");

  ScanFlags sf;
  CLI::App* scan = app.add_subcommand("scan", "grid scan written as CSV or JSON");
  scan->add_option("--fig", sf.fig, "figure preset: 1, 2a, 2b, 3a-3d, 4, 5, 5c");
  scan->add_option("--axis", sf.axes, "NAME:lo:hi:points, NAME in r,s,Delta,delta,eta (repeatable)");
  scan->add_option("--fix", sf.fixes, "NAME=value for a non-scanned parameter (repeatable)");
  scan->add_flag("--equal-squeeze", sf.equal_squeeze, "tie s to r");
  scan->add_option("--formula", sf.formula, "general|equal|optimal|boundary");
  scan->add_option("--out", sf.out, "output file (relative paths go under the output directory)");
  scan->add_option("--format", sf.format, "csv|json (default from extension or config)");
  scan->add_option("--points", sf.points, "points per axis for presets (default 256)");

  std::string mode;
  std::string opt_out;
  CLI::App* optimize = app.add_subcommand("optimize", "sweet spot, boundary curve or ridge table");
  optimize->add_option("--mode", mode, "sweet-spot|boundary|table-s1")
      ->required()
      ->check(CLI::IsMember({"sweet-spot", "boundary", "table-s1"}));
  optimize->add_option("--out", opt_out, "write the records as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    CliConfig cfg;
    if (const char* env = std::getenv(kOutDirEnv); env && *env) cfg.out_dir = env;
    if (!config_path.empty()) cfg.load_file(config_path);
    if (tol_norm) cfg.tol.norm = *tol_norm;
    if (tol_oracle) cfg.tol.oracle = *tol_oracle;
    if (tol_tail) cfg.tol.tail = *tol_tail;
    if (cutoff_flag) cfg.set("cutoff", *cutoff_flag);
    if (out_dir_flag) cfg.out_dir = *out_dir_flag;
    cfg.validate();

    if (g2->parsed()) return cmd_g2(g2f, cfg, out);
    if (verify->parsed()) return cmd_verify(suite, samples, seed, cfg, out);
    if (scan->parsed()) return cmd_scan(sf, cfg, out);
    if (optimize->parsed()) return cmd_optimize(mode, opt_out, cfg, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitInvalid;
}

}  // namespace janus
