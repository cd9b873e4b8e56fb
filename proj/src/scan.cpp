#include "janus/scan.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "janus/error.hpp"

namespace janus {

namespace {

using ojson = nlohmann::ordered_json;

constexpr Param kAllParams[] = {Param::r, Param::s, Param::Delta, Param::delta, Param::eta};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorKind::Parse,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

double parse_number(std::string_view text, std::size_t line, std::size_t column) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    parse_fail(line, column, "expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

int parse_int(std::string_view text, std::size_t line, std::size_t column) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    parse_fail(line, column, "expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// ---- CSV -------------------------------------------------------------------

void write_csv(const ScanResult& res, std::ostream& os) {
  const GridSpec& spec = res.spec;
  os << "# janus scan\n";
  os << "# formula=" << to_string(res.formula) << '\n';
  os << "# equal_squeeze=" << (spec.equal_squeeze ? 1 : 0) << '\n';
  for (Param p : kAllParams) os << "# fixed " << to_string(p) << '=' << fmt17(spec.fixed.get(p)) << '\n';
  for (const Axis& a : spec.axes) {
    os << "# axis " << to_string(a.param) << ' ' << fmt17(a.lo) << ' ' << fmt17(a.hi) << ' '
       << a.points << '\n';
  }
  os << "# meta timestamp=" << res.meta.timestamp << '\n';
  os << "# meta engine_version=" << res.meta.engine_version << '\n';
  os << "# meta tol.norm=" << fmt17(res.meta.tol.norm) << '\n';
  os << "# meta tol.oracle=" << fmt17(res.meta.tol.oracle) << '\n';
  os << "# meta tol.tail=" << fmt17(res.meta.tol.tail) << '\n';

  for (const Axis& a : spec.axes) os << to_string(a.param) << ',';
  os << "g2\n";
  for (std::size_t i = 0; i < res.values.size(); ++i) {
    const FixedParams p = spec.point(i);
    for (const Axis& a : spec.axes) os << fmt17(p.get(a.param)) << ',';
    if (res.values[i]) os << fmt17(*res.values[i]);
    os << '\n';
  }
}

ScanResult read_csv(std::istream& is) {
  ScanResult res;
  res.spec.axes.clear();
  bool have_header = false;
  std::size_t row = 0;
  std::size_t expected = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string_view text(line);
    if (text.front() == '#') {
      if (have_header) parse_fail(lineno, 1, "comment after header");
      std::string_view body = text.substr(1);
      while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      const std::size_t col = line.size() - body.size() + 1;
      if (body.starts_with("formula=")) {
        res.formula = formula_from_string(body.substr(8));
      } else if (body.starts_with("equal_squeeze=")) {
        res.spec.equal_squeeze = body.substr(14) == "1";
      } else if (body.starts_with("fixed ")) {
        const std::string_view kv = body.substr(6);
        const std::size_t eq = kv.find('=');
        if (eq == std::string_view::npos) parse_fail(lineno, col, "malformed fixed line");
        res.spec.fixed.set(param_from_string(kv.substr(0, eq)),
                           parse_number(kv.substr(eq + 1), lineno, col + 6 + eq + 1));
      } else if (body.starts_with("axis ")) {
        const auto parts = split(body.substr(5), ' ');
        if (parts.size() != 4) parse_fail(lineno, col, "axis line needs: name lo hi points");
        res.spec.axes.push_back(Axis{param_from_string(parts[0]), parse_number(parts[1], lineno, col),
                                     parse_number(parts[2], lineno, col),
                                     parse_int(parts[3], lineno, col)});
      } else if (body.starts_with("meta ")) {
        const std::string_view kv = body.substr(5);
        const std::size_t eq = kv.find('=');
        if (eq == std::string_view::npos) parse_fail(lineno, col, "malformed meta line");
        const std::string_view key = kv.substr(0, eq);
        const std::string_view val = kv.substr(eq + 1);
        if (key == "timestamp") res.meta.timestamp = val;
        else if (key == "engine_version") res.meta.engine_version = val;
        else if (key == "tol.norm") res.meta.tol.norm = parse_number(val, lineno, col);
        else if (key == "tol.oracle") res.meta.tol.oracle = parse_number(val, lineno, col);
        else if (key == "tol.tail") res.meta.tol.tail = parse_number(val, lineno, col);
      }
      continue;
    }
    if (!have_header) {
      try {
        res.spec.validate();
      } catch (const Error& e) {
        parse_fail(lineno, 1, std::string("invalid grid metadata: ") + e.what());
      }
      const auto names = split(text, ',');
      if (names.size() != res.spec.axes.size() + 1 || names.back() != "g2") {
        parse_fail(lineno, 1, "header must list the axes followed by g2");
      }
      for (std::size_t k = 0; k < res.spec.axes.size(); ++k) {
        if (names[k] != to_string(res.spec.axes[k].param)) {
          parse_fail(lineno, 1, "header column '" + std::string(names[k]) + "' does not match axis");
        }
      }
      have_header = true;
      expected = res.spec.size();
      res.values.reserve(expected);
      continue;
    }
    const auto fields = split(text, ',');
    if (fields.size() != res.spec.axes.size() + 1) {
      parse_fail(lineno, 1, "expected " + std::to_string(res.spec.axes.size() + 1) + " fields");
    }
    if (row >= expected) parse_fail(lineno, 1, "more data rows than the grid holds");
    const FixedParams p = res.spec.point(row);
    std::size_t col = 1;
    for (std::size_t k = 0; k < res.spec.axes.size(); ++k) {
      if (parse_number(fields[k], lineno, col) != p.get(res.spec.axes[k].param)) {
        parse_fail(lineno, col, "coordinate does not match the grid");
      }
      col += fields[k].size() + 1;
    }
    if (fields.back().empty()) {
      res.values.emplace_back();
      res.status.push_back(PointStatus::Infeasible);
    } else {
      res.values.emplace_back(parse_number(fields.back(), lineno, col));
      res.status.push_back(PointStatus::Ok);
    }
    ++row;
  }
  if (!have_header) parse_fail(lineno, 1, "missing header row");
  if (row != expected) {
    parse_fail(lineno, 1, "expected " + std::to_string(expected) + " data rows, got " +
                              std::to_string(row));
  }
  return res;
}

// ---- JSON ------------------------------------------------------------------

void write_json(const ScanResult& res, std::ostream& os) {
  ojson j;
  ojson axes = ojson::array();
  for (const Axis& a : res.spec.axes) {
    axes.push_back({{"name", to_string(a.param)}, {"lo", a.lo}, {"hi", a.hi}, {"points", a.points}});
  }
  ojson fixed;
  for (Param p : kAllParams) fixed[std::string(to_string(p))] = res.spec.fixed.get(p);
  j["spec"] = {{"axes", axes}, {"fixed", fixed}, {"equal_squeeze", res.spec.equal_squeeze}};
  j["formula"] = to_string(res.formula);
  ojson values = ojson::array();
  ojson status = ojson::array();
  for (std::size_t i = 0; i < res.values.size(); ++i) {
    values.push_back(res.values[i] ? ojson(*res.values[i]) : ojson(nullptr));
    status.push_back(to_string(res.status[i]));
  }
  j["values"] = std::move(values);
  j["status"] = std::move(status);
  j["meta"] = {{"timestamp", res.meta.timestamp},
               {"engine_version", res.meta.engine_version},
               {"tolerances",
                {{"norm", res.meta.tol.norm},
                 {"oracle", res.meta.tol.oracle},
                 {"tail", res.meta.tol.tail}}}};
  os << j.dump() << '\n';
}

ScanResult read_json(std::istream& is) {
  ojson j;
  try {
    j = ojson::parse(is);
  } catch (const ojson::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("JSON ") + e.what());
  }
  try {
    ScanResult res;
    const ojson& spec = j.at("spec");
    for (const ojson& a : spec.at("axes")) {
      res.spec.axes.push_back(Axis{param_from_string(a.at("name").get<std::string>()),
                                   a.at("lo").get<double>(), a.at("hi").get<double>(),
                                   a.at("points").get<int>()});
    }
    for (Param p : kAllParams) {
      res.spec.fixed.set(p, spec.at("fixed").at(std::string(to_string(p))).get<double>());
    }
    res.spec.equal_squeeze = spec.at("equal_squeeze").get<bool>();
    res.spec.validate();
    res.formula = formula_from_string(j.at("formula").get<std::string>());
    const ojson& values = j.at("values");
    if (values.size() != res.spec.size()) {
      throw Error(ErrorKind::Parse, "values length " + std::to_string(values.size()) +
                                        " does not match grid size " +
                                        std::to_string(res.spec.size()));
    }
    const ojson* status = j.contains("status") ? &j.at("status") : nullptr;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i].is_null()) {
        res.values.emplace_back();
        res.status.push_back(status ? point_status_from_string((*status)[i].get<std::string>())
                                    : PointStatus::Infeasible);
      } else {
        res.values.emplace_back(values[i].get<double>());
        res.status.push_back(PointStatus::Ok);
      }
    }
    if (j.contains("meta")) {
      const ojson& m = j.at("meta");
      res.meta.timestamp = m.value("timestamp", "");
      res.meta.engine_version = m.value("engine_version", "");
      if (m.contains("tolerances")) {
        const ojson& t = m.at("tolerances");
        res.meta.tol.norm = t.value("norm", res.meta.tol.norm);
        res.meta.tol.oracle = t.value("oracle", res.meta.tol.oracle);
        res.meta.tol.tail = t.value("tail", res.meta.tol.tail);
      }
    }
    return res;
  } catch (const ojson::exception& e) {
    throw Error(ErrorKind::Parse, std::string("JSON scan layout: ") + e.what());
  }
}

GridSpec heatmap(double r, double s, double delta, int points) {
  GridSpec spec;
  spec.axes = {Axis{Param::Delta, 0.0, kTwoPi, points}, Axis{Param::eta, 0.0, 3.0, points}};
  spec.fixed = FixedParams{r, s, kPi, delta, 0.0};
  return spec;
}

GridSpec basin(double Delta, double delta, int points) {
  GridSpec spec;
  spec.axes = {Axis{Param::r, 1.0 / points, 1.0, points}, Axis{Param::eta, 0.0, 3.0, points}};
  spec.fixed = FixedParams{0.5, 0.5, Delta, delta, 0.0};
  spec.equal_squeeze = true;
  return spec;
}

}  // namespace

std::optional<double> ScanResult::min_value() const {
  std::optional<double> best;
  for (const auto& v : values) {
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

ScanResult run_scan(const GridSpec& spec, Formula formula, const Tolerances& tol) {
  spec.validate();
  check_formula(spec, formula);
  ScanResult res;
  res.spec = spec;
  res.formula = formula;
  res.meta.timestamp = utc_timestamp();
  res.meta.tol = tol;
  const std::size_t n = spec.size();
  res.values.resize(n);
  res.status.resize(n);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const PointValue v = evaluate_point(spec.point(i), formula, tol);
      res.values[i] = v.g2;
      res.status[i] = v.status;
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, n / 4096));
  if (threads <= 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      pool.emplace_back(work, begin, std::min(n, begin + chunk));
    }
  }
  return res;
}

ScanFormat format_from_string(const std::string& name) {
  if (name == "csv") return ScanFormat::Csv;
  if (name == "json") return ScanFormat::Json;
  throw Error(ErrorKind::InvalidInput, "unknown format '" + name + "' (expected csv or json)");
}

ScanFormat format_from_path(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".json") return ScanFormat::Json;
  return ScanFormat::Csv;
}

void write_scan(const ScanResult& result, std::ostream& os, ScanFormat format) {
  if (format == ScanFormat::Csv) {
    write_csv(result, os);
  } else {
    write_json(result, os);
  }
}

void write_scan(const ScanResult& result, const std::filesystem::path& path, ScanFormat format) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
  write_scan(result, os, format);
  os.flush();
  if (!os) throw Error(ErrorKind::Io, "write to '" + path.string() + "' failed");
}

ScanResult read_scan(std::istream& is, ScanFormat format) {
  return format == ScanFormat::Csv ? read_csv(is) : read_json(is);
}

ScanResult read_scan(const std::filesystem::path& path, ScanFormat format) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for reading");
  try {
    return read_scan(is, format);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
    throw;
  }
}

ScanPreset figure_preset(const std::string& id, int points) {
  if (points < 2) throw Error(ErrorKind::InvalidInput, "preset needs >= 2 points per axis");
  if (id == "1") {
    GridSpec spec;
    spec.axes = {Axis{Param::r, 2.0 / points, 2.0, points}};
    spec.fixed = FixedParams{0.34, 0.34, kPi, kPi, 0.0};
    spec.equal_squeeze = true;
    return {spec, Formula::Boundary};
  }
  if (id == "2a") return {heatmap(0.7, 0.3, kPi, points), Formula::General};
  if (id == "2b") return {heatmap(0.6, 0.4, kPi, points), Formula::General};
  if (id == "3a") return {heatmap(0.3, 0.3, kPi, points), Formula::General};
  if (id == "3b") return {heatmap(0.4, 0.4, kPi, points), Formula::General};
  if (id == "3c") return {heatmap(0.5, 0.5, kPi, points), Formula::General};
  if (id == "3d") return {heatmap(0.6, 0.6, kPi, points), Formula::General};
  if (id == "4") return {basin(kPi, 0.0, points), Formula::General};
  if (id == "5") return {basin(kPi, kPi, points), Formula::General};
  if (id == "5c") return {basin(0.5 * kPi, 0.5 * kPi, points), Formula::General};
  throw Error(ErrorKind::InvalidInput, "unknown figure preset '" + id + "'");
}

std::vector<std::string> figure_preset_ids() {
  return {"1", "2a", "2b", "3a", "3b", "3c", "3d", "4", "5", "5c"};
}

}  // namespace janus
