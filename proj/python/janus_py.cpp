#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <vector>

#include "janus/analytic.hpp"
#include "janus/error.hpp"
#include "janus/fock.hpp"
#include "janus/optimizer.hpp"
#include "janus/scan.hpp"

namespace py = pybind11;
using namespace janus;

namespace {

JanusParams make_params(double r, double theta, double s, double phi, double chi, double eta, double delta) {
  return JanusParams::make(SqueezeParam::make(r, theta), SqueezeParam::make(s, phi), chi, eta, delta);
}

py::dict record_dict(const OptimumRecord& rec) {
  py::dict d;
  d["r"] = rec.r;
  d["s"] = rec.s;
  d["Delta"] = rec.Delta;
  d["delta"] = rec.delta;
  d["eta"] = rec.eta_mag;
  d["chi"] = rec.chi_mag;
  d["g2"] = rec.g2;
  d["kind"] = std::string(to_string(rec.kind));
  d["evaluations"] = rec.evaluations;
  d["converged"] = rec.converged;
  return d;
}

py::dict scan_dict(const ScanResult& res) {
  py::list axes;
  for (const Axis& a : res.spec.axes) {
    py::dict ax;
    ax["name"] = std::string(to_string(a.param));
    ax["lo"] = a.lo;
    ax["hi"] = a.hi;
    ax["points"] = a.points;
    axes.append(ax);
  }
  py::list status;
  for (PointStatus s : res.status) status.append(std::string(to_string(s)));
  py::dict d;
  d["axes"] = axes;
  d["shape"] = res.spec.shape();
  d["formula"] = std::string(to_string(res.formula));
  d["values"] = res.values;
  d["status"] = status;
  d["timestamp"] = res.meta.timestamp;
  d["engine_version"] = res.meta.engine_version;
  return d;
}

}  // namespace

PYBIND11_MODULE(_janus, m) {
  m.doc() = "Photon statistics of two-squeezed-vacuum superpositions";
  m.attr("__version__") = kEngineVersion;

  static py::exception<Error> janus_error(m, "JanusError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(janus_error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("solve_chi",
        [](double r, double theta, double s, double phi, double eta, double delta) {
          return solve_chi(eta, SqueezeParam::make(r, theta), SqueezeParam::make(s, phi), delta);
        },
        py::arg("r"), py::arg("theta"), py::arg("s"), py::arg("phi"), py::arg("eta"), py::arg("delta"),
        "|chi| normalizing the state (larger root).");

  m.def("g2",
        [](double r, double theta, double s, double phi, double chi, double eta, double delta) {
          return g2_general(make_params(r, theta, s, phi, chi, eta, delta));
        },
        py::arg("r"), py::arg("theta"), py::arg("s"), py::arg("phi"), py::arg("chi"), py::arg("eta"),
        py::arg("delta"));

  m.def("g2_fock",
        [](double r, double theta, double s, double phi, double chi, double eta, double delta) {
          return fock::g2_fock(fock::janus_fock(make_params(r, theta, s, phi, chi, eta, delta)));
        },
        py::arg("r"), py::arg("theta"), py::arg("s"), py::arg("phi"), py::arg("chi"), py::arg("eta"),
        py::arg("delta"), "Truncated Fock-space evaluation of the same state.");

  m.def("g2_optimal", [](double r, double chi, double eta) { return g2_optimal(r, chi, eta); }, py::arg("r"),
        py::arg("chi"), py::arg("eta"));
  m.def("g2_boundary", &g2_boundary, py::arg("r"));
  m.def("boundary_curve", [](const std::vector<double>& rs) {
    std::vector<double> out;
    for (const CurvePoint& c : boundary_curve(rs)) out.push_back(c.g2);
    return out;
  }, py::arg("r_values"));
  m.def("odd_cat_g2", [](double r) { return fock::g2_fock(fock::odd_cat(r)); }, py::arg("r"));

  m.def("ridge_row", [](double r, double eta) { return record_dict(ridge_row(r, eta)); }, py::arg("r"),
        py::arg("eta") = kRidgeEta);
  m.def("sweet_spot", [](int r_points, int eta_points) {
    SweetSpotOptions opts;
    opts.r_points = r_points;
    opts.eta_points = eta_points;
    const SweetSpot s = sweet_spot(opts);
    py::dict d;
    d["grid"] = record_dict(s.grid);
    d["refined"] = record_dict(s.refined);
    d["slice"] = record_dict(s.slice);
    return d;
  }, py::arg("r_points") = 256, py::arg("eta_points") = 256);

  m.def("presets", &figure_preset_ids);
  m.def("scan_preset",
        [](const std::string& id, int points) {
          const ScanPreset p = figure_preset(id, points);
          return scan_dict(run_scan(p.spec, p.formula));
        },
        py::arg("id"), py::arg("points") = 256);
  m.def("write_preset",
        [](const std::string& id, const std::filesystem::path& path, int points) {
          const ScanPreset p = figure_preset(id, points);
          write_scan(run_scan(p.spec, p.formula), path, format_from_path(path));
        },
        py::arg("id"), py::arg("path"), py::arg("points") = 256);
  m.def("read_scan",
        [](const std::filesystem::path& path) { return scan_dict(read_scan(path, format_from_path(path))); },
        py::arg("path"));
}
