#include "janus/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "janus/error.hpp"

namespace janus {

namespace {

bool is_pi(double angle) { return std::abs(wrap_angle(angle) - kPi) <= 1e-12; }

}  // namespace

std::string_view to_string(Param p) {
  switch (p) {
    case Param::r: return "r";
    case Param::s: return "s";
    case Param::Delta: return "Delta";
    case Param::delta: return "delta";
    case Param::eta: return "eta";
  }
  return "?";
}

Param param_from_string(std::string_view name) {
  for (Param p : {Param::r, Param::s, Param::Delta, Param::delta, Param::eta}) {
    if (name == to_string(p)) return p;
  }
  throw Error(ErrorKind::InvalidInput, "unknown parameter '" + std::string(name) +
                                           "' (expected r, s, Delta, delta, eta)");
}

double Axis::value(int i) const {
  if (i == points - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
}

double FixedParams::get(Param p) const {
  switch (p) {
    case Param::r: return r;
    case Param::s: return s;
    case Param::Delta: return Delta;
    case Param::delta: return delta;
    case Param::eta: return eta;
  }
  return 0.0;
}

void FixedParams::set(Param p, double v) {
  switch (p) {
    case Param::r: r = v; break;
    case Param::s: s = v; break;
    case Param::Delta: Delta = v; break;
    case Param::delta: delta = v; break;
    case Param::eta: eta = v; break;
  }
}

void GridSpec::validate() const {
  if (axes.empty()) throw Error(ErrorKind::InvalidInput, "grid needs at least one axis");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const Axis& a = axes[i];
    const std::string name(to_string(a.param));
    if (a.points < 2) throw Error(ErrorKind::InvalidInput, "axis " + name + " needs >= 2 points");
    if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || !(a.lo < a.hi)) {
      throw Error(ErrorKind::InvalidInput, "axis " + name + " needs finite lo < hi");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (axes[j].param == a.param) throw Error(ErrorKind::InvalidInput, "duplicate axis " + name);
    }
  }
  if (equal_squeeze && has_axis(Param::s)) {
    throw Error(ErrorKind::InvalidInput, "axis s is not allowed when s follows r");
  }
  double total = 1.0;
  for (const Axis& a : axes) total *= a.points;
  if (total > 1e8) throw Error(ErrorKind::InvalidInput, "grid exceeds 1e8 points");
}

std::size_t GridSpec::size() const {
  std::size_t n = 1;
  for (const Axis& a : axes) n *= static_cast<std::size_t>(a.points);
  return n;
}

std::vector<std::size_t> GridSpec::shape() const {
  std::vector<std::size_t> out;
  out.reserve(axes.size());
  for (const Axis& a : axes) out.push_back(static_cast<std::size_t>(a.points));
  return out;
}

FixedParams GridSpec::point(std::size_t flat) const {
  FixedParams p = fixed;
  for (std::size_t k = axes.size(); k-- > 0;) {
    const auto n = static_cast<std::size_t>(axes[k].points);
    p.set(axes[k].param, axes[k].value(static_cast<int>(flat % n)));
    flat /= n;
  }
  if (equal_squeeze) p.s = p.r;
  return p;
}

bool GridSpec::has_axis(Param p) const {
  return std::any_of(axes.begin(), axes.end(), [p](const Axis& a) { return a.param == p; });
}

std::string_view to_string(Formula f) {
  switch (f) {
    case Formula::General: return "general";
    case Formula::Equal: return "equal";
    case Formula::Optimal: return "optimal";
    case Formula::Boundary: return "boundary";
  }
  return "?";
}

Formula formula_from_string(std::string_view name) {
  for (Formula f : {Formula::General, Formula::Equal, Formula::Optimal, Formula::Boundary}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorKind::InvalidInput, "unknown formula '" + std::string(name) +
                                           "' (expected general, equal, optimal, boundary)");
}

void check_formula(const GridSpec& spec, Formula f) {
  const bool equal = spec.equal_squeeze ||
                     (!spec.has_axis(Param::r) && !spec.has_axis(Param::s) &&
                      spec.fixed.r == spec.fixed.s);
  switch (f) {
    case Formula::General: return;
    case Formula::Equal:
      if (!equal) throw Error(ErrorKind::FormulaMismatch, "formula 'equal' requires r = s");
      return;
    case Formula::Optimal:
      if (!equal) throw Error(ErrorKind::FormulaMismatch, "formula 'optimal' requires r = s");
      if (spec.has_axis(Param::Delta) || spec.has_axis(Param::delta) ||
          !is_pi(spec.fixed.Delta) || !is_pi(spec.fixed.delta)) {
        throw Error(ErrorKind::FormulaMismatch,
                    "formula 'optimal' requires Delta = delta = pi held fixed");
      }
      return;
    case Formula::Boundary:
      if (spec.axes.size() != 1 || spec.axes.front().param != Param::r || !spec.equal_squeeze) {
        throw Error(ErrorKind::FormulaMismatch,
                    "formula 'boundary' requires a single r axis with s following r");
      }
      return;
  }
}

std::string_view to_string(PointStatus s) {
  switch (s) {
    case PointStatus::Ok: return "ok";
    case PointStatus::Infeasible: return "infeasible";
    case PointStatus::Undefined: return "undefined";
    case PointStatus::Invalid: return "invalid";
  }
  return "?";
}

PointStatus point_status_from_string(std::string_view name) {
  for (PointStatus s :
       {PointStatus::Ok, PointStatus::Infeasible, PointStatus::Undefined, PointStatus::Invalid}) {
    if (name == to_string(s)) return s;
  }
  throw Error(ErrorKind::Parse, "unknown point status '" + std::string(name) + "'");
}

PointValue evaluate_point(const FixedParams& p, Formula f, const Tolerances& tol, ChiRoot root) {
  PointValue out;
  try {
    switch (f) {
      case Formula::General:
      case Formula::Equal: {
        const SqueezeParam xi = SqueezeParam::make(p.r, p.Delta);
        const SqueezeParam zeta = SqueezeParam::make(p.s, 0.0);
        out.chi = solve_chi(p.eta, xi, zeta, p.delta, root);
        out.g2 = (f == Formula::General)
                     ? g2_general(JanusParams::make(xi, zeta, out.chi, p.eta, p.delta), tol)
                     : g2_equal_squeeze(p.r, p.Delta, p.delta, out.chi, p.eta, tol);
        break;
      }
      case Formula::Optimal:
        out.chi = solve_chi_ridge(p.r, p.eta, root);
        out.g2 = g2_optimal(p.r, out.chi, p.eta, tol);
        break;
      case Formula::Boundary: {
        if (!(p.r > 0.0)) throw Error(ErrorKind::Undefined, "boundary undefined at r = 0");
        const double gap = one_minus_K(p.r);
        out.chi = 1.0 / std::sqrt(2.0 * gap);
        out.g2 = g2_optimal_from_L(p.r, squeeze_K(p.r) / gap);
        break;
      }
    }
  } catch (const Error& e) {
    out.g2.reset();
    switch (e.kind()) {
      case ErrorKind::Infeasible: out.status = PointStatus::Infeasible; break;
      case ErrorKind::Undefined: out.status = PointStatus::Undefined; break;
      default: out.status = PointStatus::Invalid; break;
    }
  }
  return out;
}

}  // namespace janus
