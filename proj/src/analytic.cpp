#include "janus/analytic.hpp"

#include <array>
#include <cmath>
#include <string>

#include "janus/error.hpp"

namespace janus {

namespace {

constexpr double kSingularGuard = 1e-14;

cplx principal_pow(cplx w, double exponent) { return std::exp(exponent * std::log(w)); }

// Pieces shared by the overlap and the cross moments.
//
// With c = cosh r cosh s and S = sinh r sinh s,
//   c (1 - z) = w = cosh(r - s) + 2 S sin²(Δ/2) - i S sin Δ,
// which has no cancellation, Re w ≥ 1, and gives
//   (1-x)^{1/4}(1-y)^{1/4} (1-z)^{-k/2} = c^{(k-1)/2} w^{-k/2}.
struct PairTerms {
  double c;
  double S;
  cplx phase;  // e^{iΔ}
  cplx w;
};

PairTerms pair_terms(const SqueezeParam& xi, const SqueezeParam& zeta) {
  const double Delta = xi.theta - zeta.theta;
  const double S = std::sinh(xi.r) * std::sinh(zeta.r);
  const double c = std::cosh(xi.r) * std::cosh(zeta.r);
  const double half = std::sin(0.5 * Delta);
  const cplx w{std::cosh(xi.r - zeta.r) + 2.0 * S * half * half, -S * std::sin(Delta)};
  if (std::abs(w) / c < kSingularGuard) {
    throw Error(ErrorKind::Singular, "|1 - z| below 1e-14; overlap is singular");
  }
  return PairTerms{c, S, std::polar(1.0, Delta), w};
}

double sinh2(double r) {
  const double s = std::sinh(r);
  return s * s;
}

void require_positive_r(double r, const char* what) {
  if (!std::isfinite(r) || r < 0.0) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + ": r must be finite and >= 0");
  }
  if (r == 0.0) {
    throw Error(ErrorKind::Undefined, std::string(what) + ": g2 undefined for vacuum (r = 0)");
  }
}

}  // namespace

ReducedVars reduced_vars(const JanusParams& p) {
  ReducedVars v;
  const double tr = p.xi.tanh_r();
  const double ts = p.zeta.tanh_r();
  v.x = tr * tr;
  v.y = ts * ts;
  v.Delta = wrap_angle(p.xi.theta - p.zeta.theta);
  v.z = std::polar(tr * ts, v.Delta);
  const double cr = std::cosh(p.xi.r);
  const double cs = std::cosh(p.zeta.r);
  v.one_minus_x = 1.0 / (cr * cr);
  v.one_minus_y = 1.0 / (cs * cs);
  if (std::abs(p.xi.r - p.zeta.r) <= 1e-14) {
    v.K = squeeze_K(p.xi.r);
    v.L = 2.0 * *v.K * p.chi_mag * p.eta_mag;
  }
  return v;
}

cplx overlap(const SqueezeParam& xi, const SqueezeParam& zeta) {
  const PairTerms t = pair_terms(xi, zeta);
  return principal_pow(t.w, -0.5);
}

cplx cross_n(const SqueezeParam& xi, const SqueezeParam& zeta) {
  const PairTerms t = pair_terms(xi, zeta);
  // z c = S e^{iΔ}
  return t.S * t.phase * principal_pow(t.w, -1.5);
}

cplx cross_n2(const SqueezeParam& xi, const SqueezeParam& zeta) {
  const PairTerms t = pair_terms(xi, zeta);
  // z (2z + 1) c² = S e^{iΔ} (2 S e^{iΔ} + c)
  const cplx zc = t.S * t.phase;
  return zc * (2.0 * zc + t.c) * principal_pow(t.w, -2.5);
}

double norm_residual(const JanusParams& p) {
  const cplx ov = overlap(p.xi, p.zeta);
  return p.chi_mag * p.chi_mag + p.eta_mag * p.eta_mag +
         2.0 * std::real(p.chi_eta_conj() * ov) - 1.0;
}

double solve_chi(double eta_mag, const SqueezeParam& xi, const SqueezeParam& zeta, double delta,
                 ChiRoot root) {
  if (!std::isfinite(eta_mag) || eta_mag < 0.0) {
    throw Error(ErrorKind::InvalidInput, "solve_chi: |eta| must be finite and >= 0");
  }
  const cplx ov = overlap(xi, zeta);
  const double b = eta_mag * std::real(std::polar(1.0, -delta) * ov);
  const double c0 = eta_mag * eta_mag - 1.0;
  const double disc = b * b - c0;
  if (disc < 0.0) {
    throw Error(ErrorKind::Infeasible, "no normalized state for |eta|=" + std::to_string(eta_mag) +
                                           " (negative discriminant)");
  }
  const double sq = std::sqrt(disc);
  double chi;
  if (root == ChiRoot::Larger) {
    // -b + sq, rewritten as -c0 / (b + sq) when b > 0 to avoid cancellation
    chi = (b <= 0.0) ? -b + sq : -c0 / (b + sq);
  } else {
    chi = (b < 0.0) ? c0 / (-b + sq) : -b - sq;
  }
  if (chi < 0.0) {
    throw Error(ErrorKind::Infeasible, "no nonnegative |chi| for |eta|=" + std::to_string(eta_mag));
  }
  return chi;
}

Moments moments(const JanusParams& p) {
  const double ur = sinh2(p.xi.r);
  const double us = sinh2(p.zeta.r);
  const double chi2 = p.chi_mag * p.chi_mag;
  const double eta2 = p.eta_mag * p.eta_mag;
  const cplx ce = p.chi_eta_conj();
  Moments m;
  m.mean_photon = chi2 * ur + eta2 * us + 2.0 * std::real(ce * cross_n(p.xi, p.zeta));
  m.pair = chi2 * ur * (3.0 * ur + 1.0) + eta2 * us * (3.0 * us + 1.0) +
           2.0 * std::real(ce * cross_n2(p.xi, p.zeta));
  return m;
}

double g2_general(const JanusParams& p, const Tolerances& tol) {
  const double res = norm_residual(p);
  if (!(std::abs(res) <= tol.norm)) {
    throw Error(ErrorKind::Unnormalized,
                "g2_general requires a normalized state, norm residual=" + std::to_string(res));
  }
  const Moments m = moments(p);
  if (!(m.mean_photon > tol.min_mean_photon)) {
    throw Error(ErrorKind::Undefined, "g2 undefined for vacuum (mean photon number " +
                                          std::to_string(m.mean_photon) + ")");
  }
  return m.pair / (m.mean_photon * m.mean_photon);
}

PhaseGeometry phase_geometry(double r, double Delta) {
  if (!std::isfinite(r) || r < 0.0) {
    throw Error(ErrorKind::InvalidInput, "phase_geometry: r must be finite and >= 0");
  }
  // cosh² r - sinh² r e^{iΔ} = (1 + 2u sin²(Δ/2)) - i u sin Δ with u = sinh² r
  const double u = sinh2(r);
  const double half = std::sin(0.5 * Delta);
  const double re = 1.0 + 2.0 * u * half * half;
  const double im = u * std::sin(Delta);
  PhaseGeometry g;
  g.f = re * re + im * im;
  // -atan2(sin Δ, coth² r - cos Δ) with both arguments scaled by u > 0
  g.gamma = (u == 0.0) ? 0.0 : -std::atan2(im, re);
  return g;
}

double g2_equal_squeeze(double r, double Delta, double delta, double chi_mag, double eta_mag,
                        const Tolerances& tol) {
  require_positive_r(r, "g2_equal_squeeze");
  const PhaseGeometry geo = phase_geometry(r, Delta);
  const double P = chi_mag * eta_mag;
  const double f14 = std::pow(geo.f, -0.25);
  const double g = geo.gamma;
  const double interference = 2.0 * f14 * P * std::cos(delta + 0.5 * g);

  const double res = chi_mag * chi_mag + eta_mag * eta_mag + interference - 1.0;
  if (!(std::abs(res) <= tol.norm)) {
    throw Error(ErrorKind::Unnormalized,
                "g2_equal_squeeze requires a normalized state, norm residual=" + std::to_string(res));
  }

  const double u = sinh2(r);
  const double t = std::tanh(r);
  const double x = t * t;
  const double direct = 1.0 - interference;
  const double den = direct + 2.0 * std::pow(geo.f, -0.75) * P * std::cos(Delta - 1.5 * g - delta);
  const double num =
      direct + 2.0 * std::pow(geo.f, -1.25) * P / (2.0 * x + 1.0) *
                   (2.0 * x * std::cos(2.0 * Delta - 2.5 * g - delta) +
                    std::cos(Delta - 2.5 * g - delta));
  if (!(u * den > tol.min_mean_photon)) {
    throw Error(ErrorKind::Undefined, "g2 undefined: mean photon number vanishes");
  }
  return (3.0 + 1.0 / u) * num / (den * den);
}

double squeeze_K(double r) { return 1.0 / std::sqrt(std::cosh(2.0 * r)); }

double one_minus_K(double r) {
  const double c = std::cosh(2.0 * r);
  const double sc = std::sqrt(c);
  return 2.0 * sinh2(r) / ((sc + 1.0) * sc);
}

double g2_optimal_from_L(double r, double L) {
  require_positive_r(r, "g2_optimal");
  if (!std::isfinite(L) || L < 0.0) throw Error(ErrorKind::InvalidInput, "L must be >= 0");
  const double K = squeeze_K(r);
  const double K2 = K * K;
  const double t = std::tanh(r);
  const double x = t * t;
  const double u = sinh2(r);
  const double den = 1.0 + L + L * K2;
  const double num = 1.0 + L + L * K2 * K2 * (1.0 - 2.0 * x) / (1.0 + 2.0 * x);
  return (3.0 + 1.0 / u) * num / (den * den);
}

double solve_chi_ridge(double r, double eta_mag, ChiRoot root) {
  if (!std::isfinite(eta_mag) || eta_mag < 0.0) {
    throw Error(ErrorKind::InvalidInput, "solve_chi_ridge: |eta| must be finite and >= 0");
  }
  const double b = -squeeze_K(r) * eta_mag;
  const double c0 = eta_mag * eta_mag - 1.0;
  const double disc = b * b - c0;
  if (disc < 0.0) {
    throw Error(ErrorKind::Infeasible, "no normalized ridge state for |eta|=" +
                                           std::to_string(eta_mag) + " at r=" + std::to_string(r));
  }
  const double sq = std::sqrt(disc);
  const double chi = (root == ChiRoot::Larger) ? -b + sq : (b < 0.0 ? c0 / (-b + sq) : -b - sq);
  if (chi < 0.0) {
    throw Error(ErrorKind::Infeasible, "no nonnegative ridge |chi| for |eta|=" +
                                           std::to_string(eta_mag));
  }
  return chi;
}

double g2_optimal(double r, double chi_mag, double eta_mag, const Tolerances& tol) {
  require_positive_r(r, "g2_optimal");
  const double K = squeeze_K(r);
  const double P = chi_mag * eta_mag;
  const double res = chi_mag * chi_mag + eta_mag * eta_mag - 2.0 * K * P - 1.0;
  if (!(std::abs(res) <= tol.norm)) {
    throw Error(ErrorKind::Unnormalized, "g2_optimal: constraint |chi|^2+|eta|^2-2K|chi||eta|=1 "
                                         "violated, residual=" + std::to_string(res));
  }
  return g2_optimal_from_L(r, 2.0 * K * P);
}

double g2_boundary(double r) {
  if (!(r >= 0.0)) throw Error(ErrorKind::InvalidInput, "g2_boundary: r must be >= 0");
  const double u = sinh2(r);
  auto horner = [](const std::array<int, 6>& c, double v, bool reversed) {
    double acc = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) acc = acc * v + c[reversed ? i : c.size() - 1 - i];
    return acc;
  };
  if (u <= 1.0) return horner(kBoundaryNumerator, u, false) / horner(kBoundaryDenominator, u, false);
  // divide through by u⁵ so large r neither overflows nor loses the asymptote 12/4
  const double v = 1.0 / u;
  return horner(kBoundaryNumerator, v, true) / horner(kBoundaryDenominator, v, true);
}

double g2_boundary_series(double r, int order) {
  if (order < 0 || order > 3) {
    throw Error(ErrorKind::InvalidInput,
                "g2_boundary_series: unsupported order " + std::to_string(order) + " (max 3)");
  }
  static constexpr std::array<double, 4> kCoeff{0.5, 0.75, 0.375, 35.0 / 16.0};
  const double u = sinh2(r);
  double acc = 0.0;
  for (int k = order; k >= 0; --k) acc = acc * u + kCoeff[static_cast<std::size_t>(k)];
  return acc;
}

}  // namespace janus
