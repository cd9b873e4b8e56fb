#pragma once

#include <complex>
#include <numbers>
#include <optional>

namespace janus {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle to [0, 2π).
double wrap_angle(double radians);

/// Numerical tolerances shared by the engine, the oracle and the optimizer.
struct Tolerances {
  double norm = 1e-10;    // |norm_residual| accepted as "normalized"
  double oracle = 1e-8;   // analytic vs Fock agreement
  double tail = 1e-12;    // certified discarded probability mass
  double min_mean_photon = 1e-12;
};

/// One squeezed vacuum |r e^{iθ}⟩.
///
/// Construct through make(); the constructor-free aggregate is kept so that
/// records can be copied around cheaply, but make() is what enforces r ≥ 0,
/// tanh r < 1 and reduces θ into [0, 2π).
struct SqueezeParam {
  double r = 0.0;
  double theta = 0.0;

  static SqueezeParam make(double r, double theta = 0.0);

  double tanh_r() const;
  /// α = tanh r · e^{iθ}
  cplx alpha() const;
  /// (1 - |α|²)^{1/4} = (cosh r)^{-1/2}
  double norm_prefactor() const;

  friend bool operator==(const SqueezeParam&, const SqueezeParam&) = default;
};

/// |ψ⟩ = |χ| |ξ⟩ + |η| e^{iδ} |ζ⟩
struct JanusParams {
  SqueezeParam xi;
  SqueezeParam zeta;
  double chi_mag = 1.0;
  double eta_mag = 0.0;
  double delta = 0.0;

  static JanusParams make(SqueezeParam xi, SqueezeParam zeta, double chi_mag, double eta_mag,
                          double delta);

  /// χη* = |χ||η| e^{-iδ}
  cplx chi_eta_conj() const;
};

struct ReducedVars {
  double x = 0.0;  // tanh² r
  double y = 0.0;  // tanh² s
  cplx z{};        // tanh r tanh s e^{iΔ}
  double Delta = 0.0;
  double one_minus_x = 1.0;  // 1/cosh² r, evaluated without cancellation
  double one_minus_y = 1.0;
  std::optional<double> K;  // (1 + 2 sinh² r)^{-1/2}, equal squeezing only
  std::optional<double> L;  // 2 K |χ||η|
};

struct PhaseGeometry {
  double f = 1.0;
  double gamma = 0.0;
};

}  // namespace janus
