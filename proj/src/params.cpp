#include "janus/params.hpp"

#include <cmath>
#include <string>

#include "janus/error.hpp"

namespace janus {

double wrap_angle(double radians) {
  double a = std::fmod(radians, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

SqueezeParam SqueezeParam::make(double r, double theta) {
  if (!std::isfinite(r) || r < 0.0) {
    throw Error(ErrorKind::InvalidInput, "squeezing magnitude must be finite and >= 0, got r=" +
                                             std::to_string(r));
  }
  if (!std::isfinite(theta)) throw Error(ErrorKind::InvalidInput, "squeezing phase must be finite");
  if (std::tanh(r) >= 1.0) {
    throw Error(ErrorKind::InvalidInput,
                "tanh r rounds to 1 in double precision, r=" + std::to_string(r));
  }
  return SqueezeParam{r, wrap_angle(theta)};
}

double SqueezeParam::tanh_r() const { return std::tanh(r); }

cplx SqueezeParam::alpha() const { return std::polar(tanh_r(), theta); }

double SqueezeParam::norm_prefactor() const { return 1.0 / std::sqrt(std::cosh(r)); }

JanusParams JanusParams::make(SqueezeParam xi, SqueezeParam zeta, double chi_mag, double eta_mag,
                              double delta) {
  if (!std::isfinite(chi_mag) || !std::isfinite(eta_mag) || chi_mag < 0.0 || eta_mag < 0.0) {
    throw Error(ErrorKind::InvalidInput, "amplitudes |chi|, |eta| must be finite and >= 0");
  }
  if (chi_mag == 0.0 && eta_mag == 0.0) {
    throw Error(ErrorKind::InvalidInput, "amplitudes |chi| and |eta| cannot both be zero");
  }
  if (!std::isfinite(delta)) throw Error(ErrorKind::InvalidInput, "phase delta must be finite");
  return JanusParams{SqueezeParam::make(xi.r, xi.theta), SqueezeParam::make(zeta.r, zeta.theta),
                     chi_mag, eta_mag, wrap_angle(delta)};
}

cplx JanusParams::chi_eta_conj() const { return std::polar(chi_mag * eta_mag, -delta); }

}  // namespace janus
