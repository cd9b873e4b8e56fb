#include "janus/fock.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "janus/error.hpp"

namespace janus::fock {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void check_cutoff(int cutoff) {
  if (cutoff < 2 || cutoff % 2 != 0) {
    throw Error(ErrorKind::InvalidInput,
                "cutoff must be even and >= 2, got " + std::to_string(cutoff));
  }
  if (cutoff > kMaxCutoff) {
    throw Error(ErrorKind::CutoffTooSmall, "cutoff " + std::to_string(cutoff) +
                                               " exceeds the supported maximum " +
                                               std::to_string(kMaxCutoff));
  }
}

// log |c_m|² for the squeezed vacuum coefficient on |2m⟩:
//   |c_m|² = (1-x)^{1/2} x^m C(2m, m) / 4^m
double log_coeff2(double r, int m) {
  const double t = std::tanh(r);
  const double log_x = 2.0 * std::log(t);
  const double log_one_minus_x = -2.0 * std::log(std::cosh(r));
  const double log_central = std::lgamma(2.0 * m + 1.0) - 2.0 * std::lgamma(m + 1.0) -
                             static_cast<double>(m) * std::log(4.0);
  return 0.5 * log_one_minus_x + m * log_x + log_central;
}

}  // namespace

FockVector::FockVector(int cutoff) {
  check_cutoff(cutoff);
  amps_.assign(static_cast<std::size_t>(cutoff) + 1, cplx{});
}

FockVector::FockVector(int cutoff, std::vector<cplx> amps) : amps_(std::move(amps)) {
  check_cutoff(cutoff);
  if (amps_.size() != static_cast<std::size_t>(cutoff) + 1) {
    throw Error(ErrorKind::InvalidInput, "amplitude count must equal cutoff + 1");
  }
}

double FockVector::norm2() const {
  long double acc = 0.0L;
  for (const cplx& a : amps_) acc += std::norm(a);
  return static_cast<double>(acc);
}

double truncation_bound(double r_max, int cutoff) {
  if (!(r_max >= 0.0)) throw Error(ErrorKind::InvalidInput, "truncation_bound: r_max must be >= 0");
  if (r_max == 0.0) return 0.0;
  const int m = cutoff / 2 + 1;  // first discarded coefficient index
  const double t = std::tanh(r_max);
  const double one_minus_x = 1.0 / (std::cosh(r_max) * std::cosh(r_max));
  if (t >= 1.0) return std::numeric_limits<double>::infinity();
  // |c_{n+1}/c_n|² = x (2n+1)/(2n+2) ≤ x, so the tail is dominated by a geometric series
  return std::exp(log_coeff2(r_max, m)) / one_minus_x;
}

double moment_tail_bound(double r_max, int cutoff) {
  if (!(r_max >= 0.0)) throw Error(ErrorKind::InvalidInput, "moment_tail_bound: r_max must be >= 0");
  if (r_max == 0.0) return 0.0;
  const int m = cutoff / 2 + 1;
  const double t = std::tanh(r_max);
  const double grow = static_cast<double>(m + 1) / m;
  const double ratio = t * t * grow * grow;
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  const double weight = 4.0 * m * m;
  return weight * std::exp(log_coeff2(r_max, m)) / (1.0 - ratio);
}

int select_cutoff(double r_max, double tail) {
  for (int cutoff = kCutoffStep; cutoff <= kMaxCutoff; cutoff += kCutoffStep) {
    if (truncation_bound(r_max, cutoff) <= tail && moment_tail_bound(r_max, cutoff) <= tail) {
      return cutoff;
    }
  }
  throw Error(ErrorKind::CutoffTooSmall, "no cutoff up to " + std::to_string(kMaxCutoff) +
                                             " certifies tail " + sci(tail) + " at r=" + sci(r_max));
}

FockVector squeezed_fock(const SqueezeParam& p, int cutoff, double tail) {
  check_cutoff(cutoff);
  const double bound = truncation_bound(p.r, cutoff);
  if (bound > tail) {
    throw Error(ErrorKind::CutoffTooSmall, "cutoff " + std::to_string(cutoff) +
                                               " leaves tail mass " + sci(bound) + " at r=" + sci(p.r));
  }
  FockVector v(cutoff);
  const cplx minus_alpha = -std::polar(std::tanh(p.r), p.theta);
  cplx c = 1.0 / std::sqrt(std::cosh(p.r));
  for (int n = 0; 2 * n <= cutoff; ++n) {
    v[2 * n] = c;
    const double k = static_cast<double>(n);
    c *= minus_alpha * (std::sqrt((2.0 * k + 1.0) * (2.0 * k + 2.0)) / (2.0 * (k + 1.0)));
  }
  return v;
}

FockVector squeezed_fock(const SqueezeParam& p) {
  return squeezed_fock(p, select_cutoff(p.r));
}

FockVector superpose(cplx chi, const FockVector& v1, cplx eta, const FockVector& v2) {
  if (v1.cutoff() != v2.cutoff()) {
    throw Error(ErrorKind::CutoffMismatch, "superpose: cutoffs " + std::to_string(v1.cutoff()) +
                                               " and " + std::to_string(v2.cutoff()) + " differ");
  }
  FockVector out(v1.cutoff());
  for (int n = 0; n <= v1.cutoff(); ++n) out[n] = chi * v1[n] + eta * v2[n];
  return out;
}

FockVector janus_fock(const JanusParams& p, double tail) {
  const int cutoff = select_cutoff(std::max(p.xi.r, p.zeta.r), tail);
  return superpose(p.chi_mag, squeezed_fock(p.xi, cutoff, tail), std::polar(p.eta_mag, p.delta),
                   squeezed_fock(p.zeta, cutoff, tail));
}

FockMoments moments(const FockVector& v) {
  long double norm = 0.0L;
  long double first = 0.0L;
  long double second = 0.0L;
  for (int n = 0; n <= v.cutoff(); ++n) {
    const long double p = std::norm(v[n]);
    const long double k = n;
    norm += p;
    first += k * p;
    second += k * (k - 1.0L) * p;
  }
  if (norm < 1e-30L) throw Error(ErrorKind::ZeroVector, "moments of a zero vector");
  return FockMoments{static_cast<double>(norm), static_cast<double>(first / norm),
                     static_cast<double>(second / norm)};
}

double g2_fock(const FockVector& v, double min_mean_photon) {
  const FockMoments m = moments(v);
  if (!(m.n_mean > min_mean_photon)) {
    throw Error(ErrorKind::Undefined, "g2 undefined: mean photon number " +
                                          std::to_string(m.n_mean) + " is ~0");
  }
  return m.n2_normal / (m.n_mean * m.n_mean);
}

FockVector odd_cat(double r, int cutoff) {
  if (!(r > 0.0)) throw Error(ErrorKind::InvalidInput, "odd_cat requires r > 0");
  FockVector v = superpose(1.0, squeezed_fock(SqueezeParam::make(r, 0.0), cutoff), -1.0,
                           squeezed_fock(SqueezeParam::make(r, kPi), cutoff));
  // 𝒩 = [2(1 - (cosh 2r)^{-1/2})]^{-1/2}; 1 - (cosh 2r)^{-1/2} = 2 sinh² r / ((√c + 1)√c)
  const double c = std::cosh(2.0 * r);
  const double sc = std::sqrt(c);
  const double sh = std::sinh(r);
  const double gap = 2.0 * sh * sh / ((sc + 1.0) * sc);
  const double scale = 1.0 / std::sqrt(2.0 * gap);
  for (cplx& a : v.amps()) a *= scale;
  return v;
}

FockVector odd_cat(double r) { return odd_cat(r, select_cutoff(r)); }

cplx cross_moment_fock(const FockVector& v1, const FockVector& v2, CrossOrder order) {
  if (v1.cutoff() != v2.cutoff()) {
    throw Error(ErrorKind::CutoffMismatch, "cross_moment_fock: cutoffs differ");
  }
  std::complex<long double> acc{};
  for (int n = 0; n <= v1.cutoff(); ++n) {
    const long double k = n;
    long double w = 1.0L;
    if (order == CrossOrder::N) w = k;
    if (order == CrossOrder::N2) w = k * (k - 1.0L);
    const std::complex<long double> a{v1[n].real(), v1[n].imag()};
    const std::complex<long double> b{v2[n].real(), v2[n].imag()};
    acc += std::conj(b) * a * w;
  }
  return cplx{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

void write_text(std::ostream& os, const FockVector& v) {
  char buf[96];
  for (int n = 0; n <= v.cutoff(); ++n) {
    std::snprintf(buf, sizeof buf, "%d %.17g %.17g\n", n, v[n].real(), v[n].imag());
    os << buf;
  }
}

}  // namespace janus::fock
