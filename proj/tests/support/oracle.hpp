#pragma once
// Reference Fock-space computations for tests. Amplitudes come from the
// closed-form coefficient (−e^{iθ} tanh r)^n √((2n)!) / (2^n n!) / √(cosh r)
// evaluated through lgamma in long double, sharing nothing with the library.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using ld = long double;
using lc = std::complex<long double>;

inline constexpr ld kPiL = 3.141592653589793238462643383279502884L;

/// Number of pair amplitudes needed so that n²-weighted terms drop below 1e-32.
inline int pairs_for(ld r) {
  const ld x = std::tanh(r) * std::tanh(r);
  int n = 8;
  ld term = 1.0L;
  do {
    ++n;
    term = std::pow(x, static_cast<ld>(n)) * (4.0L * n * n);
  } while (term > 1e-32L && n < 200000);
  return n + 16;
}

/// Amplitudes on |0⟩, |2⟩, |4⟩, ... (index k ↔ photon number 2k).
inline std::vector<lc> squeezed(ld r, ld theta, int pairs) {
  std::vector<lc> out(static_cast<std::size_t>(pairs), lc{});
  if (r == 0.0L) {
    out[0] = 1.0L;
    return out;
  }
  const ld t = std::tanh(r);
  const ld log_pref = -0.5L * std::log(std::cosh(r));
  for (int n = 0; n < pairs; ++n) {
    const ld log_mag = log_pref + n * std::log(t) + 0.5L * std::lgamma(2.0L * n + 1.0L) -
                       n * std::log(2.0L) - std::lgamma(n + 1.0L);
    const ld phase = n * (theta + kPiL);
    out[static_cast<std::size_t>(n)] = std::polar(std::exp(log_mag), phase);
  }
  return out;
}

inline std::vector<lc> combine(lc a, const std::vector<lc>& v1, lc b, const std::vector<lc>& v2) {
  std::vector<lc> out(v1.size());
  for (std::size_t k = 0; k < v1.size(); ++k) out[k] = a * v1[k] + b * v2[k];
  return out;
}

/// Σ conj(v2) v1 w(2k) with w = 1, n or n(n−1).
inline lc inner(const std::vector<lc>& v1, const std::vector<lc>& v2, int order) {
  lc acc{};
  for (std::size_t k = 0; k < v1.size(); ++k) {
    const ld n = 2.0L * k;
    const ld w = order == 0 ? 1.0L : (order == 1 ? n : n * (n - 1.0L));
    acc += std::conj(v2[k]) * v1[k] * w;
  }
  return acc;
}

struct Stats {
  ld norm = 0;
  ld mean = 0;  // ⟨n⟩ / norm
  ld g2 = 0;    // normalized by the computed norm
};

inline Stats stats(const std::vector<lc>& v) {
  ld norm = 0, first = 0, second = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const ld p = std::norm(v[k]);
    const ld n = 2.0L * k;
    norm += p;
    first += n * p;
    second += n * (n - 1.0L) * p;
  }
  return Stats{norm, first / norm, second * norm / (first * first)};
}

/// g² of χ|r e^{iθ}⟩ + η e^{iδ}|s e^{iφ}⟩ (normalization taken from the vector).
inline ld janus_g2(ld r, ld theta, ld s, ld phi, ld chi, ld eta, ld delta) {
  const int pairs = pairs_for(std::max(r, s));
  return stats(combine(chi, squeezed(r, theta, pairs), std::polar(eta, delta),
                       squeezed(s, phi, pairs)))
      .g2;
}

/// |χ| ≥ 0 normalizing the superposition, from the oracle overlap.
inline ld solve_chi(ld r, ld theta, ld s, ld phi, ld eta, ld delta) {
  const int pairs = pairs_for(std::max(r, s));
  const lc ov = inner(squeezed(s, phi, pairs), squeezed(r, theta, pairs), 0);  // ⟨ξ|ζ⟩
  // χ² + 2χη Re(e^{iδ}⟨ξ|ζ⟩) + η² − 1 = 0
  const ld b = eta * std::real(std::polar(1.0L, delta) * ov);
  return -b + std::sqrt(b * b - (eta * eta - 1.0L));
}

/// (|r⟩ − |r e^{iπ}⟩), normalized numerically; returns pair amplitudes.
inline std::vector<lc> odd_cat(ld r) {
  const int pairs = pairs_for(r);
  std::vector<lc> v = combine(1.0L, squeezed(r, 0.0L, pairs), -1.0L, squeezed(r, kPiL, pairs));
  const ld norm = std::sqrt(stats(v).norm);
  for (lc& a : v) a /= norm;
  return v;
}

inline ld odd_cat_g2(ld r) { return stats(odd_cat(r)).g2; }

}  // namespace oracle
