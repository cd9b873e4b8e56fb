#pragma once

// Truncated photon-number representation of squeezed vacua and their
// superpositions. Everything here is computed by explicit coefficient
// recurrences and direct sums, independently of the closed forms in
// analytic.hpp, so the two can be checked against each other.

#include <iosfwd>
#include <span>
#include <vector>

#include "janus/params.hpp"

namespace janus::fock {

inline constexpr int kMaxCutoff = 16384;
inline constexpr int kCutoffStep = 64;

class FockVector {
 public:
  FockVector() = default;
  /// Zero vector over n = 0..cutoff. cutoff must be even and >= 2.
  explicit FockVector(int cutoff);
  FockVector(int cutoff, std::vector<cplx> amps);

  int cutoff() const { return static_cast<int>(amps_.size()) - 1; }
  std::span<const cplx> amps() const { return amps_; }
  std::span<cplx> amps() { return amps_; }
  const cplx& operator[](int n) const { return amps_[static_cast<std::size_t>(n)]; }
  cplx& operator[](int n) { return amps_[static_cast<std::size_t>(n)]; }

  double norm2() const;

 private:
  std::vector<cplx> amps_;
};

/// Upper bound on Σ_{n > cutoff/2} |c_n|² for a squeezed vacuum with r ≤ r_max.
double truncation_bound(double r_max, int cutoff);

/// Same bound weighted by (2n)², controlling the tail of the moment sums.
double moment_tail_bound(double r_max, int cutoff);

/// Smallest multiple of kCutoffStep whose tails are both below `tail`.
int select_cutoff(double r_max, double tail = 1e-12);

FockVector squeezed_fock(const SqueezeParam& p, int cutoff, double tail = 1e-12);
FockVector squeezed_fock(const SqueezeParam& p);

FockVector superpose(cplx chi, const FockVector& v1, cplx eta, const FockVector& v2);

/// |ψ⟩ = |χ| |ξ⟩ + |η| e^{iδ} |ζ⟩ with a cutoff certified for both components.
FockVector janus_fock(const JanusParams& p, double tail = 1e-12);

struct FockMoments {
  double norm2 = 0.0;
  double n_mean = 0.0;     // ⟨a†a⟩
  double n2_normal = 0.0;  // ⟨a†²a²⟩
};

FockMoments moments(const FockVector& v);

double g2_fock(const FockVector& v, double min_mean_photon = 1e-12);

/// Normalized |S(r)⟩ - |S(-r)⟩.
FockVector odd_cat(double r, int cutoff);
FockVector odd_cat(double r);

enum class CrossOrder { Overlap, N, N2 };

/// Σ conj(b_n) a_n w(n) = ⟨v2|O|v1⟩ with w = 1, n, n(n-1).
cplx cross_moment_fock(const FockVector& v1, const FockVector& v2, CrossOrder order);

/// Debug dump, one "n real imag" line per index.
void write_text(std::ostream& os, const FockVector& v);

}  // namespace janus::fock
