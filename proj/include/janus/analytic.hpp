#pragma once

// Closed-form photon statistics of a superposition of two squeezed vacua.
//
// Conventions: z = α β* with α = tanh r e^{iθ}, β = tanh s e^{iφ}, Δ = θ - φ,
// and χη* = |χ||η| e^{-iδ}. All fractional powers of (1 - z) use the principal
// branch; |z| < 1 keeps 1 - z in the open right half-plane.

#include <array>

#include "janus/params.hpp"

namespace janus {

ReducedVars reduced_vars(const JanusParams& p);

/// ⟨ζ|ξ⟩
cplx overlap(const SqueezeParam& xi, const SqueezeParam& zeta);

/// ⟨ζ|a†a|ξ⟩
cplx cross_n(const SqueezeParam& xi, const SqueezeParam& zeta);

/// ⟨ζ|a†²a²|ξ⟩
cplx cross_n2(const SqueezeParam& xi, const SqueezeParam& zeta);

/// ⟨ψ|ψ⟩ - 1
double norm_residual(const JanusParams& p);

enum class ChiRoot { Larger, Smaller };

/// The |χ| ≥ 0 that normalizes the state for the given |η|. Throws
/// ErrorKind::Infeasible when no such root exists.
double solve_chi(double eta_mag, const SqueezeParam& xi, const SqueezeParam& zeta, double delta,
                 ChiRoot root = ChiRoot::Larger);

/// Unnormalized moments ‖a|ψ⟩‖² and ‖a²|ψ⟩‖² of the amplitude-weighted state.
struct Moments {
  double mean_photon = 0.0;  // 𝒟
  double pair = 0.0;         // 𝒩
};

Moments moments(const JanusParams& p);

/// g² = 𝒩 / 𝒟² for a normalized JanusParams.
double g2_general(const JanusParams& p, const Tolerances& tol = {});

PhaseGeometry phase_geometry(double r, double Delta);

/// Equal-squeezing (r = s) g² written through f(r,Δ) and γ.
double g2_equal_squeeze(double r, double Delta, double delta, double chi_mag, double eta_mag,
                        const Tolerances& tol = {});

/// K = (1 + 2 sinh² r)^{-1/2}
double squeeze_K(double r);
/// 1 - K without cancellation at small r.
double one_minus_K(double r);

/// g² at r = s, Δ = δ = π as a function of L = 2K|χ||η| (normalization assumed).
double g2_optimal_from_L(double r, double L);

/// Larger (or smaller) root of |χ|² - 2K|η||χ| + |η|² - 1 = 0, the
/// normalization at r = s, Δ = δ = π.
double solve_chi_ridge(double r, double eta_mag, ChiRoot root = ChiRoot::Larger);

/// g² at r = s, Δ = δ = π. Requires |χ|² + |η|² - 2K|χ||η| = 1.
double g2_optimal(double r, double chi_mag, double eta_mag, const Tolerances& tol = {});

/// Coefficients of the boundary expression, ascending powers of u = sinh² r.
inline constexpr std::array<int, 6> kBoundaryNumerator{2, 11, 28, 51, 40, 12};
inline constexpr std::array<int, 6> kBoundaryDenominator{4, 16, 29, 29, 16, 4};

/// Rational boundary expression in u = sinh² r.
double g2_boundary(double r);

/// Truncated small-r series ½ + ¾u + ⅜u² + (35/16)u³ through order `order` in u.
double g2_boundary_series(double r, int order);

}  // namespace janus
