#pragma once

#include <array>
#include <span>
#include <vector>

#include "janus/grid.hpp"

namespace janus {

enum class OptimumKind { Grid, Refined, Boundary };

std::string_view to_string(OptimumKind k);

struct OptimumRecord {
  double r = 0.0;
  double s = 0.0;
  double Delta = 0.0;
  double delta = 0.0;
  double eta_mag = 0.0;
  double chi_mag = 0.0;
  double g2 = 0.0;
  OptimumKind kind = OptimumKind::Grid;
  long evaluations = 0;
  long skipped = 0;        // infeasible grid points
  bool converged = true;   // false when refine_local hit its evaluation cap

  FixedParams params() const { return FixedParams{r, s, Delta, delta, eta_mag}; }
};

struct CurvePoint {
  double r = 0.0;
  double g2 = 0.0;
};

/// Minimum g² over the r = s, Δ = δ = π family at each r, reached at the
/// largest admissible L = K/(1-K) (equal amplitudes).
std::vector<CurvePoint> boundary_curve(std::span<const double> r_values);

/// The state realizing boundary_curve at r, as a full parameter record.
OptimumRecord boundary_record(double r);

/// Smallest finite g² on the grid; ties go to the lowest flattened index.
OptimumRecord grid_min(const GridSpec& spec, Formula formula = Formula::General,
                       const Tolerances& tol = {});

struct RefineOptions {
  long max_evaluations = 100000;
  bool equal_squeeze = true;  // s follows r
  ChiRoot root = ChiRoot::Larger;
  Tolerances tol{};
  std::vector<Axis> bounds;  // optional box: points outside [lo, hi] on a matching axis are rejected
};

/// Nelder–Mead descent over `free_axes` with |χ| re-solved at every vertex;
/// stops when the simplex diameter drops below `tol`.
OptimumRecord refine_local(const OptimumRecord& seed, std::span<const Param> free_axes, double tol,
                           const RefineOptions& options = {});

inline constexpr double kRidgeEta = 2.20070;

struct RidgeReference {
  double r;
  double g2;
};

/// Reference g² values along the Δ = δ = π ridge at |η| = 2.20070.
inline constexpr std::array<RidgeReference, 8> kRidgeReference{{{0.26, 0.58418},
                                                                 {0.28, 0.57467},
                                                                 {0.30, 0.56942},
                                                                 {0.32, 0.56770},
                                                                 {0.34, 0.56740},
                                                                 {0.36, 0.56930},
                                                                 {0.38, 0.57245},
                                                                 {0.40, 0.57723}}};

/// One ridge row: g2_optimal with |χ| from |χ|² + |η|² - 2K|χ||η| = 1.
OptimumRecord ridge_row(double r, double eta_fixed = kRidgeEta, const Tolerances& tol = {});
std::vector<OptimumRecord> table_s1(std::span<const double> r_values,
                                    double eta_fixed = kRidgeEta, const Tolerances& tol = {});

struct SweetSpot {
  OptimumRecord grid;     // grid_min over the basin domain
  OptimumRecord refined;  // refine_local over {r, |η|}
  OptimumRecord slice;    // refine_local over r only at |η| = 2.20070
};

struct SweetSpotOptions {
  int r_points = 256;
  int eta_points = 256;
  double tol = 1e-6;
};

/// Grid + refine over (r, |η|) at r = s, Δ = δ = π.
SweetSpot sweet_spot(const SweetSpotOptions& options = {});

/// The (r, |η|) grid at r = s, Δ = δ = π used by sweet_spot.
GridSpec basin_grid(int r_points = 256, int eta_points = 256);

}  // namespace janus
