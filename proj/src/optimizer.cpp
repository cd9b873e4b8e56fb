#include "janus/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "janus/error.hpp"

namespace janus {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Standard Nelder–Mead coefficients.
constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

double initial_step(Param p) {
  switch (p) {
    case Param::r:
    case Param::s: return 0.02;
    case Param::eta: return 0.05;
    case Param::Delta:
    case Param::delta: return 0.05;
  }
  return 0.05;
}

struct Vertex {
  std::vector<double> x;
  double f = kInf;
};

class RefineObjective {
 public:
  RefineObjective(const OptimumRecord& seed, std::span<const Param> axes,
                  const RefineOptions& options)
      : base_(seed.params()), axes_(axes.begin(), axes.end()), options_(options) {}

  FixedParams params_at(const std::vector<double>& x) const {
    FixedParams p = base_;
    for (std::size_t i = 0; i < axes_.size(); ++i) p.set(axes_[i], x[i]);
    if (options_.equal_squeeze) p.s = p.r;
    return p;
  }

  PointValue evaluate(const std::vector<double>& x) {
    ++evaluations_;
    const FixedParams p = params_at(x);
    if (p.r < 0.0 || p.s < 0.0 || p.eta < 0.0) return PointValue{{}, 0.0, PointStatus::Invalid};
    for (const Axis& a : options_.bounds) {
      const double v = p.get(a.param);
      if (v < a.lo || v > a.hi) return PointValue{{}, 0.0, PointStatus::Invalid};
    }
    return evaluate_point(p, Formula::General, options_.tol, options_.root);
  }

  double operator()(const std::vector<double>& x) {
    const PointValue v = evaluate(x);
    return v.g2 ? *v.g2 : kInf;
  }

  long evaluations() const { return evaluations_; }

 private:
  FixedParams base_;
  std::vector<Param> axes_;
  RefineOptions options_;
  long evaluations_ = 0;
};

double diameter(const std::vector<Vertex>& simplex) {
  double d = 0.0;
  for (std::size_t i = 1; i < simplex.size(); ++i) {
    double sq = 0.0;
    for (std::size_t k = 0; k < simplex[i].x.size(); ++k) {
      const double diff = simplex[i].x[k] - simplex[0].x[k];
      sq += diff * diff;
    }
    d = std::max(d, std::sqrt(sq));
  }
  return d;
}

std::vector<double> affine(const std::vector<double>& origin, const std::vector<double>& toward,
                           double factor) {
  std::vector<double> out(origin.size());
  for (std::size_t k = 0; k < origin.size(); ++k) {
    out[k] = origin[k] + factor * (toward[k] - origin[k]);
  }
  return out;
}

OptimumRecord make_record(const FixedParams& p, double chi, double g2, OptimumKind kind) {
  OptimumRecord rec;
  rec.r = p.r;
  rec.s = p.s;
  rec.Delta = p.Delta;
  rec.delta = p.delta;
  rec.eta_mag = p.eta;
  rec.chi_mag = chi;
  rec.g2 = g2;
  rec.kind = kind;
  return rec;
}

}  // namespace

std::string_view to_string(OptimumKind k) {
  switch (k) {
    case OptimumKind::Grid: return "grid";
    case OptimumKind::Refined: return "refined";
    case OptimumKind::Boundary: return "boundary";
  }
  return "?";
}

std::vector<CurvePoint> boundary_curve(std::span<const double> r_values) {
  std::vector<CurvePoint> out;
  out.reserve(r_values.size());
  for (double r : r_values) {
    if (!(r > 0.0)) throw Error(ErrorKind::InvalidInput, "boundary_curve requires r > 0");
    const double gap = one_minus_K(r);
    const double K = squeeze_K(r);
    // equal amplitudes |χ| = |η| = a realize L = K/(1-K) on the constraint
    const double a2 = 1.0 / (2.0 * gap);
    if (std::abs(2.0 * a2 * gap - 1.0) > 1e-10) {
      throw std::logic_error("boundary amplitudes violate the ridge normalization");
    }
    out.push_back(CurvePoint{r, g2_optimal_from_L(r, K / gap)});
  }
  return out;
}

OptimumRecord boundary_record(double r) {
  const double rs[] = {r};
  const CurvePoint pt = boundary_curve(rs).front();
  const double a = 1.0 / std::sqrt(2.0 * one_minus_K(r));
  OptimumRecord rec = make_record(FixedParams{r, r, kPi, kPi, a}, a, pt.g2, OptimumKind::Boundary);
  rec.evaluations = 1;
  return rec;
}

OptimumRecord grid_min(const GridSpec& spec, Formula formula, const Tolerances& tol) {
  spec.validate();
  check_formula(spec, formula);
  const std::size_t n = spec.size();
  std::size_t best = n;
  PointValue best_value;
  long skipped = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const PointValue v = evaluate_point(spec.point(i), formula, tol);
    if (!v.g2) {
      ++skipped;
      continue;
    }
    if (best == n || *v.g2 < *best_value.g2) {
      best = i;
      best_value = v;
    }
  }
  if (best == n) {
    throw Error(ErrorKind::EmptyFeasibleSet,
                "grid_min: all " + std::to_string(n) + " grid points are infeasible");
  }
  OptimumRecord rec = make_record(spec.point(best), best_value.chi, *best_value.g2, OptimumKind::Grid);
  rec.evaluations = static_cast<long>(n);
  rec.skipped = skipped;
  return rec;
}

OptimumRecord refine_local(const OptimumRecord& seed, std::span<const Param> free_axes, double tol,
                           const RefineOptions& options) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "refine_local: tol must be > 0");
  if (free_axes.empty()) throw Error(ErrorKind::InvalidInput, "refine_local: no free axes");
  for (Param p : free_axes) {
    if (options.equal_squeeze && p == Param::s) {
      throw Error(ErrorKind::InvalidInput, "refine_local: s cannot be free while it follows r");
    }
  }
  RefineObjective objective(seed, free_axes, options);
  const FixedParams base = seed.params();
  const std::size_t dim = free_axes.size();

  std::vector<Vertex> simplex(dim + 1);
  simplex[0].x.resize(dim);
  for (std::size_t k = 0; k < dim; ++k) simplex[0].x[k] = base.get(free_axes[k]);
  simplex[0].f = objective(simplex[0].x);
  if (!std::isfinite(simplex[0].f)) {
    throw Error(ErrorKind::Infeasible, "refine_local: seed is not a feasible state");
  }
  for (std::size_t k = 0; k < dim; ++k) {
    double step = initial_step(free_axes[k]);
    Vertex v;
    for (int attempt = 0; attempt < 20; ++attempt) {
      v.x = simplex[0].x;
      v.x[k] += (attempt % 2 == 0) ? step : -step;
      v.f = objective(v.x);
      if (std::isfinite(v.f)) break;
      if (attempt % 2 == 1) step *= 0.5;
    }
    simplex[k + 1] = std::move(v);
  }

  bool converged = false;
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  while (true) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    if (diameter(simplex) < tol) {
      converged = true;
      break;
    }
    if (objective.evaluations() >= options.max_evaluations) break;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i].x[k] / static_cast<double>(dim);
    }
    Vertex& worst = simplex[dim];
    const double second_worst = simplex[dim - 1].f;

    Vertex reflected{affine(centroid, worst.x, -kReflect), 0.0};
    reflected.f = objective(reflected.x);
    if (reflected.f < simplex[0].f) {
      Vertex expanded{affine(centroid, reflected.x, kExpand), 0.0};
      expanded.f = objective(expanded.x);
      worst = (expanded.f < reflected.f) ? std::move(expanded) : std::move(reflected);
      continue;
    }
    if (reflected.f < second_worst) {
      worst = std::move(reflected);
      continue;
    }
    const bool outside = reflected.f < worst.f;
    Vertex contracted{affine(centroid, outside ? reflected.x : worst.x, kContract), 0.0};
    contracted.f = objective(contracted.x);
    if (outside ? contracted.f <= reflected.f : contracted.f < worst.f) {
      worst = std::move(contracted);
      continue;
    }
    for (std::size_t i = 1; i <= dim; ++i) {
      simplex[i].x = affine(simplex[0].x, simplex[i].x, kShrink);
      simplex[i].f = objective(simplex[i].x);
    }
  }

  const Vertex& best = simplex.front();
  const PointValue v = objective.evaluate(best.x);
  OptimumRecord rec = make_record(objective.params_at(best.x), v.chi, best.f, OptimumKind::Refined);
  rec.evaluations = objective.evaluations();
  rec.converged = converged;
  return rec;
}

OptimumRecord ridge_row(double r, double eta_fixed, const Tolerances& tol) {
  const double chi = solve_chi_ridge(r, eta_fixed);
  OptimumRecord rec = make_record(FixedParams{r, r, kPi, kPi, eta_fixed}, chi,
                                  g2_optimal(r, chi, eta_fixed, tol), OptimumKind::Grid);
  rec.evaluations = 1;
  return rec;
}

std::vector<OptimumRecord> table_s1(std::span<const double> r_values, double eta_fixed,
                                    const Tolerances& tol) {
  std::vector<OptimumRecord> out;
  out.reserve(r_values.size());
  for (double r : r_values) out.push_back(ridge_row(r, eta_fixed, tol));
  return out;
}

GridSpec basin_grid(int r_points, int eta_points) {
  GridSpec spec;
  spec.axes = {Axis{Param::r, 1.0 / r_points, 1.0, r_points}, Axis{Param::eta, 0.0, 3.0, eta_points}};
  spec.fixed = FixedParams{0.34, 0.34, kPi, kPi, 0.0};
  spec.equal_squeeze = true;
  return spec;
}

SweetSpot sweet_spot(const SweetSpotOptions& options) {
  SweetSpot out;
  const GridSpec basin = basin_grid(options.r_points, options.eta_points);
  out.grid = grid_min(basin);
  const Param plane[] = {Param::r, Param::eta};
  RefineOptions in_domain;
  in_domain.bounds = {Axis{Param::r, 0.0, 1.0, 2}, Axis{Param::eta, 0.0, 3.0, 2}};
  out.refined = refine_local(out.grid, plane, options.tol, in_domain);

  OptimumRecord seed = ridge_row(0.30);
  seed.g2 = g2_general(JanusParams::make(SqueezeParam::make(seed.r, seed.Delta),
                                         SqueezeParam::make(seed.s, 0.0), seed.chi_mag,
                                         seed.eta_mag, seed.delta));
  const Param line[] = {Param::r};
  out.slice = refine_local(seed, line, options.tol);
  return out;
}

}  // namespace janus
