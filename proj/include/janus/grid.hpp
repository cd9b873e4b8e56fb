#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "janus/analytic.hpp"
#include "janus/params.hpp"

namespace janus {

enum class Param { r, s, Delta, delta, eta };

std::string_view to_string(Param p);
Param param_from_string(std::string_view name);

struct Axis {
  Param param = Param::r;
  double lo = 0.0;
  double hi = 1.0;
  int points = 2;

  double value(int i) const;
  friend bool operator==(const Axis&, const Axis&) = default;
};

/// Values for the parameters that are not scanned.
struct FixedParams {
  double r = 0.3;
  double s = 0.3;
  double Delta = kPi;
  double delta = kPi;
  double eta = 0.0;

  double get(Param p) const;
  void set(Param p, double v);
  friend bool operator==(const FixedParams&, const FixedParams&) = default;
};

/// A rectangular grid over a subset of {r, s, Δ, δ, |η|}. With equal_squeeze
/// set, s is not a free coordinate and always follows r.
struct GridSpec {
  std::vector<Axis> axes;
  FixedParams fixed;
  bool equal_squeeze = false;

  void validate() const;
  std::size_t size() const;
  std::vector<std::size_t> shape() const;
  /// Parameters at a row-major flattened index (first axis slowest).
  FixedParams point(std::size_t flat) const;
  bool has_axis(Param p) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

enum class Formula { General, Equal, Optimal, Boundary };

std::string_view to_string(Formula f);
Formula formula_from_string(std::string_view name);

/// Throws ErrorKind::FormulaMismatch when `f` cannot be applied to `spec`.
void check_formula(const GridSpec& spec, Formula f);

enum class PointStatus { Ok, Infeasible, Undefined, Invalid };

std::string_view to_string(PointStatus s);
PointStatus point_status_from_string(std::string_view name);

struct PointValue {
  std::optional<double> g2;
  double chi = 0.0;
  PointStatus status = PointStatus::Ok;
};

/// Evaluates one parameter tuple; |χ| is recovered from the normalization.
PointValue evaluate_point(const FixedParams& p, Formula f, const Tolerances& tol = {},
                          ChiRoot root = ChiRoot::Larger);

}  // namespace janus
