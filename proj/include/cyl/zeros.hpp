#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cyl/special_fn.hpp"

namespace cyl {

/// First positive zeros c_{nu,1} < c_{nu,2} < ... of C_nu (Function) or
/// C'_nu (Derivative).
///
/// For (nu = 0, delta = 0, Derivative) the first entry is x = 0, the
/// classical convention for J'_0.
struct ZeroSequence {
  CylinderSpec spec;
  EvalKind kind;
  std::vector<double> zeros;
  double refined_to;  // relative step tolerance of the refinement

  bool operator==(const ZeroSequence&) const = default;
};

struct TrajectorySample {
  double nu;
  double zero;
};

/// s-th zero followed across a grid of orders at fixed angle and kind.
struct Trajectory {
  std::size_t s;
  EvalKind kind;
  MixingAngle angle;
  std::vector<TrajectorySample> samples;
  bool strictly_increasing;
  double max_slope;  // max |d zero / d nu| over consecutive samples
};

namespace scan {
/// Zeros below this point are not enumerated; find_zeros throws if the
/// sign at the floor shows that one was skipped.
inline constexpr double kFloor = 1e-6;
inline constexpr double kStep = 0.39269908169872414;  // pi / 8
}  // namespace scan

/// First n positive zeros. Requires n >= 1 and n pi + nu + 20 <= 400.
ZeroSequence find_zeros(const CylinderSpec& spec, EvalKind kind, std::size_t n);

/// All positive zeros in (0, x_max].
ZeroSequence find_zeros_below(const CylinderSpec& spec, EvalKind kind, double x_max);

Trajectory zero_trajectory(const MixingAngle& angle, EvalKind kind, std::size_t s,
                           std::span<const double> nu_grid);

}  // namespace cyl
