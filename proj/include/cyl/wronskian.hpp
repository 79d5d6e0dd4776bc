#pragma once

#include <cstddef>
#include <vector>

#include "cyl/report.hpp"
#include "cyl/special_fn.hpp"
#include "cyl/zeros.hpp"

namespace cyl {

/// W = xi_A xi_B' - xi_A' xi_B with xi = sqrt(x) C, which reduces to
/// x (C_A C_B' - C_A' C_B). For EvalKind::Derivative the same form is taken
/// with f = C' in place of C; its values at the merged zeros carry the same
/// sign information and it has the same limit.
double wronskian_value(const CylinderSpec& a, const CylinderSpec& b, double x,
                       EvalKind kind = EvalKind::Function);

/// |centered-difference W' - (mu^2 - nu^2)/x^2 xi_A xi_B| at x.
double check_derivative_identity(const CylinderSpec& a, const CylinderSpec& b, double x,
                                 double h = 1e-4);

/// (2/pi) sin((mu - nu) pi/2 + delta - delta_bar).
double wronskian_asymptote(const CylinderSpec& a, const CylinderSpec& b);

enum class ZeroSource { A, B };

struct Extremum {
  double position;
  double value;
  ZeroSource source;

  bool operator==(const Extremum&) const = default;
};

struct WronskianProfile {
  CylinderSpec spec_a;
  CylinderSpec spec_b;
  EvalKind kind;
  std::vector<Extremum> extrema;
  std::size_t sign_changes = 0;  // inside [x_lo, x_hi]
  bool degenerate = false;       // some value is exactly 0 (coincident zeros)
  bool tail_sign_change = false; // limit has the opposite sign of the last value
  double asymptote = 0.0;
  double tail_value = 0.0;       // W at min(x_hi + 10 pi, 400)
  double x_lo = 0.0;
  double x_hi = 0.0;

  bool operator==(const WronskianProfile&) const = default;
};

/// Values at the merged first-n zeros of both functions up to the common
/// window end. A zero at x = 0 (the J'_0 convention) has no value and is
/// skipped. Throws PreconditionError for identical specs.
WronskianProfile wronskian_profile(const CylinderSpec& a, const CylinderSpec& b,
                                   std::size_t n, EvalKind kind = EvalKind::Function);

/// Same, from zero lists already at hand (both of the same kind).
WronskianProfile wronskian_profile(const ZeroSequence& za, const ZeroSequence& zb);

struct EquivalenceReport {
  bool root_free = false;
  bool interlaced = false;
  bool tail_sign_change = false;
  VerificationReport report;
};

/// Compares "no sign change among the window values" with the interlacing
/// verdict on the same window.
EquivalenceReport interlace_wronskian_equivalence(const CylinderSpec& a, const CylinderSpec& b,
                                                  std::size_t n,
                                                  EvalKind kind = EvalKind::Function);

}  // namespace cyl
