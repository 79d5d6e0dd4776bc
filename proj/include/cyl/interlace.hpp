#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "cyl/report.hpp"
#include "cyl/special_fn.hpp"
#include "cyl/zeros.hpp"

namespace cyl {

/// First place where the merged zeros stop alternating. index is the A-gap
/// (A_index, A_index+1), with 0 meaning the stretch before A_1; count is the
/// number of B zeros strictly inside that gap.
struct Violation {
  std::size_t index = 0;
  std::size_t count = 0;
  bool coincident = false;
  double position = 0.0;

  bool operator==(const Violation&) const = default;
};

struct InterlaceReport {
  bool interlaced = false;
  std::optional<Violation> first_violation;
  std::size_t pairs_checked = 0;
  double window_end = 0.0;  // zeros above this are not judged

  bool operator==(const InterlaceReport&) const = default;
};

/// Zeros closer than this are treated as coincident.
inline constexpr double kCoincidence = 1e-9;

/// Judges the zeros up to min(A_last, B_last). Throws PreconditionError if
/// either list is empty or the ranges do not overlap.
InterlaceReport check_interlaced(std::span<const double> a, std::span<const double> b);
InterlaceReport check_interlaced(const ZeroSequence& a, const ZeroSequence& b);

/// Same check restricted to zeros inside (lo, hi).
InterlaceReport check_interlaced_on(std::span<const double> a, std::span<const double> b,
                                    double lo, double hi);

/// B_s lies in (A_{s+d}, A_{s+d+1}) for every s of the window (1-based).
struct ShiftReport {
  std::optional<int> shift_d;
  std::size_t window_first = 0;
  std::size_t window_last = 0;

  bool operator==(const ShiftReport&) const = default;
};

inline constexpr int kMaxShift = 3;

/// Tries d = 1, -1, 2, -2, 3, -3 and returns the first with a suffix window
/// of at least two indices.
ShiftReport detect_shifted(std::span<const double> a, std::span<const double> b);
ShiftReport detect_shifted(const ZeroSequence& a, const ZeroSequence& b);

/// j'_{nu,s} < y_{nu,s} < y_{nu+c,s} < y'_{nu,s} < j_{nu,s} < j_{nu+c,s} < j'_{nu,s+1}
/// for s = 1..n, and nu <= j'_{nu,1}. worst_residual is the smallest gap.
VerificationReport verify_chain(const Order& nu, double c, std::size_t n);

}  // namespace cyl
