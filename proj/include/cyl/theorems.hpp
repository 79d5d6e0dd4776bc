#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyl/interlace.hpp"
#include "cyl/report.hpp"
#include "cyl/special_fn.hpp"

namespace cyl {

enum class FamilyKind { Cylinder, Jprime, Yprime, JvsY };

/// Which pair of functions a (nu, mu) cell compares.
///   Cylinder(delta): C_nu(.; delta) vs C_mu(.; delta)
///   Jprime, Yprime:  J'_nu vs J'_mu, Y'_nu vs Y'_mu
///   JvsY:            J_nu vs Y_mu
struct Family {
  FamilyKind kind = FamilyKind::Cylinder;
  MixingAngle delta{0.0};

  static Family cylinder(MixingAngle d) { return {FamilyKind::Cylinder, d}; }
  static Family jprime() { return {FamilyKind::Jprime, MixingAngle{0.0}}; }
  static Family yprime();
  static Family jvsy() { return {FamilyKind::JvsY, MixingAngle{0.0}}; }

  CylinderSpec spec_a(const Order& nu) const;
  CylinderSpec spec_b(const Order& mu) const;
  EvalKind eval_kind() const;
  std::string name() const;

  bool operator==(const Family&) const = default;
};

/// Three-term recurrence, both derivative recurrences (routes from above and
/// below), the two first-derivative lifts, and the second-order derivative
/// relation. Each residual is |sum of terms| / sum |terms|; threshold 1e-9.
VerificationReport verify_recurrences(const Order& nu, const MixingAngle& delta,
                                      std::span<const double> x_grid);

/// C_nu / C_{nu+a} for delta in {0, pi/4, pi/2}, J'_nu / J'_{nu+b},
/// Y'_nu / Y'_{nu+b} over n zeros, then the chain with step c.
VerificationReport verify_theorem1(const Order& nu, double a, double b, double c,
                                   std::size_t n);

struct Theorem3Outcome {
  bool excluded = false;          // nu == mu: the same function twice
  bool interlaced = false;        // window verdict and no tail evidence
  bool window_interlaced = false;
  bool tail_evidence = false;     // W must still change sign beyond the window
  bool predicate = false;         // |nu - mu| <= 2
  bool agree = false;
  std::optional<Violation> first_violation;
  std::size_t sign_changes = 0;
  VerificationReport report;
};

inline constexpr double kGapTolerance = 1e-9;

/// Families Cylinder, Jprime and Yprime only.
Theorem3Outcome verify_theorem3(const Order& nu, const Order& mu, const Family& family,
                                std::size_t n);

/// f, g, h at consecutive orders nu, nu+1, nu+2 and one angle. Function kind
/// uses the three-term recurrence, Derivative kind the second-order
/// derivative relation.
struct Triple {
  CylinderSpec f;
  CylinderSpec g;
  CylinderSpec h;
  EvalKind kind = EvalKind::Function;
};

enum class TransitivityStatus { Holds, PremiseFailure, ConclusionFailure };

struct TransitivityResult {
  TransitivityStatus status = TransitivityStatus::Holds;
  VerificationReport report;
};

TransitivityResult verify_transitivity(const Triple& t, double lo, double hi);

struct BreakdownCell {
  double nu = 0.0;
  double mu = 0.0;
  double delta = 0.0;
  double delta_bar = 0.0;
  std::size_t n = 0;
  bool excluded = false;
  bool interlaced = false;
  bool window_interlaced = false;
  bool tail_sign_change = false;
  bool degenerate = false;
  std::optional<std::size_t> first_violation;
  std::size_t sign_changes = 0;
  std::optional<bool> proviso;  // y_{mu,1} < j_{nu,1}, JvsY only

  /// (no window sign change) <=> window interlaced.
  bool consistent() const {
    return excluded || ((sign_changes == 0 && !degenerate) == window_interlaced);
  }

  bool operator==(const BreakdownCell&) const = default;
};

struct BreakdownMap {
  Family family;
  double nu = 0.0;
  std::vector<BreakdownCell> cells;

  bool operator==(const BreakdownMap&) const = default;
};

/// One cell per gap with mu = nu + gap. threads = 0 uses the hardware count.
BreakdownMap breakdown_scan(const Family& family, const Order& nu,
                            std::span<const double> gaps, std::size_t n,
                            unsigned threads = 0);

/// breakdown_scan over every (family, nu) pair, all cells sharing one pool.
/// Maps come back family-major, then nu, in input order.
std::vector<BreakdownMap> scan_grid(std::span<const Family> families,
                                    std::span<const double> nus, std::span<const double> gaps,
                                    std::size_t n, unsigned threads = 0);

/// Verdict against |nu - mu| <= 2 on every non-excluded cell.
VerificationReport verify_iff_grid(std::span<const BreakdownMap> maps);

/// BreakdownCell::consistent on every cell.
VerificationReport verify_lemma5(std::span<const BreakdownMap> maps);

/// JvsY maps: |nu - mu| <= 1 must interlace; |nu - mu| > 1 with the proviso
/// must break. Cells with the proviso false are not judged.
VerificationReport verify_jvsy(std::span<const BreakdownMap> maps);

/// Cell evaluation shared by breakdown_scan and verify_theorem3.
BreakdownCell evaluate_cell(const Family& family, const Order& nu, const Order& mu,
                            std::size_t n);

}  // namespace cyl
