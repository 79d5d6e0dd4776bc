#include "cyl/zeros.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <utility>

#include "cyl/errors.hpp"
#include "cyl/root_bracket.hpp"

namespace cyl {

namespace {

constexpr double kRelTol = 1e-12;

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

bool is_j0_derivative(const CylinderSpec& spec, EvalKind kind) {
  return kind == EvalKind::Derivative && spec.order.value() == 0.0 &&
         spec.angle.sin() == 0.0;
}

// Scans (floor, x_max] in steps of pi/8 and refines every sign change. An
// interval without a sign change but with a sign change of the slope is
// split at the critical point, which catches a pair of close zeros.
class ZeroScanner {
 public:
  ZeroScanner(const CylinderSpec& spec, EvalKind kind) : spec_(spec), kind_(kind) {}

  std::vector<double> run(std::size_t max_count, double x_max) {
    std::vector<double> zeros;
    if (is_j0_derivative(spec_, kind_)) zeros.push_back(0.0);
    if (zeros.size() >= max_count) return zeros;

    double a = scan::kFloor;
    Jet fa = jet(a);
    const int expected = kind_ == EvalKind::Function ? sign_at_origin(spec_)
                                                     : derivative_sign_at_origin(spec_);
    if (sign_of(fa.value) != expected) {
      throw ConvergenceError("find_zeros: a zero lies below the scan floor " +
                             std::to_string(scan::kFloor) + "; it cannot be enumerated");
    }
    int sa = sign_of(fa.value);
    while (a < x_max) {
      const double b = std::min(a + scan::kStep, x_max);
      const Jet fb = jet(b);
      const int sb = fb.value != 0.0 ? sign_of(fb.value) : -sa;
      if (sb != sa) {
        zeros.push_back(fb.value == 0.0 ? b : refine(a, b));
        if (zeros.size() >= max_count) return zeros;
      } else if (sign_of(fa.slope) != sign_of(fb.slope) && fa.slope != 0.0 &&
                 fb.slope != 0.0) {
        const double m = critical_point(a, b, fa.slope);
        const double fm = jet(m).value;
        if (sign_of(fm) != sa) {
          if (fm == 0.0) {
            zeros.push_back(m);
          } else {
            zeros.push_back(refine(a, m));
            if (zeros.size() >= max_count) return zeros;
            zeros.push_back(refine(m, b));
          }
          if (zeros.size() >= max_count) return zeros;
        }
      }
      a = b;
      fa = fb;
      sa = sb;
    }
    return zeros;
  }

 private:
  Jet jet(double x) const { return evaluate(spec_, kind_, x); }

  double refine(double lo, double hi) const {
    auto eval = [this](double x) {
      const Jet j = jet(x);
      return std::pair{j.value, j.slope};
    };
    return safeguarded_newton(eval, lo, hi, NewtonOptions{kRelTol, 80, 200});
  }

  // Bisection on the slope.
  double critical_point(double lo, double hi, double slope_lo) const {
    const int s_lo = sign_of(slope_lo);
    for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++i) {
      const double mid = 0.5 * (lo + hi);
      if (sign_of(jet(mid).slope) == s_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }

  CylinderSpec spec_;
  EvalKind kind_;
};

}  // namespace

ZeroSequence find_zeros(const CylinderSpec& spec, EvalKind kind, std::size_t n) {
  if (n < 1) throw PreconditionError("find_zeros: n must be at least 1");
  const double reach = static_cast<double>(n) * std::numbers::pi + spec.order.value() + 20.0;
  if (reach > limits::kMaxX) {
    throw PreconditionError("find_zeros: n pi + nu + 20 exceeds the evaluation box");
  }
  ZeroScanner scanner(spec, kind);
  std::vector<double> zeros = scanner.run(n, limits::kMaxX);
  if (zeros.size() < n) {
    throw ConvergenceError("find_zeros: fewer than n zeros inside the evaluation box");
  }
  return {spec, kind, std::move(zeros), kRelTol};
}

ZeroSequence find_zeros_below(const CylinderSpec& spec, EvalKind kind, double x_max) {
  if (!(x_max > 0.0) || x_max > limits::kMaxX) {
    throw PreconditionError("find_zeros_below: x_max must lie in (0, 400]");
  }
  ZeroScanner scanner(spec, kind);
  std::vector<double> zeros = scanner.run(static_cast<std::size_t>(-1), x_max);
  return {spec, kind, std::move(zeros), kRelTol};
}

Trajectory zero_trajectory(const MixingAngle& angle, EvalKind kind, std::size_t s,
                           std::span<const double> nu_grid) {
  if (s < 1) throw PreconditionError("zero_trajectory: s must be at least 1");
  if (nu_grid.empty()) throw PreconditionError("zero_trajectory: empty grid");
  for (std::size_t i = 1; i < nu_grid.size(); ++i) {
    if (!(nu_grid[i] > nu_grid[i - 1])) {
      throw PreconditionError("zero_trajectory: grid must be strictly increasing");
    }
  }
  Trajectory t{s, kind, angle, {}, true, 0.0};
  t.samples.reserve(nu_grid.size());
  for (const double nu : nu_grid) {
    const CylinderSpec spec{Order{nu}, angle};
    const ZeroSequence z = find_zeros(spec, kind, s);
    t.samples.push_back({nu, z.zeros[s - 1]});
  }
  for (std::size_t i = 1; i < t.samples.size(); ++i) {
    const auto& p = t.samples[i - 1];
    const auto& q = t.samples[i];
    if (!(q.zero > p.zero)) t.strictly_increasing = false;
    t.max_slope = std::max(t.max_slope, std::abs(q.zero - p.zero) / (q.nu - p.nu));
  }
  return t;
}

}  // namespace cyl
