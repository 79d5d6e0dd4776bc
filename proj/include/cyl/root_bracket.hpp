#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <tuple>
#include <utility>

#include "cyl/errors.hpp"

namespace cyl {

struct NewtonOptions {
  double rel_tol = 1e-12;   // stop when |dx| <= rel_tol * max(1, |x|)
  int newton_steps = 80;    // safeguarded Newton budget before pure bisection
  int bisection_steps = 200;
};

/// Root of f on [lo, hi] where f(lo) and f(hi) have opposite signs.
///
/// `eval(x)` returns a pair (f, f'). Newton steps that leave the bracket or
/// fail to halve the previous step are replaced by bisection; the bracket is
/// kept valid throughout. If the Newton budget runs out the search finishes
/// with plain bisection. Throws ConvergenceError only when the initial
/// bracket is invalid.
template <typename Eval>
  requires std::invocable<Eval&, double>
double safeguarded_newton(Eval&& eval, double lo, double hi,
                          const NewtonOptions& opt = {}) {
  auto [f_lo, df_lo] = eval(lo);
  auto [f_hi, df_hi] = eval(hi);
  (void)df_lo;
  (void)df_hi;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw ConvergenceError("safeguarded_newton: root is not bracketed");
  }
  // Orient so that f(neg) < 0 < f(pos).
  double neg = f_lo < 0.0 ? lo : hi;
  double pos = f_lo < 0.0 ? hi : lo;

  auto done = [&](double dx, double x) {
    return std::abs(dx) <= opt.rel_tol * std::max(1.0, std::abs(x));
  };

  double x = 0.5 * (lo + hi);
  double dx_old = std::abs(hi - lo);
  double dx = dx_old;
  auto [f, df] = eval(x);
  for (int i = 0; i < opt.newton_steps; ++i) {
    if (f == 0.0) return x;
    const bool out_of_bracket = ((x - pos) * df - f) * ((x - neg) * df - f) >= 0.0;
    const bool too_slow = std::abs(2.0 * f) > std::abs(dx_old * df);
    if (out_of_bracket || too_slow || df == 0.0) {
      dx_old = dx;
      dx = 0.5 * (pos - neg);
      x = neg + dx;
    } else {
      dx_old = dx;
      dx = f / df;
      x -= dx;
    }
    if (done(dx, x)) return x;
    std::tie(f, df) = eval(x);
    if (f < 0.0) {
      neg = x;
    } else {
      pos = x;
    }
  }
  for (int i = 0; i < opt.bisection_steps; ++i) {
    const double mid = 0.5 * (neg + pos);
    if (done(pos - neg, mid)) return mid;
    const double fm = eval(mid).first;
    if (fm == 0.0) return mid;
    if (fm < 0.0) {
      neg = mid;
    } else {
      pos = mid;
    }
  }
  return 0.5 * (neg + pos);
}

}  // namespace cyl
