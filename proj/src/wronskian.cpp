#include "cyl/wronskian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cyl/errors.hpp"
#include "cyl/interlace.hpp"
#include "cyl/zeros.hpp"

namespace cyl {

namespace {

constexpr double kPi = std::numbers::pi;

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

double wronskian_value(const CylinderSpec& a, const CylinderSpec& b, double x,
                       EvalKind kind) {
  const Jet fa = evaluate(a, kind, x);
  const Jet fb = evaluate(b, kind, x);
  return x * (fa.value * fb.slope - fa.slope * fb.value);
}

double check_derivative_identity(const CylinderSpec& a, const CylinderSpec& b, double x,
                                 double h) {
  if (!(x - h > 0.0)) throw PreconditionError("check_derivative_identity: needs x - h > 0");
  const double numeric =
      (wronskian_value(a, b, x + h) - wronskian_value(a, b, x - h)) / (2.0 * h);
  const double nu = a.order.value();
  const double mu = b.order.value();
  const double rhs = (mu * mu - nu * nu) / (x * x) * x * cylinder(a, x) * cylinder(b, x);
  return std::abs(numeric - rhs);
}

double wronskian_asymptote(const CylinderSpec& a, const CylinderSpec& b) {
  const double phase = (b.order.value() - a.order.value()) * kPi / 2 + a.angle.radians() -
                       b.angle.radians();
  return 2.0 / kPi * std::sin(phase);
}

WronskianProfile wronskian_profile(const CylinderSpec& a, const CylinderSpec& b,
                                   std::size_t n, EvalKind kind) {
  if (a == b) {
    throw PreconditionError("wronskian_profile: identical specs give W = 0 identically");
  }
  return wronskian_profile(find_zeros(a, kind, n), find_zeros(b, kind, n));
}

WronskianProfile wronskian_profile(const ZeroSequence& za, const ZeroSequence& zb) {
  const CylinderSpec& a = za.spec;
  const CylinderSpec& b = zb.spec;
  const EvalKind kind = za.kind;
  if (a == b) {
    throw PreconditionError("wronskian_profile: identical specs give W = 0 identically");
  }
  if (zb.kind != kind) throw PreconditionError("wronskian_profile: mixed zero kinds");
  if (za.zeros.empty() || zb.zeros.empty()) {
    throw PreconditionError("wronskian_profile: empty zero sequence");
  }

  WronskianProfile p{a, b, kind, {}, 0, false, false, 0.0, 0.0, 0.0, 0.0};
  p.x_hi = std::min(za.zeros.back(), zb.zeros.back());
  p.asymptote = wronskian_asymptote(a, b);

  for (double x : za.zeros) {
    if (x <= 0.0 || x > p.x_hi) continue;
    const Jet fa = evaluate(a, kind, x);
    const Jet fb = evaluate(b, kind, x);
    p.extrema.push_back({x, -x * fa.slope * fb.value, ZeroSource::A});
  }
  for (double x : zb.zeros) {
    if (x <= 0.0 || x > p.x_hi) continue;
    const Jet fa = evaluate(a, kind, x);
    const Jet fb = evaluate(b, kind, x);
    p.extrema.push_back({x, x * fa.value * fb.slope, ZeroSource::B});
  }
  std::stable_sort(p.extrema.begin(), p.extrema.end(),
                   [](const Extremum& l, const Extremum& r) { return l.position < r.position; });
  if (!p.extrema.empty()) p.x_lo = p.extrema.front().position;

  // Coincident zeros make both closed forms vanish; count them as degenerate.
  std::vector<bool> skip(p.extrema.size(), false);
  for (std::size_t k = 0; k + 1 < p.extrema.size(); ++k) {
    const Extremum& e = p.extrema[k];
    const Extremum& f = p.extrema[k + 1];
    if (e.source != f.source && f.position - e.position <= kCoincidence) {
      skip[k] = skip[k + 1] = true;
    }
  }
  int last = 0;
  for (std::size_t k = 0; k < p.extrema.size(); ++k) {
    const int s = sign_of(p.extrema[k].value);
    if (s == 0 || skip[k]) {
      p.degenerate = true;
      continue;
    }
    if (last != 0 && s != last) ++p.sign_changes;
    last = s;
  }
  if (last != 0 && std::abs(p.asymptote) > 1e-9 && sign_of(p.asymptote) != last) {
    p.tail_sign_change = true;
  }
  p.tail_value = wronskian_value(a, b, std::min(p.x_hi + 10.0 * kPi, limits::kMaxX), kind);
  return p;
}

EquivalenceReport interlace_wronskian_equivalence(const CylinderSpec& a, const CylinderSpec& b,
                                                  std::size_t n, EvalKind kind) {
  if (a == b) {
    throw PreconditionError("interlace_wronskian_equivalence: identical specs");
  }
  const ZeroSequence za = find_zeros(a, kind, n);
  const ZeroSequence zb = find_zeros(b, kind, n);
  const WronskianProfile p = wronskian_profile(za, zb);
  const InterlaceReport ir = check_interlaced(za, zb);

  EquivalenceReport out;
  out.root_free = p.sign_changes == 0 && !p.degenerate;
  out.interlaced = ir.interlaced;
  out.tail_sign_change = p.tail_sign_change;

  ReportBuilder rb("wronskian_equivalence");
  nlohmann::json ctx = {{"nu", a.order.value()},
                        {"mu", b.order.value()},
                        {"delta", a.angle.radians()},
                        {"delta_bar", b.angle.radians()},
                        {"kind", kind == EvalKind::Function ? "function" : "derivative"},
                        {"n", n},
                        {"sign_changes", p.sign_changes},
                        {"degenerate", p.degenerate},
                        {"interlaced", ir.interlaced}};
  rb.require(out.root_free == out.interlaced, ctx);
  out.report = rb.finish();
  return out;
}

}  // namespace cyl
