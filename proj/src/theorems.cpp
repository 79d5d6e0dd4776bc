#include "cyl/theorems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <numbers>

#include "cyl/errors.hpp"
#include "cyl/wronskian.hpp"
#include "cyl/zeros.hpp"
#include "parallel.hpp"

namespace cyl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRecurrenceTol = 1e-9;

double relative_residual(std::initializer_list<double> terms) {
  double sum = 0.0;
  double scale = 0.0;
  for (double t : terms) {
    sum += t;
    scale += std::abs(t);
  }
  return scale == 0.0 ? 0.0 : std::abs(sum) / scale;
}

const char* kind_name(EvalKind k) { return k == EvalKind::Function ? "function" : "derivative"; }

}  // namespace

Family Family::yprime() { return {FamilyKind::Yprime, MixingAngle{kPi / 2}}; }

CylinderSpec Family::spec_a(const Order& nu) const {
  switch (kind) {
    case FamilyKind::Cylinder:
      return {nu, delta};
    case FamilyKind::Jprime:
    case FamilyKind::JvsY:
      return {nu, MixingAngle{0.0}};
    case FamilyKind::Yprime:
      return {nu, MixingAngle{kPi / 2}};
  }
  return {nu, delta};
}

CylinderSpec Family::spec_b(const Order& mu) const {
  switch (kind) {
    case FamilyKind::Cylinder:
      return {mu, delta};
    case FamilyKind::Jprime:
      return {mu, MixingAngle{0.0}};
    case FamilyKind::Yprime:
    case FamilyKind::JvsY:
      return {mu, MixingAngle{kPi / 2}};
  }
  return {mu, delta};
}

EvalKind Family::eval_kind() const {
  return kind == FamilyKind::Jprime || kind == FamilyKind::Yprime ? EvalKind::Derivative
                                                                   : EvalKind::Function;
}

std::string Family::name() const {
  switch (kind) {
    case FamilyKind::Cylinder:
      return "cylinder";
    case FamilyKind::Jprime:
      return "jprime";
    case FamilyKind::Yprime:
      return "yprime";
    case FamilyKind::JvsY:
      return "jvsy";
  }
  return "cylinder";
}

VerificationReport verify_recurrences(const Order& nu, const MixingAngle& delta,
                                      std::span<const double> x_grid) {
  const double v = nu.value();
  ReportBuilder rb("recurrences");
  for (const double x : x_grid) {
    auto c = [&](double order) { return cylinder_at_order(order, delta, x); };
    const double cm1 = c(v - 1.0);
    const double c0 = c(v);
    const double c1 = c(v + 1.0);
    const double c2 = c(v + 2.0);
    const double c3 = c(v + 3.0);
    // Library derivative route: C'_k = -C_{k+1} + (k/x) C_k.
    const double p0 = -c1 + (v / x) * c0;
    const double p1 = -c2 + ((v + 1.0) / x) * c1;
    const double p2 = -c3 + ((v + 2.0) / x) * c2;

    const double a = x * x - (v + 1.0) * (v + 2.0);
    const double b = x * x - v * (v + 1.0);
    const double rhs = 2.0 * (v + 1.0) / x * (x * x - v * (v + 2.0));

    const std::array<std::pair<const char*, double>, 6> residuals = {{
        {"three_term", relative_residual({c0, -(2.0 * v + 2.0) / x * c1, c2})},
        {"derivative_from_below", relative_residual({cm1, -(v / x) * c0, -p0})},
        {"derivative_difference", relative_residual({p1, -0.5 * c0, 0.5 * c2})},
        {"derivative_lift_1", relative_residual({p1, -c0, ((v + 1.0) / x) * c1})},
        {"derivative_lift_2", relative_residual({p2, -c1, ((v + 2.0) / x) * c2})},
        {"second_order_derivative", relative_residual({a * p0, b * p2, -rhs * p1})},
    }};
    for (const auto& [name, r] : residuals) {
      rb.residual(r, kRecurrenceTol,
                  {{"identity", name}, {"nu", v}, {"delta", delta.radians()}, {"x", x}});
    }
  }
  return rb.finish();
}

VerificationReport verify_theorem1(const Order& nu, double a, double b, double c,
                                   std::size_t n) {
  if (!(a > 0.0 && a <= 2.0) || !(b > 0.0 && b <= 1.0) || !(c > 0.0 && c <= 1.0)) {
    throw PreconditionError("verify_theorem1: needs 0 < a <= 2, 0 < b <= 1, 0 < c <= 1");
  }
  const double v = nu.value();
  ReportBuilder rb("theorem1");
  auto pair_check = [&](const CylinderSpec& sa, const CylinderSpec& sb, EvalKind kind,
                        const char* what) {
    const ZeroSequence za = find_zeros(sa, kind, n);
    const ZeroSequence zb = find_zeros(sb, kind, n);
    const InterlaceReport r = check_interlaced(za, zb);
    nlohmann::json ctx = {{"pair", what},
                          {"nu", sa.order.value()},
                          {"mu", sb.order.value()},
                          {"delta", sa.angle.radians()},
                          {"kind", kind_name(kind)}};
    if (r.first_violation) {
      ctx["first_violation"] = r.first_violation->index;
      ctx["count"] = r.first_violation->count;
    }
    rb.require(r.interlaced, ctx);
  };
  for (const double d : {0.0, kPi / 4, kPi / 2}) {
    const MixingAngle angle{d};
    pair_check({nu, angle}, {Order{v + a}, angle}, EvalKind::Function, "C_nu/C_{nu+a}");
  }
  pair_check({nu, MixingAngle{0.0}}, {Order{v + b}, MixingAngle{0.0}}, EvalKind::Derivative,
             "J'_nu/J'_{nu+b}");
  pair_check({nu, MixingAngle{kPi / 2}}, {Order{v + b}, MixingAngle{kPi / 2}},
             EvalKind::Derivative, "Y'_nu/Y'_{nu+b}");
  rb.merge(verify_chain(nu, c, n));
  return rb.finish();
}

BreakdownCell evaluate_cell(const Family& family, const Order& nu, const Order& mu,
                            std::size_t n) {
  const CylinderSpec sa = family.spec_a(nu);
  const CylinderSpec sb = family.spec_b(mu);
  BreakdownCell cell;
  cell.nu = nu.value();
  cell.mu = mu.value();
  cell.delta = sa.angle.radians();
  cell.delta_bar = sb.angle.radians();
  cell.n = n;
  if (sa == sb) {
    cell.excluded = true;
    return cell;
  }
  const EvalKind kind = family.eval_kind();
  const ZeroSequence za = find_zeros(sa, kind, n);
  const ZeroSequence zb = find_zeros(sb, kind, n);
  const InterlaceReport ir = check_interlaced(za, zb);
  const WronskianProfile wp = wronskian_profile(za, zb);

  cell.window_interlaced = ir.interlaced;
  cell.tail_sign_change = wp.tail_sign_change;
  cell.interlaced = ir.interlaced && !wp.tail_sign_change;
  cell.degenerate = wp.degenerate;
  if (ir.first_violation) cell.first_violation = ir.first_violation->index;
  cell.sign_changes = wp.sign_changes;
  if (family.kind == FamilyKind::JvsY) {
    // y_{mu,1} < j_{nu,1}
    cell.proviso = zb.zeros.front() < za.zeros.front();
  }
  return cell;
}

Theorem3Outcome verify_theorem3(const Order& nu, const Order& mu, const Family& family,
                                std::size_t n) {
  if (family.kind == FamilyKind::JvsY) {
    throw PreconditionError("verify_theorem3: family must be cylinder, jprime or yprime");
  }
  if (!(nu.value() > 0.0) || !(mu.value() > 0.0)) {
    throw PreconditionError("verify_theorem3: orders must be positive");
  }
  Theorem3Outcome out;
  out.predicate = std::abs(nu.value() - mu.value()) <= 2.0 + kGapTolerance;
  const BreakdownCell cell = evaluate_cell(family, nu, mu, n);
  ReportBuilder rb("theorem3");
  if (cell.excluded) {
    out.excluded = true;
    out.agree = true;
    out.report = rb.finish();
    return out;
  }
  out.window_interlaced = cell.window_interlaced;
  out.tail_evidence = cell.tail_sign_change;
  out.interlaced = cell.interlaced;
  out.sign_changes = cell.sign_changes;
  if (cell.first_violation) {
    const ZeroSequence za = find_zeros(family.spec_a(nu), family.eval_kind(), n);
    const ZeroSequence zb = find_zeros(family.spec_b(mu), family.eval_kind(), n);
    out.first_violation = check_interlaced(za, zb).first_violation;
  }
  out.agree = out.interlaced == out.predicate;
  rb.require(out.agree, {{"family", family.name()},
                         {"nu", nu.value()},
                         {"mu", mu.value()},
                         {"delta", family.delta.radians()},
                         {"n", n},
                         {"interlaced", out.interlaced},
                         {"window_interlaced", out.window_interlaced},
                         {"tail_evidence", out.tail_evidence},
                         {"predicate", out.predicate}});
  out.report = rb.finish();
  return out;
}

TransitivityResult verify_transitivity(const Triple& t, double lo, double hi) {
  const double v = t.f.order.value();
  if (t.g.order.value() != v + 1.0 || t.h.order.value() != v + 2.0 || !(t.f.angle == t.g.angle) ||
      !(t.f.angle == t.h.angle)) {
    throw PreconditionError("verify_transitivity: need orders nu, nu+1, nu+2 at one angle");
  }
  if (!(lo >= 0.0 && lo < hi && hi <= limits::kMaxX)) {
    throw PreconditionError("verify_transitivity: probe interval must lie in [0, 400]");
  }
  const nlohmann::json where = {{"nu", v},
                                {"delta", t.f.angle.radians()},
                                {"kind", kind_name(t.kind)},
                                {"lo", lo},
                                {"hi", hi}};
  ReportBuilder rb("transitivity");
  TransitivityResult out;

  // Premise 1: a, b, c keep their sign on (lo, hi).
  std::vector<std::pair<const char*, double>> roots;
  if (t.kind == EvalKind::Derivative) {
    roots = {{"a", std::sqrt((v + 1.0) * (v + 2.0))},
             {"b", std::sqrt(v * (v + 2.0))},
             {"c", std::sqrt(v * (v + 1.0))}};
  }
  for (const auto& [name, root] : roots) {
    if (root > lo && root < hi) {
      nlohmann::json ce = where;
      ce["failure"] = "premise";
      ce["reason"] = "coefficient sign change";
      ce["coefficient"] = name;
      ce["root"] = root;
      rb.require(false, ce);
      out.status = TransitivityStatus::PremiseFailure;
      out.report = rb.finish();
      return out;
    }
    rb.require(true, {});
  }

  // Premise 2: f-g and g-h interlaced on the interval.
  const ZeroSequence zf = find_zeros_below(t.f, t.kind, hi);
  const ZeroSequence zg = find_zeros_below(t.g, t.kind, hi);
  const ZeroSequence zh = find_zeros_below(t.h, t.kind, hi);
  const InterlaceReport fg = check_interlaced_on(zf.zeros, zg.zeros, lo, hi);
  const InterlaceReport gh = check_interlaced_on(zg.zeros, zh.zeros, lo, hi);
  for (const auto& [name, r] : {std::pair{"f-g", fg}, std::pair{"g-h", gh}}) {
    if (!r.interlaced) {
      nlohmann::json ce = where;
      ce["failure"] = "premise";
      ce["reason"] = std::string(name) + " not interlaced";
      ce["first_violation"] = r.first_violation->index;
      rb.require(false, ce);
      out.status = TransitivityStatus::PremiseFailure;
      out.report = rb.finish();
      return out;
    }
    rb.require(true, {});
  }

  const InterlaceReport fh = check_interlaced_on(zf.zeros, zh.zeros, lo, hi);
  nlohmann::json ce = where;
  ce["failure"] = "conclusion";
  if (fh.first_violation) ce["first_violation"] = fh.first_violation->index;
  if (!rb.require(fh.interlaced, ce)) out.status = TransitivityStatus::ConclusionFailure;
  out.report = rb.finish();
  return out;
}

BreakdownMap breakdown_scan(const Family& family, const Order& nu,
                            std::span<const double> gaps, std::size_t n, unsigned threads) {
  std::vector<Order> mus;
  mus.reserve(gaps.size());
  for (double g : gaps) mus.emplace_back(nu.value() + g);
  BreakdownMap map{family, nu.value(), {}};
  map.cells = detail::parallel_map<BreakdownCell>(
      mus.size(), threads, [&](std::size_t i) { return evaluate_cell(family, nu, mus[i], n); });
  return map;
}

std::vector<BreakdownMap> scan_grid(std::span<const Family> families,
                                    std::span<const double> nus, std::span<const double> gaps,
                                    std::size_t n, unsigned threads) {
  struct Job {
    std::size_t family;
    Order nu;
    Order mu;
  };
  std::vector<Job> jobs;
  for (std::size_t f = 0; f < families.size(); ++f) {
    for (double nu : nus) {
      for (double g : gaps) jobs.push_back({f, Order{nu}, Order{nu + g}});
    }
  }
  const auto cells = detail::parallel_map<BreakdownCell>(jobs.size(), threads, [&](std::size_t i) {
    return evaluate_cell(families[jobs[i].family], jobs[i].nu, jobs[i].mu, n);
  });
  std::vector<BreakdownMap> maps;
  std::size_t k = 0;
  for (const Family& family : families) {
    for (double nu : nus) {
      BreakdownMap m{family, nu, {}};
      for (std::size_t g = 0; g < gaps.size(); ++g) m.cells.push_back(cells[k++]);
      maps.push_back(std::move(m));
    }
  }
  return maps;
}

namespace {

nlohmann::json cell_context(const BreakdownMap& m, const BreakdownCell& c) {
  nlohmann::json j = {{"family", m.family.name()},
                      {"nu", c.nu},
                      {"mu", c.mu},
                      {"delta", c.delta},
                      {"delta_bar", c.delta_bar},
                      {"n", c.n},
                      {"interlaced", c.interlaced},
                      {"window_interlaced", c.window_interlaced},
                      {"tail_sign_change", c.tail_sign_change},
                      {"sign_changes", c.sign_changes}};
  if (c.first_violation) j["first_violation"] = *c.first_violation;
  if (c.proviso) j["proviso"] = *c.proviso;
  return j;
}

}  // namespace

VerificationReport verify_iff_grid(std::span<const BreakdownMap> maps) {
  ReportBuilder rb("theorem3_grid");
  for (const BreakdownMap& m : maps) {
    for (const BreakdownCell& c : m.cells) {
      if (c.excluded) continue;
      const bool predicate = std::abs(c.nu - c.mu) <= 2.0 + kGapTolerance;
      nlohmann::json ctx = cell_context(m, c);
      ctx["predicate"] = predicate;
      rb.require(predicate == c.interlaced, ctx);
    }
  }
  return rb.finish();
}

VerificationReport verify_lemma5(std::span<const BreakdownMap> maps) {
  ReportBuilder rb("lemma5");
  for (const BreakdownMap& m : maps) {
    for (const BreakdownCell& c : m.cells) {
      if (!c.excluded) rb.require(c.consistent(), cell_context(m, c));
    }
  }
  return rb.finish();
}

VerificationReport verify_jvsy(std::span<const BreakdownMap> maps) {
  ReportBuilder rb("jvsy_breakdown");
  for (const BreakdownMap& m : maps) {
    if (m.family.kind != FamilyKind::JvsY) {
      throw PreconditionError("verify_jvsy: maps must use the jvsy family");
    }
    for (const BreakdownCell& c : m.cells) {
      const double gap = std::abs(c.nu - c.mu);
      if (gap <= 1.0 + kGapTolerance) {
        rb.require(c.interlaced, cell_context(m, c));
      } else if (c.proviso.value_or(false)) {
        rb.require(!c.interlaced, cell_context(m, c));
      }
    }
  }
  return rb.finish();
}

}  // namespace cyl
