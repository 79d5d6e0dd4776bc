#include "cyl/interlace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cyl/errors.hpp"

namespace cyl {

namespace {

struct Tagged {
  double x;
  bool from_a;
};

std::size_t count_a_below(std::span<const double> a, double x) {
  return static_cast<std::size_t>(std::lower_bound(a.begin(), a.end(), x) - a.begin());
}

InterlaceReport judge(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw PreconditionError("check_interlaced: empty zero sequence");
  }
  const double cut = std::min(a.back(), b.back());
  if (std::max(a.front(), b.front()) > cut) {
    throw PreconditionError("check_interlaced: zero ranges do not overlap");
  }

  std::vector<Tagged> merged;
  for (double x : a) {
    if (x <= cut) merged.push_back({x, true});
  }
  for (double x : b) {
    if (x <= cut) merged.push_back({x, false});
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const Tagged& l, const Tagged& r) { return l.x < r.x; });

  InterlaceReport rep;
  rep.window_end = cut;
  for (std::size_t k = 1; k < merged.size(); ++k) {
    ++rep.pairs_checked;
    const Tagged& p = merged[k - 1];
    const Tagged& q = merged[k];
    const bool coincident = p.from_a != q.from_a && std::abs(q.x - p.x) <= kCoincidence;
    if (!coincident && p.from_a != q.from_a) continue;

    Violation v;
    v.position = q.x;
    v.coincident = coincident;
    if (coincident) {
      const double xa = p.from_a ? p.x : q.x;
      v.index = count_a_below(a, xa) + 1;
      v.count = 0;
    } else if (p.from_a) {
      v.index = count_a_below(a, p.x) + 1;
      v.count = 0;
    } else {
      // Two B zeros in a row: count every B zero of that A-gap.
      const std::size_t i = count_a_below(a, p.x);
      const double lo = i == 0 ? 0.0 : a[i - 1];
      const double hi = i < a.size() ? a[i] : cut;
      v.index = i;
      v.count = static_cast<std::size_t>(
          std::count_if(b.begin(), b.end(), [&](double x) { return x > lo && x < hi; }));
    }
    rep.first_violation = v;
    return rep;
  }
  rep.interlaced = true;
  return rep;
}

}  // namespace

InterlaceReport check_interlaced(std::span<const double> a, std::span<const double> b) {
  return judge(a, b);
}

InterlaceReport check_interlaced(const ZeroSequence& a, const ZeroSequence& b) {
  return judge(a.zeros, b.zeros);
}

InterlaceReport check_interlaced_on(std::span<const double> a, std::span<const double> b,
                                    double lo, double hi) {
  auto inside = [lo, hi](std::span<const double> z) {
    std::vector<double> out;
    for (double x : z) {
      if (x > lo && x < hi) out.push_back(x);
    }
    return out;
  };
  const std::vector<double> ra = inside(a);
  const std::vector<double> rb = inside(b);
  return judge(ra, rb);
}

ShiftReport detect_shifted(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty() ||
      std::max(a.front(), b.front()) > std::min(a.back(), b.back())) {
    throw PreconditionError("detect_shifted: zero ranges do not overlap");
  }
  const long na = static_cast<long>(a.size());
  const long nb = static_cast<long>(b.size());
  for (int mag = 1; mag <= kMaxShift; ++mag) {
    for (int d : {mag, -mag}) {
      // s is 1-based; need 1 <= s <= nb and 1 <= s + d, s + d + 1 <= na.
      const long s_lo = std::max(1L, 1L - d);
      const long s_hi = std::min(nb, na - d - 1);
      if (s_hi - s_lo + 1 < 2) continue;
      long first = s_hi + 1;
      for (long s = s_hi; s >= s_lo; --s) {
        const double bs = b[static_cast<std::size_t>(s - 1)];
        const double lo = a[static_cast<std::size_t>(s + d - 1)];
        const double hi = a[static_cast<std::size_t>(s + d)];
        if (!(bs > lo && bs < hi)) break;
        first = s;
      }
      if (s_hi - first + 1 >= 2) {
        return {d, static_cast<std::size_t>(first), static_cast<std::size_t>(s_hi)};
      }
    }
  }
  return {};
}

ShiftReport detect_shifted(const ZeroSequence& a, const ZeroSequence& b) {
  return detect_shifted(std::span<const double>(a.zeros), std::span<const double>(b.zeros));
}

VerificationReport verify_chain(const Order& nu, double c, std::size_t n) {
  if (!(c > 0.0 && c <= 1.0)) throw PreconditionError("verify_chain: c must lie in (0, 1]");
  if (n < 1) throw PreconditionError("verify_chain: n must be at least 1");
  const double v = nu.value();
  const MixingAngle zero_angle{0.0};
  const MixingAngle y_angle{std::numbers::pi / 2};
  const Order nu_c{v + c};

  const auto jp = find_zeros({nu, zero_angle}, EvalKind::Derivative, n + 1).zeros;
  const auto y = find_zeros({nu, y_angle}, EvalKind::Function, n).zeros;
  const auto yc = find_zeros({nu_c, y_angle}, EvalKind::Function, n).zeros;
  const auto yp = find_zeros({nu, y_angle}, EvalKind::Derivative, n).zeros;
  const auto j = find_zeros({nu, zero_angle}, EvalKind::Function, n).zeros;
  const auto jc = find_zeros({nu_c, zero_angle}, EvalKind::Function, n).zeros;

  ReportBuilder rb("chain");
  rb.require(v <= jp[0], {{"link", "nu <= j'_1"}, {"nu", v}, {"value", jp[0]}});
  static constexpr std::array<const char*, 7> kNames = {"j'_s", "y_s", "y_{nu+c,s}", "y'_s",
                                                        "j_s", "j_{nu+c,s}", "j'_{s+1}"};
  for (std::size_t s = 0; s < n; ++s) {
    const std::array<double, 7> chain = {jp[s], y[s], yc[s], yp[s], j[s], jc[s], jp[s + 1]};
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      rb.margin(chain[k + 1] - chain[k],
                {{"s", s + 1},
                 {"link", std::string(kNames[k]) + " < " + kNames[k + 1]},
                 {"left", chain[k]},
                 {"right", chain[k + 1]}});
    }
  }
  return rb.finish();
}

}  // namespace cyl
