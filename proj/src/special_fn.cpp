#include "cyl/special_fn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "bessel_jy.hpp"
#include "cyl/errors.hpp"

namespace cyl {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

void check_box(double nu, double x, const char* what) {
  if (!std::isfinite(nu) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
  if (nu < limits::kMinEvalOrder || nu > limits::kMaxEvalOrder) {
    throw DomainError(std::string(what) + ": order " + std::to_string(nu) +
                      " outside [-1, 34]");
  }
  if (x <= 0.0 || x > limits::kMaxX) {
    throw DomainError(std::string(what) + ": argument " + std::to_string(x) +
                      " outside (0, 400]");
  }
}

// Angles within a few ulps of 0 or pi/2 are snapped so that delta = 0 and
// delta = pi/2 reproduce J and -Y exactly.
bool near(double a, double b) { return std::abs(a - b) <= 4.0 * 2.220446049250313e-16 * std::max(1.0, std::abs(b)); }

}  // namespace

Order::Order(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || nu < 0.0 || nu > limits::kMaxOrder) {
    throw DomainError("order must lie in [0, 30], got " + std::to_string(nu));
  }
}

MixingAngle::MixingAngle(double delta) {
  if (!std::isfinite(delta)) throw DomainError("mixing angle must be finite");
  // Reduce modulo pi; every full pi step flips the sign of C.
  const double turns = std::floor(delta / kPi);
  double reduced = delta - turns * kPi;
  long long parity = static_cast<long long>(turns);
  if (reduced >= kPi || near(reduced, kPi)) {
    reduced = 0.0;
    ++parity;
  }
  if (reduced < 0.0) reduced = 0.0;
  delta_ = reduced;
  flip_ = (parity % 2 == 0) ? 1 : -1;
  if (reduced == 0.0) {
    cos_ = 1.0;
    sin_ = 0.0;
  } else if (near(reduced, kPi / 2)) {
    delta_ = kPi / 2;
    cos_ = 0.0;
    sin_ = 1.0;
  } else {
    cos_ = std::cos(reduced);
    sin_ = std::sin(reduced);
  }
}

CylinderSpec second_kind(double nu) { return {Order{nu}, MixingAngle{kPi / 2}}; }

double gamma_real(double a) {
  if (!std::isfinite(a) || a <= 0.0) {
    throw DomainError("gamma_real: argument must be positive and finite");
  }
  if (a < 0.5) {
    return kPi / (std::sin(kPi * a) * gamma_real(1.0 - a));
  }
  const double z = a - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

double bessel_j(double nu, double x) {
  check_box(nu, x, "bessel_j");
  return detail::bessel_jy_any(nu, x).j;
}

double bessel_y(double nu, double x) {
  check_box(nu, x, "bessel_y");
  return detail::bessel_jy_any(nu, x).y;
}

namespace {

struct CylinderPair {
  double value;  // C_order
  double next;   // C_{order+1}
};

CylinderPair cylinder_pair(double order, const MixingAngle& angle, double x) {
  check_box(order, x, "cylinder");
  check_box(order + 1.0, x, "cylinder");
  const detail::BesselPair b = detail::bessel_jy_any(order, x);
  return {angle.cos() * b.j - angle.sin() * b.y,
          angle.cos() * b.j_next - angle.sin() * b.y_next};
}

}  // namespace

double cylinder(const CylinderSpec& spec, double x) {
  return cylinder_at_order(spec.order.value(), spec.angle, x);
}

double cylinder_at_order(double order, const MixingAngle& angle, double x) {
  check_box(order, x, "cylinder");
  const detail::BesselPair b = detail::bessel_jy_any(order, x);
  return angle.cos() * b.j - angle.sin() * b.y;
}

double cylinder_prime(const CylinderSpec& spec, double x) {
  const double nu = spec.order.value();
  const CylinderPair c = cylinder_pair(nu, spec.angle, x);
  return -c.next + (nu / x) * c.value;
}

Jet evaluate(const CylinderSpec& spec, EvalKind kind, double x) {
  const double nu = spec.order.value();
  const CylinderPair c = cylinder_pair(nu, spec.angle, x);
  const double prime = -c.next + (nu / x) * c.value;
  if (kind == EvalKind::Function) return {c.value, prime};
  // Bessel's equation: C'' = -C'/x - (1 - nu^2/x^2) C.
  const double second = -prime / x - (1.0 - (nu * nu) / (x * x)) * c.value;
  return {prime, second};
}

int sign_at_origin(const CylinderSpec& spec) {
  const double s = spec.angle.sin();
  if (s > 0.0) return 1;
  if (s < 0.0) return -1;
  return 1;
}

int derivative_sign_at_origin(const CylinderSpec& spec) {
  const double s = spec.angle.sin();
  if (s != 0.0) return s > 0.0 ? -1 : 1;
  // J'_nu(0+) > 0 for nu > 0, while J'_0 = -J_1 starts negative.
  return spec.order.value() > 0.0 ? 1 : -1;
}

double asymptotic_cylinder(const CylinderSpec& spec, double x) {
  const double nu = spec.order.value();
  if (!(x >= 10.0 * std::max(1.0, nu))) {
    throw PreconditionError("asymptotic_cylinder: requires x >= 10 max(1, nu)");
  }
  const double phase = x - nu * kPi / 2 - kPi / 4 + spec.angle.radians();
  return std::sqrt(2.0 / (kPi * x)) * std::cos(phase);
}

std::vector<double> asymptotic_zeros(const CylinderSpec& spec, double x_from,
                                     std::size_t count) {
  // cos(x - theta) = 0 at x = theta + pi/2 + k pi.
  const double theta = spec.order.value() * kPi / 2 + kPi / 4 - spec.angle.radians();
  const double first = theta + kPi / 2;
  double k = std::ceil((x_from - first) / kPi);
  if (first + k * kPi <= x_from) k += 1.0;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(first + (k + static_cast<double>(i)) * kPi);
  }
  return out;
}

}  // namespace cyl
