#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace cyl {

/// Evaluation box shared by every routine in the library.
///
/// Public orders live in [0, 30]; the internal box is wider because
/// recurrences and derivatives reach C_{nu-1} ... C_{nu+3}.
namespace limits {
inline constexpr double kMaxOrder = 30.0;
inline constexpr double kMinEvalOrder = -1.0;
inline constexpr double kMaxEvalOrder = 34.0;
inline constexpr double kMaxX = 400.0;
}  // namespace limits

/// Order nu of a cylinder function, restricted to [0, 30].
///
/// nu = 0 is accepted because J_0, Y_0 and the J'_0 zero convention are
/// used throughout; operations that need nu > 0 check it themselves.
class Order {
 public:
  explicit Order(double nu);
  double value() const noexcept { return nu_; }
  auto operator<=>(const Order&) const = default;

 private:
  double nu_;
};

/// Mixing angle delta, normalized into [0, pi).
///
/// delta and delta + pi describe the same function up to sign. The sign
/// absorbed by normalization is kept in flip(), so the raw combination
/// cos(d) J - sin(d) Y equals flip() * cylinder(...) for the stored angle.
class MixingAngle {
 public:
  explicit MixingAngle(double delta);

  double radians() const noexcept { return delta_; }
  double cos() const noexcept { return cos_; }
  double sin() const noexcept { return sin_; }
  int flip() const noexcept { return flip_; }

  bool operator==(const MixingAngle& other) const noexcept {
    return delta_ == other.delta_;
  }

 private:
  double delta_;
  double cos_;
  double sin_;
  int flip_;
};

/// C_nu(x; delta) = cos(delta) J_nu(x) - sin(delta) Y_nu(x).
struct CylinderSpec {
  Order order;
  MixingAngle angle;

  bool operator==(const CylinderSpec& other) const noexcept {
    return order == other.order && angle == other.angle;
  }
};

enum class EvalKind { Function, Derivative };

/// Value and slope of the evaluated function (C or C') at one point.
struct Jet {
  double value;
  double slope;
};

inline CylinderSpec first_kind(double nu) { return {Order{nu}, MixingAngle{0.0}}; }

/// C with delta = pi/2, i.e. -Y_nu. Same zeros as Y_nu.
CylinderSpec second_kind(double nu);

/// Gamma function for a > 0 (Lanczos, g = 7, nine terms).
double gamma_real(double a);

/// J_nu(x) for nu in [-1, 34], 0 < x <= 400.
double bessel_j(double nu, double x);

/// Y_nu(x) for nu in [-1, 34], 0 < x <= 400. Negative orders go through
/// the reflection formula and are meant for internal use.
double bessel_y(double nu, double x);

double cylinder(const CylinderSpec& spec, double x);

/// C'_nu = -C_{nu+1} + (nu / x) C_nu.
double cylinder_prime(const CylinderSpec& spec, double x);

/// C_order(x; delta) for a real order in [-1, 34]. Used for the shifted
/// orders appearing in recurrence checks.
double cylinder_at_order(double order, const MixingAngle& angle, double x);

/// Value and slope of C (Function) or C' (Derivative) from a single
/// Bessel evaluation; the second derivative comes from Bessel's equation.
Jet evaluate(const CylinderSpec& spec, EvalKind kind, double x);

/// Sign of C_nu(0+): sgn(sin delta), or +1 when sin delta = 0.
int sign_at_origin(const CylinderSpec& spec);

/// Sign of C'_nu(0+) for the same spec.
int derivative_sign_at_origin(const CylinderSpec& spec);

/// Leading large-x term sqrt(2/(pi x)) cos(x - nu pi/2 - pi/4 + delta).
/// Requires x >= 10 max(1, nu).
double asymptotic_cylinder(const CylinderSpec& spec, double x);

/// First `count` zeros of the leading asymptotic term that lie above x_from.
/// Consecutive entries differ by pi.
std::vector<double> asymptotic_zeros(const CylinderSpec& spec, double x_from,
                                     std::size_t count);

}  // namespace cyl
