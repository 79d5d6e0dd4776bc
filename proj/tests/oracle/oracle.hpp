#pragma once

// Arbitrary-precision reference values: power series summed in MPFR with a
// working precision scaled to the cancellation, zeros by bisection.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

namespace oracle {

using Real = boost::multiprecision::mpfr_float;

/// Sets the default MPFR precision for its lifetime.
class Precision {
 public:
  explicit Precision(unsigned digits);
  ~Precision();
  Precision(const Precision&) = delete;
  Precision& operator=(const Precision&) = delete;

 private:
  unsigned saved_;
};

/// Digits needed to sum the series at x without losing the target accuracy.
unsigned digits_for(double x);

Real pi();
Real bessel_j(const Real& nu, const Real& x);
/// Reflection formula for non-integer nu, logarithmic series at integers.
Real bessel_y(const Real& nu, const Real& x);
Real cylinder(const Real& nu, const Real& cos_d, const Real& sin_d, const Real& x);
Real cylinder_prime(const Real& nu, const Real& cos_d, const Real& sin_d, const Real& x);

// Double-in, double-out conveniences; precision picked from x.
double j(double nu, double x);
double y(double nu, double x);
double c(double nu, double delta, double x);
double c_prime(double nu, double delta, double x);

/// First count positive zeros of C (derivative = false) or C', found by a
/// sign scan with step pi/16 from x_start and bisection to 1e-25 relative.
std::vector<double> zeros(double nu, double delta, bool derivative, std::size_t count,
                          double x_start = 1e-3);

}  // namespace oracle
