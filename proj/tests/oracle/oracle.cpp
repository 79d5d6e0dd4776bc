#include "oracle.hpp"

#include <cmath>
#include <stdexcept>


namespace oracle {

Precision::Precision(unsigned digits) : saved_(Real::default_precision()) {
  Real::default_precision(digits);
}

Precision::~Precision() { Real::default_precision(saved_); }

unsigned digits_for(double x) {
  // The largest series term is about exp(x); keep 40 digits beyond it.
  return 40u + static_cast<unsigned>(std::ceil(0.45 * std::abs(x)));
}

Real pi() { return boost::math::constants::pi<Real>(); }

namespace {

bool is_integer(const Real& nu) { return nu == boost::multiprecision::floor(nu); }

Real epsilon() {
  return boost::multiprecision::pow(Real(10), -static_cast<int>(Real::default_precision()) + 5);
}

// sum_m (-1)^m (x/2)^(2m+nu) / (m! Gamma(m+nu+1)); 1/Gamma vanishes at poles.
Real series_j(const Real& nu, const Real& x) {
  const Real half = x / 2;
  const Real q = -half * half;
  Real sum = 0;
  // First term, handling 1/Gamma at non-positive integers.
  Real term;
  long m0 = 0;
  if (is_integer(nu) && nu < 0) {
    m0 = static_cast<long>(-nu);  // J_{-n} = (-1)^n J_n: start where Gamma is finite
  }
  {
    using boost::multiprecision::pow;
    term = pow(half, 2 * m0 + nu) / boost::multiprecision::tgamma(Real(m0 + 1)) /
           boost::multiprecision::tgamma(Real(m0) + nu + 1);
    if (m0 % 2 == 1) term = -term;
  }
  const Real eps = epsilon();
  for (long m = m0;; ++m) {
    sum += term;
    const Real next_factor = q / (Real(m + 1) * (Real(m + 1) + nu));
    term *= next_factor;
    // After the terms start shrinking the remainder of the alternating series
    // is bounded by the next term.
    if (Real(m) > half && boost::multiprecision::abs(term) <= eps * boost::multiprecision::abs(sum)) {
      break;
    }
    if (m > 100000) throw std::runtime_error("oracle: series did not converge");
  }
  return sum;
}

Real series_y_integer(long n, const Real& x) {
  using boost::multiprecision::tgamma;
  const Real half = x / 2;
  const Real p = pi();
  Real result = 2 / p * series_j(Real(n), x) * boost::multiprecision::log(half);
  Real finite = 0;
  for (long k = 0; k < n; ++k) {
    finite += tgamma(Real(n - k)) / tgamma(Real(k + 1)) *
              boost::multiprecision::pow(half, Real(2 * k - n));
  }
  result -= finite / p;
  const Real q = -half * half;
  Real term = boost::multiprecision::pow(half, Real(n)) / tgamma(Real(n + 1));
  Real sum = 0;
  const Real eps = epsilon();
  // psi(k+1) = -gamma + H_k, psi(n+k+1) = -gamma + H_{n+k}.
  const Real euler = boost::math::constants::euler<Real>();
  Real h_k = 0;
  Real h_nk = 0;
  for (long i = 1; i <= n; ++i) h_nk += Real(1) / i;
  for (long k = 0;; ++k) {
    if (k > 0) {
      h_k += Real(1) / k;
      h_nk += Real(1) / (n + k);
    }
    const Real piece = term * (h_k + h_nk - 2 * euler);
    sum += piece;
    term *= q / (Real(k + 1) * Real(n + k + 1));
    if (Real(k) > half && boost::multiprecision::abs(piece) <= eps * boost::multiprecision::abs(sum)) {
      break;
    }
    if (k > 100000) throw std::runtime_error("oracle: series did not converge");
  }
  return result - sum / p;
}

}  // namespace

Real bessel_j(const Real& nu, const Real& x) { return series_j(nu, x); }

Real bessel_y(const Real& nu, const Real& x) {
  if (is_integer(nu)) {
    const long n = static_cast<long>(nu);
    if (n >= 0) return series_y_integer(n, x);
    return (n % 2 == 0 ? 1 : -1) * series_y_integer(-n, x);
  }
  const Real p = pi();
  const Real s = boost::multiprecision::sin(nu * p);
  return (series_j(nu, x) * boost::multiprecision::cos(nu * p) - series_j(-nu, x)) / s;
}

Real cylinder(const Real& nu, const Real& cos_d, const Real& sin_d, const Real& x) {
  Real v = 0;
  if (cos_d != 0) v += cos_d * bessel_j(nu, x);
  if (sin_d != 0) v -= sin_d * bessel_y(nu, x);
  return v;
}

Real cylinder_prime(const Real& nu, const Real& cos_d, const Real& sin_d, const Real& x) {
  return -cylinder(nu + 1, cos_d, sin_d, x) + nu / x * cylinder(nu, cos_d, sin_d, x);
}

namespace {

struct Angle {
  Real cos_d;
  Real sin_d;
};

// Exact 0 and pi/2 give exact cos/sin, as in the library.
Angle angle(double delta) {
  const double half_pi = 1.5707963267948966;
  if (delta == 0.0) return {Real(1), Real(0)};
  if (delta == half_pi) return {Real(0), Real(1)};
  const Real d(delta);
  return {boost::multiprecision::cos(d), boost::multiprecision::sin(d)};
}

}  // namespace

double j(double nu, double x) {
  Precision p(digits_for(x));
  return bessel_j(Real(nu), Real(x)).convert_to<double>();
}

double y(double nu, double x) {
  Precision p(digits_for(x));
  return bessel_y(Real(nu), Real(x)).convert_to<double>();
}

double c(double nu, double delta, double x) {
  Precision p(digits_for(x));
  const Angle a = angle(delta);
  return cylinder(Real(nu), a.cos_d, a.sin_d, Real(x)).convert_to<double>();
}

double c_prime(double nu, double delta, double x) {
  Precision p(digits_for(x));
  const Angle a = angle(delta);
  return cylinder_prime(Real(nu), a.cos_d, a.sin_d, Real(x)).convert_to<double>();
}

std::vector<double> zeros(double nu, double delta, bool derivative, std::size_t count,
                          double x_start) {
  const double step = 3.141592653589793 / 16;
  std::vector<double> out;
  double lo = x_start;
  auto f = [&](const Real& x) {
    const Angle a = angle(delta);
    return derivative ? cylinder_prime(Real(nu), a.cos_d, a.sin_d, x)
                      : cylinder(Real(nu), a.cos_d, a.sin_d, x);
  };
  while (out.size() < count) {
    const double hi = lo + step;
    Precision p(digits_for(hi));
    Real a(lo);
    Real b(hi);
    Real fa = f(a);
    const Real fb = f(b);
    if ((fa < 0) != (fb < 0)) {
      for (int it = 0; it < 200 && (b - a) > Real("1e-25") * b; ++it) {
        const Real mid = (a + b) / 2;
        const Real fm = f(mid);
        if ((fm < 0) == (fa < 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      out.push_back(((a + b) / 2).convert_to<double>());
    }
    lo = hi;
    if (lo > 400.0) throw std::runtime_error("oracle: zero search left the box");
  }
  return out;
}

}  // namespace oracle
