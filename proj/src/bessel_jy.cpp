#include "bessel_jy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <tuple>
#include <utility>

#include "cyl/errors.hpp"

namespace cyl::detail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;
constexpr double kRescale = 1e200;

// Taylor coefficients of 1/Gamma(z) about 0: 1/Gamma(z) = sum_k c_k z^k,
// starting at k = 1.
constexpr std::array<double, 26> kRecipGamma = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
};

struct RatioCf1 {
  double ratio;  // J_{nu+1}(x) / J_nu(x)
  int sign;      // sign of J_nu(x)
};

// J_{nu+1}/J_nu = 1/(b_1 - 1/(b_2 - ...)), b_k = 2(nu+k)/x, by modified
// Lentz. The denominators D_k multiply to 1/B_N where B_N is the continuant;
// for N past the turning point B_N has the sign of J_nu.
RatioCf1 ratio_cf1(double nu, double x) {
  double f = kTiny;
  double c = f;
  double d = 0.0;
  int sign = 1;
  for (int k = 1; k <= kMaxIter; ++k) {
    const double b = 2.0 * (nu + k) / x;
    const double a = k == 1 ? 1.0 : -1.0;
    d = b + a * d;
    if (d == 0.0) d = kTiny;
    c = b + a / c;
    if (c == 0.0) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (d < 0.0) sign = -sign;
    if (std::abs(delta - 1.0) < kEps) return {f, sign};
  }
  throw ConvergenceError("bessel: ratio continued fraction did not converge");
}

// Temme's series for Y_mu and Y_{mu+1}, |mu| <= 1/2, 0 < x < 2.
std::pair<double, double> temme_series(double mu, double x) {
  const double half_x = 0.5 * x;
  const double log_2_over_x = -std::log(half_x);
  const double sigma = mu * log_2_over_x;
  const double pi_mu = kPi * mu;
  const double pi_mu_over_sin = pi_mu == 0.0 ? 1.0 : pi_mu / std::sin(pi_mu);
  const double sinhc = sigma == 0.0 ? 1.0 : std::sinh(sigma) / sigma;
  const TemmeGammas g = temme_gammas(mu);

  double f = (2.0 / kPi) * pi_mu_over_sin *
             (g.gam1 * std::cosh(sigma) + g.gam2 * sinhc * log_2_over_x);
  const double e = std::exp(sigma);
  double p = e / (g.gampl * kPi);
  double q = 1.0 / (e * kPi * g.gammi);
  const double half_pi_mu = 0.5 * pi_mu;
  const double sinc = half_pi_mu == 0.0 ? 1.0 : std::sin(half_pi_mu) / half_pi_mu;
  const double r = kPi * half_pi_mu * sinc * sinc;  // (2/mu) sin^2(mu pi / 2)

  const double minus_quarter_x2 = -half_x * half_x;
  double c = 1.0;
  double sum = f + r * q;
  double sum1 = p;
  for (int k = 1; k <= kMaxIter; ++k) {
    const double kd = k;
    f = (kd * f + p + q) / (kd * kd - mu * mu);
    c *= minus_quarter_x2 / kd;
    p /= kd - mu;
    q /= kd + mu;
    const double del = c * (f + r * q);
    sum += del;
    sum1 += c * p - kd * del;
    if (std::abs(del) < (1.0 + std::abs(sum)) * kEps) {
      return {-sum, -sum1 * 2.0 / x};
    }
  }
  throw ConvergenceError("bessel: Temme series did not converge");
}

// Steed's continued fraction for p + i q = (J' + iY') / (J + iY) at order
// mu, valid for x >= 2.
std::complex<double> steed_cf2(double mu, double x) {
  using cplx = std::complex<double>;
  const cplx i{0.0, 1.0};
  const double a1 = 0.25 - mu * mu;
  cplx tail{0.0, 0.0};
  if (a1 != 0.0) {
    cplx f = kTiny;
    cplx c = f;
    cplx d = 0.0;
    bool converged = false;
    for (int k = 1; k <= kMaxIter; ++k) {
      const double a = (k - 0.5) * (k - 0.5) - mu * mu;
      const cplx b{2.0 * x, 2.0 * k};
      d = b + a * d;
      if (std::abs(d) == 0.0) d = kTiny;
      c = b + a / c;
      if (std::abs(c) == 0.0) c = kTiny;
      d = 1.0 / d;
      const cplx delta = c * d;
      f *= delta;
      if (std::abs(delta - 1.0) < kEps) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw ConvergenceError("bessel: Steed continued fraction did not converge");
    }
    tail = f;
  }
  return cplx{-0.5 / x, 1.0} + (i / x) * tail;
}

}  // namespace

double sin_pi(double a) {
  const double r = std::remainder(a, 2.0);  // in [-1, 1]
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(kPi * r);
}

double cos_pi(double a) {
  const double r = std::remainder(a, 2.0);
  if (std::abs(r) == 0.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (std::abs(r) == 1.0) return -1.0;
  return std::cos(kPi * r);
}

TemmeGammas temme_gammas(double mu) {
  // gam1 = -sum_{k even} c_k mu^{k-2}, gam2 = sum_{k odd} c_k mu^{k-1}
  // with k the 1-based index into kRecipGamma.
  const double mu2 = mu * mu;
  double gam1 = 0.0;
  double gam2 = 0.0;
  for (int k = static_cast<int>(kRecipGamma.size()); k >= 1; --k) {
    if (k % 2 == 0) {
      gam1 = gam1 * mu2 + kRecipGamma[k - 1];
    } else {
      gam2 = gam2 * mu2 + kRecipGamma[k - 1];
    }
  }
  gam1 = -gam1;
  return {gam1, gam2, gam2 - mu * gam1, gam2 + mu * gam1};
}

BesselPair bessel_jy(double nu, double x) {
  const int shift = x < 2.0 ? static_cast<int>(nu + 0.5)
                            : std::max(0, static_cast<int>(nu - x + 1.5));
  const double mu = nu - shift;
  const auto [ratio, sign] = ratio_cf1(nu, x);

  // Unnormalized J and J' carried from nu down to mu.
  double jl = sign;
  double jpl = (nu / x - ratio) * jl;
  const double j_top = jl;
  int rescales = 0;
  double order = nu;
  for (int i = 0; i < shift; ++i) {
    const double j_lower = (order / x) * jl + jpl;
    order -= 1.0;
    jpl = (order / x) * j_lower - jl;
    jl = j_lower;
    if (std::abs(jl) > kRescale) {
      jl /= kRescale;
      jpl /= kRescale;
      ++rescales;
    }
  }

  const double wronskian = 2.0 / (kPi * x);
  double scale = 0.0;
  double y_mu = 0.0;
  double y_mu_next = 0.0;
  if (x < 2.0) {
    std::tie(y_mu, y_mu_next) = temme_series(mu, x);
    const double y_mu_prime = (mu / x) * y_mu - y_mu_next;
    scale = wronskian / (jl * y_mu_prime - jpl * y_mu);
  } else {
    const std::complex<double> pq = steed_cf2(mu, x);
    const double p = pq.real();
    const double q = pq.imag();
    // J' = pJ - qY and q (J^2 + Y^2) = W fix Y and the scale.
    const double y_unscaled = (p * jl - jpl) / q;
    scale = std::sqrt(wronskian / q / (jl * jl + y_unscaled * y_unscaled));
    y_mu = scale * y_unscaled;
    const double y_mu_prime = p * y_mu + q * scale * jl;
    y_mu_next = (mu / x) * y_mu - y_mu_prime;
  }

  double j_nu = scale * j_top;
  for (int i = 0; i < rescales; ++i) j_nu /= kRescale;

  double y0 = y_mu;
  double y1 = y_mu_next;
  for (int i = 0; i < shift; ++i) {
    const double y2 = (2.0 * (mu + i + 1) / x) * y1 - y0;
    y0 = y1;
    y1 = y2;
  }
  return {j_nu, ratio * j_nu, y0, y1};
}

BesselPair bessel_jy_any(double nu, double x) {
  if (nu >= 0.0) return bessel_jy(nu, x);
  // nu in [-1, 0): reflect a = -nu, and take order nu + 1 >= 0 directly.
  const double a = -nu;
  const BesselPair pos = bessel_jy(a, x);
  const double c = cos_pi(a);
  const double s = sin_pi(a);
  const BesselPair up = bessel_jy(nu + 1.0, x);
  return {c * pos.j - s * pos.y, up.j, s * pos.j + c * pos.y, up.y};
}

}  // namespace cyl::detail
