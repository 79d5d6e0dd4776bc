#pragma once

namespace cyl::detail {

/// J and Y at orders nu and nu + 1.
struct BesselPair {
  double j;
  double j_next;
  double y;
  double y_next;
};

/// Temme's method: continued fraction for J_{nu+1}/J_nu, downward
/// recurrence to a base order mu, then either Temme's series (x < 2) or
/// Steed's complex continued fraction (x >= 2) for Y_mu, normalized through
/// the Wronskian. Y is carried back up by forward recurrence.
///
/// Requires nu >= 0 and 0 < x; no box checks here.
BesselPair bessel_jy(double nu, double x);

/// Same for nu in [-1, 34] including negative orders, via reflection.
BesselPair bessel_jy_any(double nu, double x);

/// Reciprocal gamma at 1 + mu and 1 - mu, plus Temme's auxiliary
/// combinations, for |mu| <= 1/2.
struct TemmeGammas {
  double gam1;   // (1/G(1-mu) - 1/G(1+mu)) / (2 mu)
  double gam2;   // (1/G(1-mu) + 1/G(1+mu)) / 2
  double gampl;  // 1/G(1+mu)
  double gammi;  // 1/G(1-mu)
};
TemmeGammas temme_gammas(double mu);

double sin_pi(double a);
double cos_pi(double a);

}  // namespace cyl::detail
