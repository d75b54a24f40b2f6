#pragma once

#include "fracperiod/grid.hpp"

namespace fracperiod::closedforms {

/// Caputo derivative of sin at t >= 0 through the hypergeometric form
///   t^(1-alpha)/Gamma(2-alpha) * 1F2(1; (3-alpha)/2, 1-alpha/2; -t^2/4).
/// Returns 0 at t = 0. Throws std::runtime_error if the series fails to
/// converge at the requested tolerance.
double caputo_sin_1f2(FracOrder alpha, double t, double tol = 1e-9);

/// The same value through the Mittag-Leffler form
///   (1/2) t^(1-alpha) [E_{1,2-alpha}(it) + E_{1,2-alpha}(-it)].
/// Both series are evaluated in complex arithmetic; the imaginary parts must
/// cancel to 1e-10 (asserted, not assumed).
double caputo_sin_ml(FracOrder alpha, double t, double tol = 1e-9);

/// cD^alpha sin(t0) / cD^alpha sin(t0 + T_tilde). Any value != 1 certifies
/// that cD^alpha sin is not T_tilde-periodic at t0. Throws std::domain_error
/// when |denominator| < 1e-12 (inconclusive at this point).
double nonperiodicity_ratio(FracOrder alpha, double t0, double T_tilde,
                            double tol = 1e-9);

/// Exact fractional integral of t^p:
///   I^alpha t^p = Gamma(p+1)/Gamma(p+1+alpha) t^(p+alpha),  p > -1.
double frac_integral_power(FracOrder alpha, double p, double t);

}  // namespace fracperiod::closedforms
