#include "fracperiod/closedforms.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "fracperiod/specfun.hpp"

namespace fracperiod::closedforms {

namespace {

void require_converged(bool converged, const char* what) {
  if (!converged) {
    throw std::runtime_error(std::string(what) +
                             ": series did not converge at the requested "
                             "tolerance (raise tol or max_terms)");
  }
}

}  // namespace

double caputo_sin_1f2(FracOrder alpha, double t, double tol) {
  if (t < 0.0) throw std::domain_error("caputo_sin_1f2: requires t >= 0");
  if (t == 0.0) return 0.0;  // t^(1-alpha) factor, 1-alpha > 0
  const double a = alpha.value();
  const double prefactor = std::pow(t, 1.0 - a) / specfun::gamma(2.0 - a);
  // the series tolerance is scaled so that `tol` bounds the error of the
  // returned value, not of the bare series sum
  const double series_tol = tol / std::max(1.0, prefactor);
  const auto series = specfun::hyp1f2(1.0, (3.0 - a) / 2.0, 1.0 - a / 2.0,
                                      -t * t / 4.0, series_tol);
  require_converged(series.converged, "caputo_sin_1f2");
  return prefactor * series.value;
}

double caputo_sin_ml(FracOrder alpha, double t, double tol) {
  if (t < 0.0) throw std::domain_error("caputo_sin_ml: requires t >= 0");
  if (t == 0.0) return 0.0;
  const double a = alpha.value();
  const double prefactor = 0.5 * std::pow(t, 1.0 - a);
  const double series_tol = tol / (2.0 * std::max(1.0, prefactor));
  const std::complex<double> it(0.0, t);
  const auto plus = specfun::mittag_leffler(1.0, 2.0 - a, it, series_tol);
  const auto minus = specfun::mittag_leffler(1.0, 2.0 - a, -it, series_tol);
  require_converged(plus.converged && minus.converged, "caputo_sin_ml");
  const std::complex<double> sum = plus.value + minus.value;
  if (std::abs(sum.imag()) > 1e-10) {
    throw std::runtime_error(
        "caputo_sin_ml: imaginary parts failed to cancel (|imag| = " +
        std::to_string(std::abs(sum.imag())) + ")");
  }
  return prefactor * sum.real();
}

double nonperiodicity_ratio(FracOrder alpha, double t0, double T_tilde,
                            double tol) {
  if (!(T_tilde >= 0.0)) {
    throw std::domain_error("nonperiodicity_ratio: requires T_tilde >= 0");
  }
  const double num = caputo_sin_1f2(alpha, t0, tol);
  const double den = caputo_sin_1f2(alpha, t0 + T_tilde, tol);
  if (std::abs(den) < 1e-12) {
    throw std::domain_error(
        "nonperiodicity_ratio: denominator below 1e-12 at t = " +
        std::to_string(t0 + T_tilde) + "; inconclusive at this point");
  }
  return num / den;
}

double frac_integral_power(FracOrder alpha, double p, double t) {
  if (!(p > -1.0)) {
    throw std::domain_error("frac_integral_power: requires p > -1");
  }
  if (t < 0.0) throw std::domain_error("frac_integral_power: requires t >= 0");
  if (t == 0.0) return 0.0;
  const double a = alpha.value();
  const double lg = specfun::log_gamma(p + 1.0) - specfun::log_gamma(p + 1.0 + a);
  return std::exp(lg) * std::pow(t, p + a);
}

}  // namespace fracperiod::closedforms
