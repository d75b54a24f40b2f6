#pragma once

#include <complex>
#include <cstddef>

namespace fracperiod::specfun {

/// Outcome of a truncated series evaluation.
template <class T>
struct SeriesSum {
  T value{};
  std::size_t terms_used = 0;
  double tail_bound = 0.0;  // estimated truncation + rounding error
  bool converged = false;   // true implies tail_bound <= requested tol
};

using SeriesResult = SeriesSum<double>;
using ComplexSeriesResult = SeriesSum<std::complex<double>>;

/// Gamma function. Throws std::domain_error at nonpositive integers and
/// std::overflow_error for x beyond the double overflow threshold (~171.62).
/// Relative accuracy is ~1e-15 on [1e-3, 170].
double gamma(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Upper incomplete gamma Gamma(a,z) = int_z^inf s^(a-1) e^(-s) ds,
/// for a > 0, z >= 0.
double upper_incomplete_gamma(double a, double z);

/// e^z * Gamma(a,z); stays representable for large z where Gamma(a,z)
/// underflows and e^z overflows.
double upper_incomplete_gamma_scaled(double a, double z);

struct SeriesOptions {
  std::size_t max_terms = 4000;
};

/// Generalized hypergeometric 1F2(a; b, c; z) =
/// sum_j (a)_j / (j! (b)_j (c)_j) z^j, entire in z.
/// b and c must not be nonpositive integers. If the requested tolerance is
/// not reached within max_terms, the partial sum is returned with
/// converged = false.
SeriesResult hyp1f2(double a, double b, double c, double z, double tol,
                    const SeriesOptions& opts = {});

struct MittagLefflerOptions {
  double radius = 50.0;  // |z| cap for the defining power series
  std::size_t max_terms = 4000;
};

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z) =
/// sum_k z^k / Gamma(alpha k + beta), evaluated by its power series.
/// Requires alpha in (0,1], beta > 0 and |z| <= opts.radius (throws
/// std::domain_error otherwise).
ComplexSeriesResult mittag_leffler(double alpha, double beta,
                                   std::complex<double> z, double tol,
                                   const MittagLefflerOptions& opts = {});

namespace detail {
/// log Gamma in extended precision, x > 0. Used by series code that needs
/// well-scaled Gamma ratios.
long double lgamma_pos(long double x);
}  // namespace detail

}  // namespace fracperiod::specfun
