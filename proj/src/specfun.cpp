#include "fracperiod/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fracperiod::specfun {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kHalfLogTwoPi =
    0.91893853320467274178032973640561764L;  // ln(2*pi)/2
constexpr double kGammaOverflowX = 171.62437695630272;

// Lanczos g=7, 9 coefficients. Evaluated in long double this is good to
// ~4e-15 relative up to x ~ 16; beyond that the Stirling branch takes over.
constexpr long double kLanczos[9] = {
    0.99999999999980993L,     676.5203681218851L, -1259.1392167224028L,
    771.32342877765313L,      -176.61502916214059L, 12.507343278686905L,
    -0.13857109526572012L,    9.9843695780195716e-6L,
    1.5056327351493116e-7L};

long double lanczos_sum(long double xm1) {
  long double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (xm1 + static_cast<long double>(i));
  return a;
}

// Stirling series for ln Gamma, x >= 16: truncation error far below 1e-18.
long double stirling_lgamma(long double x) {
  static const long double c[10] = {
      1.0L / 12.0L,           -1.0L / 360.0L,        1.0L / 1260.0L,
      -1.0L / 1680.0L,        1.0L / 1188.0L,        -691.0L / 360360.0L,
      1.0L / 156.0L,          -3617.0L / 122400.0L,  43867.0L / 244188.0L,
      -174611.0L / 125400.0L};
  const long double z = 1.0L / (x * x);
  long double s = 0.0L, p = 1.0L / x;
  for (int i = 0; i < 10; ++i) {
    s += c[i] * p;
    p *= z;
  }
  return (x - 0.5L) * logl(x) - x + kHalfLogTwoPi + s;
}

long double gamma_positive(long double x) {
  if (x >= 16.0L) return expl(stirling_lgamma(x));
  // shift into [0.5, 16) where the Lanczos form is accurate
  long double scale = 1.0L;
  while (x < 0.5L) {
    scale /= x;
    x += 1.0L;
  }
  const long double xm1 = x - 1.0L;
  const long double t = xm1 + 7.5L;
  return scale * sqrtl(2.0L * kPi) * powl(t, xm1 + 0.5L) * expl(-t) *
         lanczos_sum(xm1);
}

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// Regularized lower incomplete gamma P(a,z) by series, z < a+1.
double lower_regularized_series(double a, double z) {
  double ap = a;
  double sum = 1.0 / a;
  double term = sum;
  for (int k = 0; k < 1000; ++k) {
    ap += 1.0;
    term *= z / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) break;
  }
  return sum * std::exp(-z + a * std::log(z) - log_gamma(a));
}

// Continued fraction K(a,z) with Gamma(a,z) = e^(-z) z^a K(a,z), z >= a+1.
// Modified Lentz.
double upper_cf(double a, double z) {
  const double tiny = 1e-300;
  double b = z + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return h;
}

}  // namespace

double gamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw std::domain_error("gamma: pole at nonpositive integer x = " +
                            std::to_string(x));
  }
  if (x > kGammaOverflowX) {
    throw std::overflow_error("gamma: overflow for x = " + std::to_string(x));
  }
  if (x > 0.0) {
    return static_cast<double>(gamma_positive(static_cast<long double>(x)));
  }
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  const long double lx = static_cast<long double>(x);
  const long double s = sinl(kPi * lx);
  return static_cast<double>(kPi / (s * gamma_positive(1.0L - lx)));
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: requires x > 0");
  }
  return static_cast<double>(detail::lgamma_pos(static_cast<long double>(x)));
}

long double detail::lgamma_pos(long double x) {
  // Shift into the Stirling regime: lgamma(x) = lgamma(x+m) - sum log(x+i).
  // Keeps the absolute error at a few ulps, which matters because series
  // code exponentiates lgamma differences.
  long double shift = 0.0L;
  while (x < 16.0L) {
    shift += logl(x);
    x += 1.0L;
  }
  return stirling_lgamma(x) - shift;
}

double upper_incomplete_gamma(double a, double z) {
  if (!(a > 0.0)) {
    throw std::domain_error("upper_incomplete_gamma: requires a > 0");
  }
  if (z < 0.0) {
    throw std::domain_error("upper_incomplete_gamma: requires z >= 0");
  }
  if (z == 0.0) return gamma(a);
  if (z < a + 1.0) {
    return gamma(a) * (1.0 - lower_regularized_series(a, z));
  }
  return std::exp(-z + a * std::log(z)) * upper_cf(a, z);
}

double upper_incomplete_gamma_scaled(double a, double z) {
  if (!(a > 0.0)) {
    throw std::domain_error("upper_incomplete_gamma_scaled: requires a > 0");
  }
  if (z < 0.0) {
    throw std::domain_error("upper_incomplete_gamma_scaled: requires z >= 0");
  }
  if (z == 0.0) return gamma(a);
  if (z < a + 1.0) {
    // e^z stays small here (z < a+1)
    return std::exp(z) * gamma(a) * (1.0 - lower_regularized_series(a, z));
  }
  return std::exp(a * std::log(z)) * upper_cf(a, z);
}

SeriesResult hyp1f2(double a, double b, double c, double z, double tol,
                    const SeriesOptions& opts) {
  if (is_nonpositive_integer(b) || is_nonpositive_integer(c)) {
    throw std::domain_error("hyp1f2: b and c must not be nonpositive integers");
  }
  if (!(tol > 0.0)) {
    throw std::domain_error("hyp1f2: tol must be positive");
  }
  const long double eps = 5.4e-20L;  // 80-bit significand
  const long double lz = static_cast<long double>(z);
  long double term = 1.0L;  // j = 0
  long double sum = 0.0L, comp = 0.0L, abs_sum = 0.0L;
  SeriesResult out;
  for (std::size_t j = 0;; ++j) {
    // Kahan step
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    abs_sum += fabsl(term);
    out.terms_used = j + 1;

    const long double jj = static_cast<long double>(j);
    const long double next =
        term * (static_cast<long double>(a) + jj) /
        ((jj + 1.0L) * (static_cast<long double>(b) + jj) *
         (static_cast<long double>(c) + jj)) *
        lz;
    const long double ratio = term == 0.0L ? 0.0L : fabsl(next / term);
    const double rounding = static_cast<double>(2.0L * eps * abs_sum);
    if (ratio <= 0.5L) {
      const double tail = static_cast<double>(fabsl(next) / (1.0L - ratio));
      // no point iterating below the accumulated rounding floor
      if (tail <= std::max(tol, rounding)) {
        out.tail_bound = std::max(tail, rounding);
        out.converged = out.tail_bound <= tol;
        break;
      }
    }
    if (j + 1 >= opts.max_terms) {
      out.tail_bound = std::max(static_cast<double>(fabsl(next)), rounding);
      out.converged = false;
      break;
    }
    term = next;
  }
  out.value = static_cast<double>(sum);
  return out;
}

ComplexSeriesResult mittag_leffler(double alpha, double beta,
                                   std::complex<double> z, double tol,
                                   const MittagLefflerOptions& opts) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("mittag_leffler: requires alpha in (0,1]");
  }
  if (!(beta > 0.0)) {
    throw std::domain_error("mittag_leffler: requires beta > 0");
  }
  if (!(tol > 0.0)) {
    throw std::domain_error("mittag_leffler: tol must be positive");
  }
  if (std::abs(z) > opts.radius) {
    throw std::domain_error(
        "mittag_leffler: |z| = " + std::to_string(std::abs(z)) +
        " exceeds the series radius cap " + std::to_string(opts.radius));
  }
  using CL = std::complex<long double>;
  const long double eps = 5.4e-20L;
  const CL lz(static_cast<long double>(z.real()),
              static_cast<long double>(z.imag()));
  const long double la = static_cast<long double>(alpha);
  const long double lb = static_cast<long double>(beta);

  CL term = expl(-detail::lgamma_pos(lb));  // k = 0: 1/Gamma(beta)
  CL sum(0.0L, 0.0L), comp(0.0L, 0.0L);
  long double abs_sum = 0.0L;
  long double lg_cur = detail::lgamma_pos(lb);
  ComplexSeriesResult out;
  for (std::size_t k = 0;; ++k) {
    const CL y = term - comp;
    const CL t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    abs_sum += hypotl(term.real(), term.imag());
    out.terms_used = k + 1;

    const long double lg_next =
        detail::lgamma_pos(la * static_cast<long double>(k + 1) + lb);
    const CL next = term * lz * expl(lg_cur - lg_next);
    const long double mag_term = hypotl(term.real(), term.imag());
    const long double mag_next = hypotl(next.real(), next.imag());
    const long double ratio = mag_term == 0.0L ? 0.0L : mag_next / mag_term;
    const double rounding = static_cast<double>(2.0L * eps * abs_sum);
    if (ratio <= 0.5L) {
      const double tail = static_cast<double>(mag_next / (1.0L - ratio));
      if (tail <= std::max(tol, rounding)) {
        out.tail_bound = std::max(tail, rounding);
        out.converged = out.tail_bound <= tol;
        break;
      }
    }
    if (k + 1 >= opts.max_terms) {
      out.tail_bound = std::max(static_cast<double>(mag_next), rounding);
      out.converged = false;
      break;
    }
    term = next;
    lg_cur = lg_next;
  }
  out.value = std::complex<double>(static_cast<double>(sum.real()),
                                   static_cast<double>(sum.imag()));
  return out;
}

}  // namespace fracperiod::specfun
