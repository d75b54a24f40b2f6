#include "fracperiod/fracops.hpp"

#include <cmath>
#include <limits>

#include "fracperiod/specfun.hpp"

namespace fracperiod::fracops {

namespace {

// m^p for integer m in long double; the interior weights are second
// differences that cancel catastrophically in double for large m.
inline long double powi(std::size_t m, long double p) {
  return powl(static_cast<long double>(m), p);
}

}  // namespace

std::vector<double> pi_interior_weights(std::size_t count, double alpha) {
  const long double p = static_cast<long double>(alpha) + 1.0L;
  std::vector<double> w(count);
  long double prev = 0.0L;                 // (m-1)^p at m=1
  long double cur = 1.0L;                  // m^p at m=1
  for (std::size_t m = 1; m <= count; ++m) {
    const long double next = powi(m + 1, p);
    w[m - 1] = static_cast<double>(next - 2.0L * cur + prev);
    prev = cur;
    cur = next;
  }
  return w;
}

double pi_left_weight(std::size_t n, double alpha) {
  const long double a = static_cast<long double>(alpha);
  const long double nn = static_cast<long double>(n);
  return static_cast<double>(powi(n - 1, a + 1.0L) -
                             powl(nn, a) * (nn - a - 1.0L));
}

std::vector<double> predictor_weights(std::size_t count, double alpha) {
  const long double a = static_cast<long double>(alpha);
  std::vector<double> w(count);
  long double prev = 0.0L;
  for (std::size_t m = 1; m <= count; ++m) {
    const long double cur = powi(m, a);
    w[m - 1] = static_cast<double>(cur - prev);
    prev = cur;
  }
  return w;
}

std::vector<double> l1_weights(std::size_t count, double alpha) {
  const long double p = 1.0L - static_cast<long double>(alpha);
  std::vector<double> w(count);
  long double prev = 0.0L;
  for (std::size_t m = 0; m < count; ++m) {
    const long double cur = powi(m + 1, p);
    w[m] = static_cast<double>(cur - prev);
    prev = cur;
  }
  return w;
}

GridFunction frac_integral(const GridFunction& f, FracOrder alpha) {
  validate(f);
  const double a = alpha.value();
  const std::size_t n = f.grid.n;
  const double h = f.grid.step();
  const double scale = std::pow(h, a) / specfun::gamma(a + 2.0);
  const std::vector<double> b = pi_interior_weights(n, a);
  const std::vector<double>& v = f.values;

  GridFunction out{f.grid, std::vector<double>(n + 1, 0.0)};
  for (std::size_t k = 1; k <= n; ++k) {
    double sum = pi_left_weight(k, a) * v[0] + v[k];
    for (std::size_t m = 1; m < k; ++m) {
      sum += b[m - 1] * v[k - m];
    }
    out.values[k] = scale * sum;
  }
  return out;
}

GridFunction caputo_derivative(const GridFunction& f, FracOrder alpha) {
  validate(f);
  const double a = alpha.value();
  const std::size_t n = f.grid.n;
  const double h = f.grid.step();
  const double scale = std::pow(h, -a) / specfun::gamma(2.0 - a);
  const std::vector<double> w = l1_weights(n, a);
  const std::vector<double>& v = f.values;

  GridFunction out{f.grid, std::vector<double>(n + 1, 0.0)};
  for (std::size_t k = 1; k <= n; ++k) {
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      sum += w[k - 1 - j] * (v[j + 1] - v[j]);
    }
    out.values[k] = scale * sum;
  }
  return out;
}

RlDerivative rl_derivative(const GridFunction& f, FracOrder alpha) {
  const double a = alpha.value();
  GridFunction d = caputo_derivative(f, alpha);
  const double f0 = f.values[0];
  if (f0 == 0.0) {
    return RlDerivative{std::move(d), false};
  }
  const double c = f0 / specfun::gamma(1.0 - a);
  for (std::size_t k = 1; k < d.values.size(); ++k) {
    d.values[k] += c * std::pow(f.grid.node(k), -a);
  }
  d.values[0] = std::numeric_limits<double>::quiet_NaN();
  return RlDerivative{std::move(d), true};
}

double compose_check(const GridFunction& f, FracOrder alpha) {
  const GridFunction d = caputo_derivative(f, alpha);
  const GridFunction r = frac_integral(d, alpha);
  const double f0 = f.values[0];
  double m = 0.0;
  for (std::size_t k = 1; k < r.values.size(); ++k) {
    m = std::max(m, std::abs(r.values[k] - (f.values[k] - f0)));
  }
  return m;
}

}  // namespace fracperiod::fracops
