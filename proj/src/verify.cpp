#include "fracperiod/verify.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

#include "fracperiod/closedforms.hpp"
#include "fracperiod/fodesolve.hpp"
#include "fracperiod/fracops.hpp"
#include "fracperiod/grid.hpp"
#include "fracperiod/laplace.hpp"
#include "fracperiod/periodicity.hpp"
#include "fracperiod/quadrature.hpp"
#include "fracperiod/specfun.hpp"

namespace fracperiod::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

periodicity::PeriodicSignal sin_signal() {
  return periodicity::PeriodicSignal(
      [](double t) { return std::sin(t); }, kTwoPi, "sin");
}

// Composite Simpson on [a,b] with 2*half panels; reference path independent
// of the adaptive Gauss-Kronrod engine.
double simpson(const std::function<double(double)>& f, double a, double b,
               std::size_t half) {
  const std::size_t n = 2 * half;
  const double h = (b - a) / static_cast<double>(n);
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < n; ++i) {
    sum += f(a + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

CriterionResult representation_equality() {
  double worst = 0.0;
  for (double a : {0.25, 0.5, 0.75}) {
    FracOrder alpha(a);
    for (int i = 1; i <= 200; ++i) {
      const double t = 0.1 * i;
      const double d = std::abs(closedforms::caputo_sin_1f2(alpha, t, 3e-10) -
                                closedforms::caputo_sin_ml(alpha, t, 3e-10));
      worst = std::max(worst, d);
    }
  }
  return {1, "representation-equality", worst <= 1e-9,
          "max |1F2 - ML| = " + fmt(worst) + " (tol 1e-9)"};
}

CriterionResult composition_identities() {
  const UniformGrid grid(20.0, 20000);
  const GridFunction f =
      GridFunction::sample(grid, [](double t) { return std::sin(t); });
  const FracOrder alpha(0.5);

  const double r1 = fracops::compose_check(f, alpha);

  const GridFunction g = fracops::frac_integral(f, alpha);
  const fracops::RlDerivative rl = fracops::rl_derivative(g, alpha);
  double r2 = 0.0;
  for (std::size_t k = 1; k < f.values.size(); ++k) {
    r2 = std::max(r2, std::abs(rl.derivative.values[k] - f.values[k]));
  }
  const bool ok = r1 <= 5e-3 && r2 <= 5e-3 && !rl.singular_at_origin;
  return {2, "composition-identities", ok,
          "||I^a cD^a f - (f-f0)|| = " + fmt(r1) +
              ", ||D^a I^a f - f|| = " + fmt(r2) + " (tol 5e-3)"};
}

CriterionResult semigroup() {
  const UniformGrid grid(10.0, 10000);
  const GridFunction f =
      GridFunction::sample(grid, [](double t) { return std::sin(t); });
  const GridFunction lhs =
      fracops::frac_integral(fracops::frac_integral(f, FracOrder(0.4)),
                             FracOrder(0.3));
  const GridFunction rhs = fracops::frac_integral(f, FracOrder(0.7));
  const double r = max_abs_diff(lhs, rhs);
  return {3, "semigroup-identity", r <= 1e-3,
          "||I^0.3 I^0.4 sin - I^0.7 sin|| = " + fmt(r) + " (tol 1e-3)"};
}

CriterionResult kernel_moment_dual_route() {
  const auto f = sin_signal();
  const FracOrder alpha(0.5);
  const double v_adaptive = periodicity::kernel_moment(f, alpha, 1);
  // independent path: composite Simpson on the substituted smooth integrand
  // int_0^T (T-s)^(-1/2) sin s ds = 2 int_0^sqrt(T) sin(T - u^2) du
  const double v_composite =
      2.0 * simpson([&](double u) { return std::sin(kTwoPi - u * u); }, 0.0,
                    std::sqrt(kTwoPi), 1 << 15);
  const double gap = std::abs(v_adaptive - v_composite);
  const bool ok = gap <= 1e-8 && std::abs(v_adaptive) > 0.1;
  return {4, "kernel-moment-dual-route", ok,
          "V1 = " + fmt(v_adaptive) + ", route gap = " + fmt(gap) +
              " (tol 1e-8), |V1| > 0.1"};
}

CriterionResult psi_sandwich() {
  const auto f = sin_signal();
  const FracOrder alpha(0.5);
  bool ok = true;
  std::string where;
  for (double t : {0.0, 1.0, 10.0, 100.0, 1e4}) {
    const double psi = periodicity::psi_integral(f, alpha, t);
    const auto bound = periodicity::psi_bound(f, alpha, t);
    if (!(bound.lo <= psi && psi <= bound.hi)) {
      ok = false;
      where += " t=" + fmt(t);
    }
  }
  const double psi_far = std::abs(periodicity::psi_integral(f, alpha, 1e4));
  const auto bound_far = periodicity::psi_bound(f, alpha, 1e4);
  ok = ok && psi_far <= bound_far.hi && bound_far.hi <= 0.07;
  return {5, "psi-sandwich-decay", ok,
          "|psi(1e4)| = " + fmt(psi_far) + " <= " + fmt(bound_far.hi) +
              " <= 0.07" + (where.empty() ? "" : "; outside at" + where)};
}

CriterionResult laplace_closed_form() {
  double worst = 0.0;
  double min_value = std::numeric_limits<double>::infinity();
  for (double a : {0.25, 0.5, 0.75}) {
    const FracOrder alpha(a);
    for (double s : {0.5, 1.0, 2.0, 5.0}) {
      const double closed = laplace::varphi_transform_closed(alpha, kTwoPi, s);
      const double horizon = 50.0 / s;
      const double numeric = laplace::laplace_numeric(
          [&](double t) { return std::pow(kTwoPi + t, a); }, horizon, s,
          laplace::PowerLawTail{1.0, kTwoPi, a});
      worst = std::max(worst, std::abs(closed - numeric));
      min_value = std::min(min_value, closed);
    }
  }
  const bool ok = worst <= 1e-6 && min_value > 0.0;
  return {6, "laplace-closed-form", ok,
          "max |numeric - closed| = " + fmt(worst) +
              " (tol 1e-6), min closed = " + fmt(min_value) + " > 0"};
}

CriterionResult ratio_limit() {
  const double lambda = 1e-8;
  const double r1 = laplace::ratio_limit_check(kTwoPi, kPi, {lambda})[0];
  const double r2 = laplace::ratio_limit_check(1.0, 3.0, {lambda})[0];
  const double d1 = std::abs(r1 - 2.0);
  const double d2 = std::abs(r2 - 1.0 / 3.0);
  const bool ok = d1 <= 1e-6 && d2 <= 1e-6;
  return {7, "ratio-limit", ok,
          "|ratio - T/T~| = " + fmt(d1) + ", " + fmt(d2) + " (tol 1e-6)"};
}

CriterionResult moment_certificate() {
  const auto moments = periodicity::moment_sequence(sin_signal(), 1);
  const double m0 = std::abs(moments[0]);
  const double m1_err = std::abs(moments[1] + kTwoPi);
  const bool ok = m0 <= 1e-10 && m1_err <= 1e-8;
  return {8, "moment-certificate", ok,
          "|m0| = " + fmt(m0) + " (tol 1e-10), |m1 + 2pi| = " + fmt(m1_err) +
              " (tol 1e-8)"};
}

CriterionResult nonperiodicity_ratios() {
  const FracOrder alpha(0.5);
  const double r1 = closedforms::nonperiodicity_ratio(alpha, kPi, kTwoPi, 1e-12);
  const double r2 = closedforms::nonperiodicity_ratio(alpha, kPi / 2, kTwoPi, 1e-12);
  // margins fixed by the 50-digit series oracle:
  //   r1 = 1.0439167108008536899 (margin 0.0439167108)
  //   r2 = 0.89187179827985508063 (margin 0.1081282017)
  const bool pinned = std::abs(r1 - 1.0439167108008536899) <= 1e-9 &&
                      std::abs(r2 - 0.89187179827985508063) <= 1e-9;
  const bool margins = std::abs(r1 - 1.0) > 0.0439 && std::abs(r2 - 1.0) > 0.05;
  return {9, "nonperiodicity-ratios", pinned && margins,
          "|r(pi) - 1| = " + fmt(std::abs(r1 - 1.0)) +
              " (> 0.0439, oracle-fixed), |r(pi/2) - 1| = " +
              fmt(std::abs(r2 - 1.0)) + " (> 0.05)"};
}

// forcing for the non-autonomous problem with exact solution sin(t)
std::function<double(double, double)> forced_sine_rhs(FracOrder alpha) {
  struct Cache {
    double t = std::numeric_limits<double>::quiet_NaN();
    double forcing = 0.0;
  };
  auto cache = std::make_shared<Cache>();
  return [alpha, cache](double t, double u) {
    if (t != cache->t) {
      cache->t = t;
      cache->forcing = closedforms::caputo_sin_1f2(alpha, t) - std::sin(t);
    }
    return u + cache->forcing;
  };
}

CriterionResult solver_exactness() {
  const FracOrder alpha(0.5);
  const auto rhs = forced_sine_rhs(alpha);

  auto solve_on = [&](std::size_t n) {
    const UniformGrid grid(4.0 * kPi, n);
    return fodesolve::solve_caputo(rhs, alpha, 0.0, grid);
  };
  auto max_err = [](const fodesolve::SolveResult& r) {
    double err = 0.0;
    for (std::size_t k = 0; k < r.trajectory.values.size(); ++k) {
      err = std::max(err, std::abs(r.trajectory.values[k] -
                                   std::sin(r.trajectory.grid.node(k))));
    }
    return err;
  };

  const auto result = solve_on(4096);
  const double e_coarse = max_err(result);
  const double e_fine = max_err(solve_on(8192));
  const double defect =
      periodicity::defect(result.trajectory, kTwoPi).sup_defect;
  const bool ok =
      e_coarse <= 1e-2 && e_coarse / e_fine >= 2.0 && defect <= 2e-2;
  std::string detail =
      "max |u - sin| = " + fmt(e_coarse) + " (tol 1e-2), h-halving gain = " +
      fmt(e_coarse / e_fine) + " (>= 2), defect(2pi) = " + fmt(defect) +
      " (tol 2e-2)";
  if (!ok) {
    detail +=
        "; NOTE: perturbations of this equation grow like E_0.5(sqrt(t)) ~ "
        "2e^t, a factor ~5.7e5 over [0,4pi], so no scheme of this order can "
        "reach the tolerance on the pinned grid (see README)";
  }
  return {10, "solver-exactness", ok, detail};
}

CriterionResult decay_certificate() {
  const FracOrder alpha(0.5);
  auto rhs = [](double, double u) { return -u; };
  const UniformGrid grid(10.0, 4096);
  const auto result = fodesolve::solve_caputo(rhs, alpha, 1.0, grid);

  // E_{1/2}(-sqrt(t)) = e^t erfc(sqrt(t)), an oracle independent of the
  // series evaluator
  double err = 0.0;
  for (std::size_t k = 0; k < result.trajectory.values.size(); ++k) {
    const double t = grid.node(k);
    const double exact = std::exp(t) * std::erfc(std::sqrt(t));
    err = std::max(err, std::abs(result.trajectory.values[k] - exact));
  }

  const auto scan = fodesolve::nonperiodicity_certificate(result, 0.5, 5.0, 200);
  const double min_defect = scan.front().sup_defect;

  // equilibrium initial data: identically zero defects
  const auto zero = fodesolve::solve_caputo(rhs, alpha, 0.0, grid);
  const auto zero_scan =
      fodesolve::nonperiodicity_certificate(zero, 0.5, 5.0, 200);
  const double zero_max = zero_scan.back().sup_defect;

  const bool ok = err <= 1e-3 && min_defect > 0.05 && zero_max == 0.0 &&
                  fodesolve::equilibrium_check([](double u) { return -u; }, 0.0);
  return {11, "decay-certificate", ok,
          "max |u - E_0.5(-sqrt(t))| = " + fmt(err) +
              " (tol 1e-3), min sup_defect = " + fmt(min_defect) +
              " (> 0.05), equilibrium max defect = " + fmt(zero_max)};
}

CriterionResult defect_sanity() {
  const UniformGrid grid(8.0 * kPi, 8192);
  const GridFunction g =
      GridFunction::sample(grid, [](double t) { return std::sin(t); });
  const double at_period = periodicity::defect(g, kTwoPi).sup_defect;
  const auto scan = periodicity::defect_scan(g, 1.0, 10.0, 4001);
  const double located = scan.front().T_tilde;
  const bool ok =
      at_period <= 1e-9 && std::abs(located - kTwoPi) <= grid.step();
  return {12, "defect-sanity", ok,
          "defect(2pi) = " + fmt(at_period) +
              " (tol 1e-9), scan minimum at T~ = " + fmt(located) +
              " (within one step of 2pi)"};
}

}  // namespace

std::vector<CriterionResult> run_all(
    const std::function<void(const CriterionResult&)>& on_done) {
  using Fn = CriterionResult (*)();
  const Fn criteria[] = {
      representation_equality, composition_identities, semigroup,
      kernel_moment_dual_route, psi_sandwich, laplace_closed_form,
      ratio_limit, moment_certificate, nonperiodicity_ratios,
      solver_exactness, decay_certificate, defect_sanity};
  std::vector<CriterionResult> results;
  int id = 0;
  for (Fn fn : criteria) {
    ++id;
    CriterionResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = CriterionResult{id, "criterion-" + std::to_string(id), false,
                          std::string("exception: ") + e.what()};
    }
    if (on_done) on_done(r);
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return !results.empty();
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  "
     << r.detail;
  return os.str();
}

}  // namespace fracperiod::verify
