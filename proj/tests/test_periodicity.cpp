#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fracperiod/fracops.hpp"
#include "fracperiod/periodicity.hpp"

using namespace fracperiod;
using namespace fracperiod::periodicity;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

PeriodicSignal sine() {
  return PeriodicSignal([](double t) { return std::sin(t); }, kTwoPi, "sin");
}

PeriodicSignal cosine() {
  return PeriodicSignal([](double t) { return std::cos(t); }, kTwoPi, "cos");
}

// composite Simpson reference, independent of the adaptive engine
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

}  // namespace

TEST_CASE("PeriodicSignal validates the claimed period") {
  CHECK_NOTHROW(sine());
  CHECK_NOTHROW(PeriodicSignal([](double) { return 3.0; }, 1.0, "const"));
  // sin is not 3-periodic
  CHECK_THROWS_AS(PeriodicSignal([](double t) { return std::sin(t); }, 3.0,
                                 "bad"),
                  std::domain_error);
  // a truncated-precision period fails the 1e-12 gate
  CHECK_THROWS_AS(PeriodicSignal([](double t) { return std::sin(t); },
                                 6.283185307, "coarse"),
                  std::domain_error);
  CHECK_THROWS_AS(PeriodicSignal([](double t) { return std::sin(t); }, -1.0,
                                 "neg"),
                  std::domain_error);
}

TEST_CASE("kernel_moment: zero signal, oracle value, and dual route") {
  const FracOrder half(0.5);
  const PeriodicSignal zero([](double) { return 0.0; }, kTwoPi, "zero");
  for (unsigned n : {1u, 2u, 5u}) {
    CHECK(std::abs(kernel_moment(zero, half, n)) <= 1e-12);
  }

  // V_n for sin, T = 2pi, alpha = 0.5, from a 50-digit quadrature oracle
  const double V[5] = {-0.86081544933803153468, -0.111678597286189776,
                       -0.050965616566019402045, -0.030617016332891305856,
                       -0.020959450141063755955};
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(kernel_moment(sine(), half, n) ==
          doctest::Approx(V[n - 1]).epsilon(1e-8));
  }
  CHECK(std::abs(V[0]) > 0.1);  // Lemma contrapositive margin

  // independent composite route for the singular n = 1 moment
  const double composite =
      2.0 * simpson([](double u) { return std::sin(kTwoPi - u * u); }, 0.0,
                    std::sqrt(kTwoPi), 1 << 15);
  CHECK(std::abs(kernel_moment(sine(), half, 1) - composite) <= 1e-8);
}

TEST_CASE("kernel_moment: large-n decay bound") {
  const FracOrder half(0.5);
  const auto f = sine();
  // |V_n| <= ((n-1) T)^(alpha-1) * int_0^T |f|, and int |sin| = 4
  for (unsigned n : {2u, 10u, 100u}) {
    const double bound = std::pow((n - 1) * kTwoPi, -0.5) * 4.0;
    CHECK(std::abs(kernel_moment(f, half, n)) <= bound);
  }
  CHECK(kernel_moment(sine(), half, 100) ==
        doctest::Approx(-0.00020097782244179999155).epsilon(1e-6));
  CHECK_THROWS_AS(kernel_moment(f, half, 0), std::domain_error);
}

TEST_CASE("shifted_kernel_integral: consistency with kernel moments") {
  const FracOrder half(0.5);
  const auto f = sine();
  for (unsigned n = 1; n <= 10; ++n) {
    const double a = shifted_kernel_integral(f, half, (n - 1) * kTwoPi);
    const double b = kernel_moment(f, half, n);
    CHECK(std::abs(a - b) <= 1e-9);
  }
  CHECK(shifted_kernel_integral(f, half, 1.0) ==
        doctest::Approx(-0.44359105172564640492).epsilon(1e-9));
  const PeriodicSignal zero([](double) { return 0.0; }, 1.0, "zero");
  CHECK(std::abs(shifted_kernel_integral(zero, half, 0.33)) <= 1e-12);
}

TEST_CASE("psi_integral: oracle values and sandwich") {
  const FracOrder half(0.5);
  const auto f = sine();
  CHECK(psi_integral(f, half, 1.0) ==
        doctest::Approx(1.5946322917297743922).epsilon(1e-9));
  CHECK(psi_integral(f, half, 10.0) ==
        doctest::Approx(0.86907402549391763854).epsilon(1e-9));
  for (double t : {0.0, 0.5, 1.0, 3.0, 10.0, 100.0, 1e4}) {
    const double psi = psi_integral(f, half, t);
    const auto bound = psi_bound(f, half, t);
    CHECK(bound.lo <= psi);
    CHECK(psi <= bound.hi);
  }
}

TEST_CASE("psi_integral: decay at large t") {
  const FracOrder half(0.5);
  const auto f = sine();
  const double psi_far = psi_integral(f, half, 1e4);
  CHECK(std::abs(psi_far) <=
        2.0 * (std::pow(kTwoPi + 1e4, 0.5) - std::pow(1e4, 0.5)));
  CHECK(std::abs(psi_far) <= 0.07);
}

TEST_CASE("psi_bound: structure and the mean-zero gate") {
  const FracOrder half(0.5);
  const auto f = sine();
  const auto at0 = psi_bound(f, half, 0.0);
  // c = 2 for sin, so the t = 0 bound is +- 2 T^alpha
  CHECK(at0.hi == doctest::Approx(2.0 * std::pow(kTwoPi, 0.5)).epsilon(1e-8));
  CHECK(at0.lo == doctest::Approx(-at0.hi));
  // bounds collapse to 0 as t -> infinity
  CHECK(psi_bound(f, half, 1e12).hi <= 1e-5);

  const PeriodicSignal one([](double) { return 1.0; }, 1.0, "one");
  CHECK_THROWS_AS(psi_bound(one, half, 1.0), std::domain_error);
}

TEST_CASE("mean_abs_parts: sin, constant, zero") {
  const auto parts = mean_abs_parts(sine());
  CHECK(std::abs(parts.mean) <= 1e-10);
  CHECK(parts.c_plus == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(parts.c_minus == doctest::Approx(2.0).epsilon(1e-10));

  const PeriodicSignal one([](double) { return 1.0; }, 1.0, "one");
  const auto p1 = mean_abs_parts(one);
  CHECK(p1.mean == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p1.c_plus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(p1.c_minus) <= 1e-12);

  const PeriodicSignal zero([](double) { return 0.0; }, 1.0, "zero");
  const auto p0 = mean_abs_parts(zero);
  CHECK(p0.mean == 0.0);
  CHECK(p0.c_plus == 0.0);
  CHECK(p0.c_minus == 0.0);
}

TEST_CASE("mean_abs_parts: positive part of sin(kt) has k humps of area 2/k") {
  for (int k : {2, 5}) {
    const PeriodicSignal f([k](double t) { return std::sin(k * t); }, kTwoPi,
                           "sin(kt)");
    const auto parts = mean_abs_parts(f);
    CHECK(std::abs(parts.mean) <= 1e-9);
    CHECK(parts.c_plus == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(parts.c_minus == doctest::Approx(2.0).epsilon(1e-8));
  }
}

TEST_CASE("moment_sequence: sin and cos oracles") {
  const auto ms = moment_sequence(sine(), 1);
  REQUIRE(ms.size() == 2);
  CHECK(std::abs(ms[0]) <= 1e-10);
  CHECK(ms[1] == doctest::Approx(-kTwoPi).epsilon(1e-10));

  const auto mc = moment_sequence(cosine(), 2);
  REQUIRE(mc.size() == 3);
  CHECK(std::abs(mc[0]) <= 1e-10);
  CHECK(std::abs(mc[1]) <= 1e-9);
  CHECK(mc[2] == doctest::Approx(4.0 * M_PI).epsilon(1e-9));

  const PeriodicSignal zero([](double) { return 0.0; }, 1.0, "zero");
  for (double m : moment_sequence(zero, 4)) CHECK(m == 0.0);
}

TEST_CASE("defect: sampled sin at its true period") {
  const UniformGrid grid(8.0 * M_PI, 8192);
  const auto g = GridFunction::sample(grid, [](double t) { return std::sin(t); });
  const auto r = defect(g, kTwoPi);
  CHECK(r.sup_defect <= 1e-9);
  CHECK(r.l2_defect <= 1e-9);
  CHECK(r.snap_distance <= grid.step() / 2);
  CHECK(r.window_hi == doctest::Approx(grid.t_end - kTwoPi).epsilon(1e-12));
}

TEST_CASE("defect: constant functions have exactly zero defect") {
  const UniformGrid grid(10.0, 500);
  const auto c = GridFunction::constant(grid, -3.7);
  for (double T : {0.1, 1.0, 7.3}) {
    const auto r = defect(c, T);
    CHECK(r.sup_defect == 0.0);
    CHECK(r.l2_defect == 0.0);
  }
}

TEST_CASE("defect: fractional primitive of sin is visibly non-periodic") {
  const UniformGrid grid(8.0 * M_PI, 8192);
  const auto f = GridFunction::sample(grid, [](double t) { return std::sin(t); });
  const auto g = fracops::frac_integral(f, FracOrder(0.5));
  CHECK(defect(g, kTwoPi).sup_defect > 0.1);
}

TEST_CASE("defect: candidate snapping and window errors") {
  const UniformGrid grid(1.0, 100);
  const auto g = GridFunction::sample(grid, [](double t) { return t; });
  const auto r = defect(g, 0.25301);
  CHECK(r.T_tilde == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.snap_distance == doctest::Approx(0.00301).epsilon(1e-9));
  CHECK(r.requested == 0.25301);
  // linear ramp: defect equals the snapped shift everywhere
  CHECK(r.sup_defect == doctest::Approx(0.25).epsilon(1e-12));

  CHECK_THROWS_AS(defect(g, 1.0), std::domain_error);   // t_end <= T~
  CHECK_THROWS_AS(defect(g, 2.0), std::domain_error);
  CHECK_THROWS_AS(defect(g, 0.0), std::domain_error);
  CHECK_THROWS_AS(defect(g, -1.0), std::domain_error);
}

TEST_CASE("defect_scan: minimum sits at the true period") {
  const UniformGrid grid(8.0 * M_PI, 8192);
  const auto g = GridFunction::sample(grid, [](double t) { return std::sin(t); });
  const auto reports = defect_scan(g, 1.0, 10.0, 1000);
  REQUIRE(reports.size() == 1000);
  CHECK(std::abs(reports.front().T_tilde - kTwoPi) <= 9.0 / 999.0);
  // ascending order
  for (std::size_t i = 1; i < reports.size(); ++i) {
    CHECK(reports[i - 1].sup_defect <= reports[i].sup_defect);
  }
}

TEST_CASE("defect_scan: degenerate range and argument validation") {
  const UniformGrid grid(10.0, 100);
  const auto g = GridFunction::sample(grid, [](double t) { return std::sin(t); });
  const auto single = defect_scan(g, 2.0, 2.0, 7);
  CHECK(single.size() == 1);
  CHECK(single.front().requested == 2.0);

  CHECK_THROWS_AS(defect_scan(g, 0.0, 5.0, 10), std::domain_error);
  CHECK_THROWS_AS(defect_scan(g, 3.0, 2.0, 10), std::domain_error);
  CHECK_THROWS_AS(defect_scan(g, 1.0, 10.0, 10), std::domain_error);
  CHECK_THROWS_AS(defect_scan(g, 1.0, 5.0, 0), std::domain_error);
}

TEST_CASE("defect reports serialize to CSV and JSON with the same keys") {
  const UniformGrid grid(10.0, 100);
  const auto g = GridFunction::sample(grid, [](double t) { return std::sin(t); });
  const auto reports = defect_scan(g, 1.0, 5.0, 3);

  std::ostringstream csv;
  write_csv(reports, csv);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "T_tilde,sup_defect,l2_defect,window_lo,window_hi");
  std::size_t rows = 0;
  std::string row;
  while (std::getline(lines, row)) ++rows;
  CHECK(rows == reports.size());

  const auto j = to_json(reports);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == reports.size());
  for (const auto& obj : j) {
    CHECK(obj.contains("T_tilde"));
    CHECK(obj.contains("sup_defect"));
    CHECK(obj.contains("l2_defect"));
    CHECK(obj.contains("window_lo"));
    CHECK(obj.contains("window_hi"));
  }
  CHECK(j.front()["sup_defect"].get<double>() == reports.front().sup_defect);
}
