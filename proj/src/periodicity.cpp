#include "fracperiod/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace fracperiod::periodicity {

namespace {

// (T+t)^a - t^a without cancellation for t >> T.
double power_gap(double T, double t, double a) {
  if (t == 0.0) return std::pow(T, a);
  return std::pow(t, a) * std::expm1(a * std::log1p(T / t));
}

}  // namespace

PeriodicSignal::PeriodicSignal(std::function<double(double)> evaluator,
                               double period, std::string description)
    : evaluator_(std::move(evaluator)),
      period_(period),
      description_(std::move(description)) {
  if (!(period_ > 0.0) || !std::isfinite(period_)) {
    throw std::domain_error("PeriodicSignal: period must be positive");
  }
  constexpr int kSamples = 128;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = 3.0 * period_ * static_cast<double>(i) / kSamples;
    const double d = std::abs(evaluator_(t + period_) - evaluator_(t));
    if (!(d <= 1e-12)) {
      throw std::domain_error(
          "PeriodicSignal: '" + description_ + "' violates " +
          format_full(period_) + "-periodicity by " + format_full(d) +
          " at t = " + format_full(t));
    }
  }
}

double kernel_moment(const PeriodicSignal& f, FracOrder alpha, unsigned n,
                     const quad::Options& opts) {
  if (n < 1) throw std::domain_error("kernel_moment: requires n >= 1");
  return shifted_kernel_integral(f, alpha,
                                 (static_cast<double>(n) - 1.0) * f.period(),
                                 opts);
}

double shifted_kernel_integral(const PeriodicSignal& f, FracOrder alpha,
                               double t, const quad::Options& opts) {
  if (t < 0.0) {
    throw std::domain_error("shifted_kernel_integral: requires t >= 0");
  }
  const double a = alpha.value();
  const double T = f.period();
  if (t < T) {
    // u = (T + t - s)^a maps ds (T+t-s)^(a-1) -> du / a and removes the
    // near-endpoint steepness (singular exactly at t = 0).
    const double u_lo = std::pow(t, a);
    const double u_hi = std::pow(T + t, a);
    const double inv_a = 1.0 / a;
    auto integrand = [&](double u) {
      const double s = T + t - std::pow(u, inv_a);
      return f(s);
    };
    return quad::integrate_or_throw(integrand, u_lo, u_hi, opts) * inv_a;
  }
  auto integrand = [&](double s) { return std::pow(T + t - s, a - 1.0) * f(s); };
  return quad::integrate_or_throw(integrand, 0.0, T, opts);
}

double psi_integral(const PeriodicSignal& f, FracOrder alpha, double t,
                    const quad::Options& opts) {
  if (t < 0.0) throw std::domain_error("psi_integral: requires t >= 0");
  const double a = alpha.value();
  const double T = f.period();
  auto integrand = [&](double s) { return std::pow(T - s + t, a) * f(s); };
  return quad::integrate_or_throw(integrand, 0.0, T, opts);
}

PsiBound psi_bound(const PeriodicSignal& f, FracOrder alpha, double t,
                   const quad::Options& opts) {
  if (t < 0.0) throw std::domain_error("psi_bound: requires t >= 0");
  const MeanAbsParts parts = mean_abs_parts(f, opts);
  if (std::abs(parts.mean) > 1e-10) {
    throw std::domain_error(
        "psi_bound: signal is not mean-zero over one period (int f = " +
        format_full(parts.mean) + "); the sandwich bound requires int f = 0");
  }
  const double c = 0.5 * (parts.c_plus + parts.c_minus);
  const double gap = power_gap(f.period(), t, alpha.value());
  return PsiBound{-c * gap, c * gap};
}

MeanAbsParts mean_abs_parts(const PeriodicSignal& f,
                            const quad::Options& opts) {
  const double T = f.period();
  MeanAbsParts out;
  out.c_plus =
      quad::integrate_or_throw([&](double s) { return std::max(f(s), 0.0); },
                               0.0, T, opts);
  out.c_minus =
      quad::integrate_or_throw([&](double s) { return -std::min(f(s), 0.0); },
                               0.0, T, opts);
  out.mean = quad::integrate_or_throw([&](double s) { return f(s); }, 0.0, T,
                                      opts);
  return out;
}

std::vector<double> moment_sequence(const PeriodicSignal& f, std::size_t k_max,
                                    const quad::Options& opts) {
  const double T = f.period();
  std::vector<double> moments(k_max + 1);
  for (std::size_t i = 0; i <= k_max; ++i) {
    moments[i] = quad::integrate_or_throw(
        [&](double t) { return f(t) * std::pow(t, static_cast<double>(i)); },
        0.0, T, opts);
  }
  return moments;
}

DefectReport defect(const GridFunction& g, double T_tilde) {
  if (!(T_tilde > 0.0)) {
    throw std::domain_error("defect: candidate period must be positive");
  }
  if (g.grid.t_end <= T_tilde) {
    throw std::domain_error("defect: window too short (t_end = " +
                            format_full(g.grid.t_end) + " <= T_tilde = " +
                            format_full(T_tilde) + ")");
  }
  const double h = g.grid.step();
  std::size_t m = static_cast<std::size_t>(std::llround(T_tilde / h));
  m = std::max<std::size_t>(m, 1);
  m = std::min<std::size_t>(m, g.grid.n - 1);

  DefectReport r;
  r.requested = T_tilde;
  r.T_tilde = static_cast<double>(m) * h;
  r.snap_distance = std::abs(r.T_tilde - T_tilde);
  r.window_lo = 0.0;
  r.window_hi = g.grid.t_end - r.T_tilde;
  r.samples = g.grid.n - m + 1;

  double sup = 0.0, sumsq = 0.0;
  for (std::size_t k = 0; k + m < g.values.size(); ++k) {
    const double d = g.values[k + m] - g.values[k];
    sup = std::max(sup, std::abs(d));
    sumsq += d * d;
  }
  r.sup_defect = sup;
  r.l2_defect = std::sqrt(h * sumsq);
  return r;
}

std::vector<DefectReport> defect_scan(const GridFunction& g, double T_lo,
                                      double T_hi, std::size_t steps) {
  if (!(T_lo > 0.0)) throw std::domain_error("defect_scan: requires T_lo > 0");
  if (!(T_hi >= T_lo)) {
    throw std::domain_error("defect_scan: requires T_hi >= T_lo");
  }
  if (!(T_hi < g.grid.t_end)) {
    throw std::domain_error("defect_scan: requires T_hi < t_end");
  }
  if (steps == 0) throw std::domain_error("defect_scan: requires steps >= 1");
  if (T_lo == T_hi) steps = 1;

  std::vector<DefectReport> reports;
  reports.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double T =
        steps == 1 ? T_lo
                   : T_lo + (T_hi - T_lo) * static_cast<double>(i) /
                         static_cast<double>(steps - 1);
    reports.push_back(defect(g, T));
  }
  std::sort(reports.begin(), reports.end(),
            [](const DefectReport& x, const DefectReport& y) {
              if (x.sup_defect != y.sup_defect) {
                return x.sup_defect < y.sup_defect;
              }
              if (x.T_tilde != y.T_tilde) return x.T_tilde < y.T_tilde;
              return x.requested < y.requested;
            });
  return reports;
}

void write_csv(const std::vector<DefectReport>& reports, std::ostream& out) {
  out << "T_tilde,sup_defect,l2_defect,window_lo,window_hi\n";
  for (const auto& r : reports) {
    out << format_full(r.T_tilde) << ',' << format_full(r.sup_defect) << ','
        << format_full(r.l2_defect) << ',' << format_full(r.window_lo) << ','
        << format_full(r.window_hi) << '\n';
  }
}

nlohmann::json to_json(const std::vector<DefectReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"T_tilde", r.T_tilde},
                   {"sup_defect", r.sup_defect},
                   {"l2_defect", r.l2_defect},
                   {"window_lo", r.window_lo},
                   {"window_hi", r.window_hi}});
  }
  return arr;
}

}  // namespace fracperiod::periodicity
