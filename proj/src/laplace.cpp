#include "fracperiod/laplace.hpp"

#include <cmath>
#include <stdexcept>

#include "fracperiod/specfun.hpp"

namespace fracperiod::laplace {

double laplace_numeric(const std::function<double(double)>& g, double horizon,
                       double s, const std::optional<PowerLawTail>& tail,
                       const quad::Options& opts) {
  if (!(s > 0.0)) throw std::domain_error("laplace_numeric: requires s > 0");
  if (!(horizon > 0.0)) {
    throw std::domain_error("laplace_numeric: requires a positive horizon");
  }
  double value = quad::integrate_or_throw(
      [&](double t) { return g(t) * std::exp(-s * t); }, 0.0, horizon, opts);
  if (tail) {
    // int_H^inf A (shift+t)^p e^(-st) dt
    //   = A s^(-p-1) e^(-sH) * [e^z Gamma(p+1, z)],  z = s (shift + H)
    const double z = s * (tail->shift + horizon);
    const double scaled = specfun::upper_incomplete_gamma_scaled(
        tail->exponent + 1.0, z);
    value += tail->amplitude * std::pow(s, -tail->exponent - 1.0) *
             std::exp(-s * horizon) * scaled;
  }
  return value;
}

double varphi_transform_closed(FracOrder alpha, double T, double s) {
  if (!(T > 0.0)) {
    throw std::domain_error("varphi_transform_closed: requires T > 0");
  }
  if (!(s > 0.0)) {
    throw std::domain_error("varphi_transform_closed: requires s > 0");
  }
  const double a = alpha.value();
  // s^(-a-1) e^(sT) Gamma(a+1, sT) = s^(-a-1) * scaled(a+1, sT); the scaled
  // form keeps e^(sT) from overflowing for sT beyond ~700.
  const double scaled = specfun::upper_incomplete_gamma_scaled(a + 1.0, s * T);
  return std::pow(s, -a - 1.0) * scaled;
}

double periodic_laplace(const periodicity::PeriodicSignal& u, double lambda,
                        const quad::Options& opts) {
  if (!(lambda > 0.0)) {
    throw std::domain_error("periodic_laplace: requires lambda > 0");
  }
  const double T = u.period();
  const double numerator = quad::integrate_or_throw(
      [&](double t) { return u(t) * std::exp(-lambda * t); }, 0.0, T, opts);
  const double denominator = -std::expm1(-lambda * T);
  return numerator / denominator;
}

std::vector<double> ratio_limit_check(double T, double T_tilde,
                                      const std::vector<double>& lambdas) {
  if (!(T > 0.0) || !(T_tilde > 0.0)) {
    throw std::domain_error("ratio_limit_check: periods must be positive");
  }
  std::vector<double> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) {
      throw std::domain_error("ratio_limit_check: lambdas must be positive");
    }
    out.push_back(std::expm1(-lambda * T) / std::expm1(-lambda * T_tilde));
  }
  return out;
}

MomentExtractionReport moment_extraction_demo(
    const periodicity::PeriodicSignal& f, std::size_t k_max, double zero_tol,
    const quad::Options& opts) {
  MomentExtractionReport report;
  report.moments = periodicity::moment_sequence(f, k_max, opts);
  for (std::size_t i = 0; i < report.moments.size(); ++i) {
    if (std::abs(report.moments[i]) > zero_tol) {
      report.first_nonzero_index = i;
      break;
    }
  }
  if (report.first_nonzero_index) {
    report.verdict =
        "moment " + std::to_string(*report.first_nonzero_index) +
        " is nonzero: no T~-periodic fractional primitive exists";
  } else {
    report.verdict =
        "all moments zero up to k_max = " + std::to_string(k_max);
  }
  return report;
}

nlohmann::json to_json(const MomentExtractionReport& report) {
  nlohmann::json j;
  j["moments"] = report.moments;
  if (report.first_nonzero_index) {
    j["first_nonzero_index"] = *report.first_nonzero_index;
  } else {
    j["first_nonzero_index"] = nullptr;
  }
  j["verdict"] = report.verdict;
  return j;
}

}  // namespace fracperiod::laplace
