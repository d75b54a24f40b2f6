#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracperiod/grid.hpp"
#include "fracperiod/periodicity.hpp"
#include "fracperiod/quadrature.hpp"

#include <json.hpp>

namespace fracperiod::laplace {

/// Describes g(t) ~ amplitude * (shift + t)^exponent for t >= horizon, so the
/// transform tail int_H^inf can be added in closed form (incomplete gamma).
struct PowerLawTail {
  double amplitude = 1.0;
  double shift = 0.0;
  double exponent = 0.0;
};

/// int_0^H g(t) e^(-st) dt by adaptive quadrature, s > 0; if `tail` is given,
/// adds the analytic continuation of the power-law tail beyond H.
double laplace_numeric(const std::function<double(double)>& g, double horizon,
                       double s,
                       const std::optional<PowerLawTail>& tail = std::nullopt,
                       const quad::Options& opts = {});

/// Closed-form transform of varphi(t) = (T+t)^alpha:
///   L[varphi](s) = s^(-alpha-1) e^(sT) Gamma(alpha+1, sT),
/// strictly positive for all s > 0. Evaluated through the scaled incomplete
/// gamma, so large sT does not overflow.
double varphi_transform_closed(FracOrder alpha, double T, double s);

/// Laplace transform of a T-periodic function from one period:
///   L[u](lambda) = int_0^T u e^(-lambda t) dt / (1 - e^(-lambda T)),
/// with an expm1-safe denominator.
double periodic_laplace(const periodicity::PeriodicSignal& u, double lambda,
                        const quad::Options& opts = {});

/// (1 - e^(-lambda T)) / (1 - e^(-lambda T~)) for each lambda; the sequence
/// approaches T/T~ as lambda -> 0+.
std::vector<double> ratio_limit_check(double T, double T_tilde,
                                      const std::vector<double>& lambdas);

struct MomentExtractionReport {
  std::vector<double> moments;
  std::optional<std::size_t> first_nonzero_index;
  std::string verdict;
};

/// Moments int_0^T f t^i dt for i <= k_max with the first index whose
/// magnitude exceeds zero_tol; a nonzero moment certifies that f admits no
/// T~-periodic fractional primitive.
MomentExtractionReport moment_extraction_demo(
    const periodicity::PeriodicSignal& f, std::size_t k_max,
    double zero_tol = 1e-8, const quad::Options& opts = {});

/// {"moments": [...], "first_nonzero_index": int|null, "verdict": string}
nlohmann::json to_json(const MomentExtractionReport& report);

}  // namespace fracperiod::laplace
