#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracperiod/grid.hpp"
#include "fracperiod/quadrature.hpp"

#include <json.hpp>

namespace fracperiod::periodicity {

/// A T-periodic real function. Construction samples [0, 3T] and rejects
/// evaluators that violate |f(t+T) - f(t)| <= 1e-12.
class PeriodicSignal {
 public:
  PeriodicSignal(std::function<double(double)> evaluator, double period,
                 std::string description);

  double operator()(double t) const { return evaluator_(t); }
  double period() const noexcept { return period_; }
  const std::string& description() const noexcept { return description_; }

 private:
  std::function<double(double)> evaluator_;
  double period_;
  std::string description_;
};

/// Quantified failure of a grid function to be T_tilde-periodic.
struct DefectReport {
  double T_tilde = 0.0;        // candidate period snapped to a grid multiple
  double requested = 0.0;      // candidate period as requested
  double snap_distance = 0.0;  // |T_tilde - requested|
  double sup_defect = 0.0;
  double l2_defect = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::size_t samples = 0;
};

/// Kernel moment int_0^T (nT - s)^(alpha-1) f(s) ds, n >= 1. For n = 1 the
/// endpoint singularity at s = T is removed exactly by the substitution
/// u = (T-s)^alpha; for n >= 2 the integrand is smooth.
double kernel_moment(const PeriodicSignal& f, FracOrder alpha, unsigned n,
                     const quad::Options& opts = {});

/// phi(t) = int_0^T (T + t - s)^(alpha-1) f(s) ds, t >= 0. Same substitution
/// as kernel_moment near t = 0. phi((n-1)T) = kernel_moment(n).
double shifted_kernel_integral(const PeriodicSignal& f, FracOrder alpha,
                               double t, const quad::Options& opts = {});

/// psi(t) = int_0^T (T - s + t)^alpha f(s) ds (nonsingular for alpha > 0).
double psi_integral(const PeriodicSignal& f, FracOrder alpha, double t,
                    const quad::Options& opts = {});

struct PsiBound {
  double lo = 0.0;
  double hi = 0.0;
};

/// Sandwich bound (t^a - (T+t)^a) c <= psi(t) <= ((T+t)^a - t^a) c with
/// c = int f+ = int f-. Requires mean-zero f (|int_0^T f| <= 1e-10), else
/// throws std::domain_error.
PsiBound psi_bound(const PeriodicSignal& f, FracOrder alpha, double t,
                   const quad::Options& opts = {});

struct MeanAbsParts {
  double mean = 0.0;    // int_0^T f
  double c_plus = 0.0;  // int_0^T max(f, 0)
  double c_minus = 0.0; // int_0^T -min(f, 0)
};

MeanAbsParts mean_abs_parts(const PeriodicSignal& f,
                            const quad::Options& opts = {});

/// Moments int_0^T f(t) t^i dt for i = 0..k_max. Any nonzero entry certifies
/// that f admits no T~-periodic fractional primitive.
std::vector<double> moment_sequence(const PeriodicSignal& f, std::size_t k_max,
                                    const quad::Options& opts = {});

/// Periodicity defect of g at candidate period T_tilde > 0, snapped to the
/// nearest positive grid multiple of h. sup and L2 norms of
/// t -> g(t + T~) - g(t) over [0, t_end - T~]. Throws std::domain_error when
/// t_end <= T_tilde (window too short).
DefectReport defect(const GridFunction& g, double T_tilde);

/// Defect over `steps` uniformly spaced candidates in [T_lo, T_hi]
/// (a single candidate when T_lo == T_hi). Reports sorted by sup_defect
/// ascending, ties broken by T_tilde.
std::vector<DefectReport> defect_scan(const GridFunction& g, double T_lo,
                                      double T_hi, std::size_t steps);

/// CSV schema: T_tilde,sup_defect,l2_defect,window_lo,window_hi
void write_csv(const std::vector<DefectReport>& reports, std::ostream& out);
nlohmann::json to_json(const std::vector<DefectReport>& reports);

}  // namespace fracperiod::periodicity
