#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracperiod/grid.hpp"
#include "fracperiod/periodicity.hpp"

#include <json.hpp>

namespace fracperiod::fodesolve {

struct SolveOptions {
  unsigned corrector_sweeps = 2;
  double blow_up_threshold = 1e12;
};

struct SolveResult {
  GridFunction trajectory;  // starts exactly at u0
  std::string scheme;       // "fractional-abm"
  double alpha = 0.0;
  unsigned corrector_sweeps = 0;
  /// Max node defect of the discrete Volterra equation
  /// u_n - u0 - I^alpha[rhs](t_n) under the corrector weights.
  double max_residual = 0.0;
};

/// Thrown when |u| exceeds the blow-up threshold; carries the trajectory
/// computed so far.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(std::size_t node, double h, std::vector<double> partial)
      : std::runtime_error("solve_caputo: |u| exceeded the blow-up threshold "
                           "at node " +
                           std::to_string(node)),
        node_(node),
        h_(h),
        partial_(std::move(partial)) {}

  std::size_t node() const noexcept { return node_; }
  double step() const noexcept { return h_; }
  const std::vector<double>& partial_trajectory() const noexcept {
    return partial_;
  }

 private:
  std::size_t node_;
  double h_;
  std::vector<double> partial_;
};

/// Solves the Caputo initial value problem cD^alpha u = rhs(t, u), u(0) = u0
/// on the grid by the fractional Adams-Bashforth-Moulton predictor-corrector
/// applied to the Volterra form u = u0 + I^alpha[rhs(., u(.))]. History sums
/// use the same product-integration weights as fracops::frac_integral.
SolveResult solve_caputo(const std::function<double(double, double)>& rhs,
                         FracOrder alpha, double u0, const UniformGrid& grid,
                         const SolveOptions& opts = {});

/// True iff |phi(u0)| <= 1e-12, i.e. u0 is an equilibrium of the autonomous
/// equation cD^alpha u = phi(u) and the constant u0 is its only periodic
/// solution through u0.
bool equilibrium_check(const std::function<double(double)>& phi, double u0);

/// Defect scan of the solved trajectory over candidate periods
/// [T_lo, T_hi]; for a nonconstant autonomous solution every sup_defect is
/// positive, and the smallest one is the certificate margin.
std::vector<periodicity::DefectReport> nonperiodicity_certificate(
    const SolveResult& result, double T_lo, double T_hi, std::size_t steps);

/// CSV schema: t,u
void write_csv(const SolveResult& result, std::ostream& out);

/// {"alpha", "scheme", "h", "corrector_iterations", "max_residual"}
nlohmann::json sidecar_json(const SolveResult& result);

}  // namespace fracperiod::fodesolve
