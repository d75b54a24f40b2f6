#include "fracperiod/fodesolve.hpp"

#include <cmath>
#include <ostream>

#include "fracperiod/fracops.hpp"
#include "fracperiod/specfun.hpp"

namespace fracperiod::fodesolve {

SolveResult solve_caputo(const std::function<double(double, double)>& rhs,
                         FracOrder alpha, double u0, const UniformGrid& grid,
                         const SolveOptions& opts) {
  const double a = alpha.value();
  const std::size_t n = grid.n;
  const double h = grid.step();
  const double c_pred = std::pow(h, a) / specfun::gamma(a + 1.0);
  const double c_corr = std::pow(h, a) / specfun::gamma(a + 2.0);
  const std::vector<double> wp = fracops::predictor_weights(n, a);
  const std::vector<double> wb = fracops::pi_interior_weights(n, a);

  std::vector<double> u(n + 1), fval(n + 1);
  u[0] = u0;
  fval[0] = rhs(0.0, u0);
  double max_residual = 0.0;

  for (std::size_t k = 1; k <= n; ++k) {
    const double tk = grid.node(k);

    // predictor: rectangle-rule history
    double hist_p = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      hist_p += wp[k - 1 - j] * fval[j];
    }
    double uk = u0 + c_pred * hist_p;

    // corrector history (everything but the j = k term)
    double hist_c = fracops::pi_left_weight(k, a) * fval[0];
    for (std::size_t j = 1; j < k; ++j) {
      hist_c += wb[k - j - 1] * fval[j];
    }
    for (unsigned sweep = 0; sweep < opts.corrector_sweeps; ++sweep) {
      uk = u0 + c_corr * (hist_c + rhs(tk, uk));
    }

    u[k] = uk;
    fval[k] = rhs(tk, uk);
    max_residual =
        std::max(max_residual, std::abs(uk - u0 - c_corr * (hist_c + fval[k])));

    if (std::abs(uk) > opts.blow_up_threshold) {
      u.resize(k + 1);
      throw BlowUpError(k, h, std::move(u));
    }
  }

  SolveResult result{GridFunction{grid, std::move(u)}, "fractional-abm", a,
                     opts.corrector_sweeps, max_residual};
  return result;
}

bool equilibrium_check(const std::function<double(double)>& phi, double u0) {
  return std::abs(phi(u0)) <= 1e-12;
}

std::vector<periodicity::DefectReport> nonperiodicity_certificate(
    const SolveResult& result, double T_lo, double T_hi, std::size_t steps) {
  return periodicity::defect_scan(result.trajectory, T_lo, T_hi, steps);
}

void write_csv(const SolveResult& result, std::ostream& out) {
  out << "t,u\n";
  const GridFunction& g = result.trajectory;
  for (std::size_t k = 0; k < g.values.size(); ++k) {
    out << format_full(g.grid.node(k)) << ',' << format_full(g.values[k])
        << '\n';
  }
}

nlohmann::json sidecar_json(const SolveResult& result) {
  return nlohmann::json{{"alpha", result.alpha},
                        {"scheme", result.scheme},
                        {"h", result.trajectory.grid.step()},
                        {"corrector_iterations", result.corrector_sweeps},
                        {"max_residual", result.max_residual}};
}

}  // namespace fracperiod::fodesolve
