#pragma once

#include <cstddef>
#include <vector>

#include "fracperiod/grid.hpp"

namespace fracperiod::fracops {

// --- product-integration weights on a uniform grid -------------------------
//
// With h = grid step and alpha in (0,1), the fractional integral of the
// piecewise-linear interpolant of f is
//
//   I^alpha f(t_n) = h^alpha / Gamma(alpha+2) *
//       [ a0(n) f_0 + sum_{m=1}^{n-1} b_m f_{n-m} + f_n ],
//
// where b_m is the second difference of m^(alpha+1). The same weights drive
// the corrector of the fractional Adams-Bashforth-Moulton solver, which
// shares this implementation.

/// b_m = (m+1)^(a+1) - 2 m^(a+1) + (m-1)^(a+1) for m = 1..count.
std::vector<double> pi_interior_weights(std::size_t count, double alpha);

/// a0(n) = (n-1)^(a+1) - n^a (n - a - 1), the node-0 weight at target node n.
double pi_left_weight(std::size_t n, double alpha);

/// Predictor (rectangle-rule) weights p_m = m^a - (m-1)^a for m = 1..count;
/// I^alpha f(t_n) ~ h^alpha/Gamma(alpha+1) * sum_{j<n} p_(n-j) f_j.
std::vector<double> predictor_weights(std::size_t count, double alpha);

/// L1 kernel moments w_m = (m+1)^(1-a) - m^(1-a) for m = 0..count-1.
std::vector<double> l1_weights(std::size_t count, double alpha);

// --- discrete fractional operators -----------------------------------------

/// Riemann-Liouville fractional integral I^alpha f on the nodes of f's grid,
/// by product integration of the piecewise-linear interpolant (the kernel
/// singularity is absorbed into the closed-form weights). Node 0 is 0.
GridFunction frac_integral(const GridFunction& f, FracOrder alpha);

/// Caputo derivative by the L1 scheme: piecewise-constant difference
/// quotients against exact kernel moments of (t-s)^(-alpha). Node 0 is 0.
/// Assumes f was sampled from a function with integrable derivative.
GridFunction caputo_derivative(const GridFunction& f, FracOrder alpha);

struct RlDerivative {
  GridFunction derivative;
  /// True when f(0) != 0; node 0 of `derivative` is then NaN (the RL
  /// derivative diverges like t^(-alpha) there) and must be excluded from
  /// norms.
  bool singular_at_origin;
};

/// Riemann-Liouville derivative via the identity
/// D^alpha f = cD^alpha f + f(0) t^(-alpha)/Gamma(1-alpha);
/// the singular additive term is evaluated analytically per node.
RlDerivative rl_derivative(const GridFunction& f, FracOrder alpha);

/// Scheme-consistency diagnostic: max-norm residual over nodes k >= 1 of
/// I^alpha(cD^alpha f) - (f - f(0)).
double compose_check(const GridFunction& f, FracOrder alpha);

}  // namespace fracperiod::fracops
