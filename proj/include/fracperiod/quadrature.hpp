#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace fracperiod::quad {

struct Options {
  double abs_tol = 1e-10;
  std::size_t max_evals = 1'000'000;
};

struct Result {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what, Result partial)
      : std::runtime_error(what), partial_(partial) {}
  const Result& partial() const noexcept { return partial_; }

 private:
  Result partial_;
};

/// Adaptive Gauss-Kronrod 7-15 on [a, b], globally refining the interval
/// with the largest error estimate until the summed estimate meets abs_tol.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

/// Same, but throws QuadratureError if the tolerance is not met.
double integrate_or_throw(const std::function<double(double)>& f, double a,
                          double b, const Options& opts = {});

}  // namespace fracperiod::quad
