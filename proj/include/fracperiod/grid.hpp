#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fracperiod {

/// Fractional order alpha, restricted to the open interval (0,1).
class FracOrder {
 public:
  explicit FracOrder(double alpha);
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Uniform grid t_k = k*h on [0, t_end], h = t_end/n, n >= 2 intervals.
struct UniformGrid {
  double t_end;
  std::size_t n;

  UniformGrid(double t_end, std::size_t n);

  double step() const noexcept { return t_end / static_cast<double>(n); }
  std::size_t node_count() const noexcept { return n + 1; }
  double node(std::size_t k) const noexcept {
    return static_cast<double>(k) * step();
  }
  bool operator==(const UniformGrid&) const = default;
};

/// Real function sampled at the nodes of a uniform grid.
struct GridFunction {
  UniformGrid grid;
  std::vector<double> values;  // size grid.node_count()

  static GridFunction sample(const UniformGrid& grid,
                             const std::function<double(double)>& f);
  static GridFunction constant(const UniformGrid& grid, double c);
};

/// Checks size and finiteness invariants; throws std::invalid_argument.
void validate(const GridFunction& g);

/// CSV with header "t,value", one row per node, 17 significant digits.
void write_csv(const GridFunction& g, std::ostream& out);
void write_csv_file(const GridFunction& g, const std::string& path);

/// Parses the "t,value" CSV written by write_csv. The node column must be
/// uniformly spaced; throws std::invalid_argument otherwise.
GridFunction read_csv(std::istream& in);
GridFunction read_csv_file(const std::string& path);

/// max_k |a_k - b_k| over nodes k >= from_node (grids must match).
double max_abs_diff(const GridFunction& a, const GridFunction& b,
                    std::size_t from_node = 0);

/// Formats a double with 17 significant digits (shortest round-trip not
/// required; output is deterministic).
std::string format_full(double x);

}  // namespace fracperiod
