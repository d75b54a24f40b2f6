#include "fracperiod/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fracperiod {

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("FracOrder: alpha must lie strictly in (0,1), got " +
                            std::to_string(alpha));
  }
}

UniformGrid::UniformGrid(double t_end_, std::size_t n_) : t_end(t_end_), n(n_) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("UniformGrid: t_end must be positive and finite");
  }
  if (n < 2) {
    throw std::invalid_argument("UniformGrid: need at least 2 intervals");
  }
}

GridFunction GridFunction::sample(const UniformGrid& grid,
                                  const std::function<double(double)>& f) {
  GridFunction g{grid, std::vector<double>(grid.node_count())};
  for (std::size_t k = 0; k < g.values.size(); ++k) {
    g.values[k] = f(grid.node(k));
  }
  validate(g);
  return g;
}

GridFunction GridFunction::constant(const UniformGrid& grid, double c) {
  return GridFunction{grid, std::vector<double>(grid.node_count(), c)};
}

void validate(const GridFunction& g) {
  if (g.values.size() != g.grid.node_count()) {
    throw std::invalid_argument("GridFunction: value count " +
                                std::to_string(g.values.size()) +
                                " does not match node count " +
                                std::to_string(g.grid.node_count()));
  }
  for (std::size_t k = 0; k < g.values.size(); ++k) {
    if (!std::isfinite(g.values[k])) {
      throw std::invalid_argument("GridFunction: non-finite value at node " +
                                  std::to_string(k));
    }
  }
}

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_csv(const GridFunction& g, std::ostream& out) {
  out << "t,value\n";
  for (std::size_t k = 0; k < g.values.size(); ++k) {
    out << format_full(g.grid.node(k)) << ',' << format_full(g.values[k])
        << '\n';
  }
}

void write_csv_file(const GridFunction& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_csv(g, out);
}

GridFunction read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("GridFunction CSV: empty input");
  }
  if (line != "t,value" && line != "t,value\r") {
    throw std::invalid_argument("GridFunction CSV: expected header 't,value'");
  }
  std::vector<double> ts, vs;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b)) {
      throw std::invalid_argument("GridFunction CSV: malformed row at line " +
                                  std::to_string(lineno));
    }
    ts.push_back(std::stod(a));
    vs.push_back(std::stod(b));
  }
  if (ts.size() < 3) {
    throw std::invalid_argument("GridFunction CSV: need at least 3 rows");
  }
  const std::size_t n = ts.size() - 1;
  const double t_end = ts.back();
  UniformGrid grid(t_end, n);
  const double h = grid.step();
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (std::abs(ts[k] - grid.node(k)) > 1e-9 * (1.0 + t_end)) {
      throw std::invalid_argument(
          "GridFunction CSV: node column is not uniform at row " +
          std::to_string(k + 2) + " (step " + format_full(h) + ")");
    }
  }
  GridFunction g{grid, std::move(vs)};
  validate(g);
  return g;
}

GridFunction read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_csv(in);
}

double max_abs_diff(const GridFunction& a, const GridFunction& b,
                    std::size_t from_node) {
  if (!(a.grid == b.grid)) {
    throw std::invalid_argument("max_abs_diff: grids differ");
  }
  double m = 0.0;
  for (std::size_t k = from_node; k < a.values.size(); ++k) {
    m = std::max(m, std::abs(a.values[k] - b.values[k]));
  }
  return m;
}

}  // namespace fracperiod
