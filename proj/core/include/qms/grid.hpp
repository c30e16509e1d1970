#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qms/errors.hpp"

namespace qms {

/// Uniform 1-D sample domain: x(i) = x_min + i*dx for i in [0, n_points).
struct Grid {
  double x_min = 0.0;
  double dx = 1.0;
  int n_points = 0;

  Grid() = default;
  Grid(double x_min, double dx, int n_points);

  /// Grid spanning [center - half_span, center + half_span].
  static Grid centered(double center, double half_span, int n_points);

  double x(int i) const { return x_min + i * dx; }
  double x_max() const { return x(n_points - 1); }
  double span() const { return x_max() - x_min; }
  double center() const { return x(n_points / 2); }

  bool same_spacing(const Grid& other, double rel_tol = 1e-9) const;
  bool same_geometry(const Grid& other, double rel_tol = 1e-9) const;
};

/// Real-valued field sampled on a Grid. Values are validated finite at
/// construction and never mutated afterwards.
class GridFunction {
public:
  GridFunction() = default;
  GridFunction(Grid grid, std::vector<double> values);

  static GridFunction sample(const Grid& grid, const std::function<double(double)>& fn);
  static GridFunction zeros(const Grid& grid);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](int i) const { return values_[i]; }
  int size() const { return static_cast<int>(values_.size()); }

  double max_abs() const;

private:
  Grid grid_;
  std::vector<double> values_;
};

/// Complex-valued field sampled on a Grid.
class ComplexGridFunction {
public:
  using value_type = std::complex<double>;

  ComplexGridFunction() = default;
  ComplexGridFunction(Grid grid, std::vector<value_type> values);

  static ComplexGridFunction sample(const Grid& grid,
                                    const std::function<value_type(double)>& fn);

  const Grid& grid() const { return grid_; }
  const std::vector<value_type>& values() const { return values_; }
  value_type operator[](int i) const { return values_[i]; }
  int size() const { return static_cast<int>(values_.size()); }

private:
  Grid grid_;
  std::vector<value_type> values_;
};

}  // namespace qms
