#include "qms/grid.hpp"

#include <algorithm>
#include <cmath>

namespace qms {

Grid::Grid(double x_min_, double dx_, int n_points_)
    : x_min(x_min_), dx(dx_), n_points(n_points_) {
  require(std::isfinite(x_min) && std::isfinite(dx), "grid_invalid",
          "grid origin and spacing must be finite");
  require(dx > 0.0, "grid_invalid", "grid spacing must be positive");
  require(n_points >= 8, "grid_invalid", "grid needs at least 8 points");
}

Grid Grid::centered(double center, double half_span, int n_points) {
  require(half_span > 0.0, "grid_invalid", "grid half-span must be positive");
  require(n_points >= 8, "grid_invalid", "grid needs at least 8 points");
  const double dx = 2.0 * half_span / static_cast<double>(n_points - 1);
  return Grid(center - half_span, dx, n_points);
}

bool Grid::same_spacing(const Grid& other, double rel_tol) const {
  return std::abs(dx - other.dx) <= rel_tol * std::max(dx, other.dx);
}

bool Grid::same_geometry(const Grid& other, double rel_tol) const {
  const double scale = std::max({std::abs(x_min), std::abs(other.x_min), dx});
  return n_points == other.n_points && same_spacing(other, rel_tol) &&
         std::abs(x_min - other.x_min) <= rel_tol * scale;
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  require(static_cast<int>(values_.size()) == grid_.n_points, "field_shape",
          "field length must equal grid point count");
  for (double v : values_)
    require(std::isfinite(v), "field_not_finite", "field contains a non-finite value");
}

GridFunction GridFunction::sample(const Grid& grid, const std::function<double(double)>& fn) {
  std::vector<double> v(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) v[i] = fn(grid.x(i));
  return GridFunction(grid, std::move(v));
}

GridFunction GridFunction::zeros(const Grid& grid) {
  return GridFunction(grid, std::vector<double>(grid.n_points, 0.0));
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

ComplexGridFunction::ComplexGridFunction(Grid grid, std::vector<value_type> values)
    : grid_(grid), values_(std::move(values)) {
  require(static_cast<int>(values_.size()) == grid_.n_points, "field_shape",
          "field length must equal grid point count");
  for (const auto& v : values_)
    require(std::isfinite(v.real()) && std::isfinite(v.imag()), "field_not_finite",
            "field contains a non-finite value");
}

ComplexGridFunction ComplexGridFunction::sample(
    const Grid& grid, const std::function<value_type(double)>& fn) {
  std::vector<value_type> v(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) v[i] = fn(grid.x(i));
  return ComplexGridFunction(grid, std::move(v));
}

}  // namespace qms
