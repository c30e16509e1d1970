#include "qms/calculus.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qms {

namespace {

// Fourth-order finite-difference stencils. Interior rows are centered; the
// first/last rows are one-sided. First derivative uses 5 points, second
// derivative needs 6 at the boundary to keep the accuracy order.
constexpr std::array<double, 5> kD1Center = {1, -8, 0, 8, -1};          // /12h
constexpr std::array<double, 5> kD1Edge0 = {-25, 48, -36, 16, -3};      // /12h
constexpr std::array<double, 5> kD1Edge1 = {-3, -10, 18, -6, 1};        // /12h
constexpr std::array<double, 5> kD2Center = {-1, 16, -30, 16, -1};      // /12h^2
constexpr std::array<double, 6> kD2Edge0 = {45, -154, 214, -156, 61, -10};  // /12h^2
constexpr std::array<double, 6> kD2Edge1 = {10, -15, -4, 14, -6, 1};        // /12h^2

template <typename T>
std::vector<T> differentiate(const std::vector<T>& v, double dx, int order) {
  const int n = static_cast<int>(v.size());
  std::vector<T> out(n);
  if (order == 1) {
    const double s = 1.0 / (12.0 * dx);
    auto dot5 = [&](const std::array<double, 5>& c, int base) {
      T acc = c[0] * v[base];
      for (int j = 1; j < 5; ++j) acc += c[j] * v[base + j];
      return acc * s;
    };
    out[0] = dot5(kD1Edge0, 0);
    out[1] = dot5(kD1Edge1, 0);
    for (int i = 2; i < n - 2; ++i) out[i] = dot5(kD1Center, i - 2);
    // Mirrored one-sided stencils: odd operator, so reverse and negate.
    auto dot5r = [&](const std::array<double, 5>& c, int last) {
      T acc = c[0] * v[last];
      for (int j = 1; j < 5; ++j) acc += c[j] * v[last - j];
      return acc * (-s);
    };
    out[n - 2] = dot5r(kD1Edge1, n - 1);
    out[n - 1] = dot5r(kD1Edge0, n - 1);
  } else {
    const double s = 1.0 / (12.0 * dx * dx);
    auto dot5 = [&](const std::array<double, 5>& c, int base) {
      T acc = c[0] * v[base];
      for (int j = 1; j < 5; ++j) acc += c[j] * v[base + j];
      return acc * s;
    };
    auto dot6 = [&](const std::array<double, 6>& c, int base) {
      T acc = c[0] * v[base];
      for (int j = 1; j < 6; ++j) acc += c[j] * v[base + j];
      return acc * s;
    };
    out[0] = dot6(kD2Edge0, 0);
    out[1] = dot6(kD2Edge1, 0);
    for (int i = 2; i < n - 2; ++i) out[i] = dot5(kD2Center, i - 2);
    // Even operator: reversed stencils keep their signs.
    auto dot6r = [&](const std::array<double, 6>& c, int last) {
      T acc = c[0] * v[last];
      for (int j = 1; j < 6; ++j) acc += c[j] * v[last - j];
      return acc * s;
    };
    out[n - 2] = dot6r(kD2Edge1, n - 1);
    out[n - 1] = dot6r(kD2Edge0, n - 1);
  }
  return out;
}

}  // namespace

std::vector<double> quadrature_weights(const Grid& grid) {
  const int n = grid.n_points;
  const double h = grid.dx;
  std::vector<double> w(n, 0.0);
  const int intervals = n - 1;
  // Composite Simpson over an even interval count; when the count is odd,
  // close with a 3/8 panel on the last three intervals.
  const int simpson_end = (intervals % 2 == 0) ? n - 1 : n - 4;
  if (simpson_end > 0) {
    w[0] += h / 3.0;
    w[simpson_end] += h / 3.0;
    for (int i = 1; i < simpson_end; ++i) w[i] += (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
  }
  if (intervals % 2 != 0) {
    const double c = 3.0 * h / 8.0;
    w[n - 4] += c;
    w[n - 3] += 3.0 * c;
    w[n - 2] += 3.0 * c;
    w[n - 1] += c;
  }
  return w;
}

double integrate(const GridFunction& f) {
  const auto w = quadrature_weights(f.grid());
  double acc = 0.0;
  for (int i = 0; i < f.size(); ++i) acc += w[i] * f[i];
  return acc;
}

std::complex<double> integrate(const ComplexGridFunction& f) {
  const auto w = quadrature_weights(f.grid());
  std::complex<double> acc = 0.0;
  for (int i = 0; i < f.size(); ++i) acc += w[i] * f[i];
  return acc;
}

std::complex<double> inner_product(const ComplexGridFunction& a, const ComplexGridFunction& b) {
  require(a.grid().same_geometry(b.grid()), "grid_mismatch",
          "inner product requires identical grids");
  const auto w = quadrature_weights(a.grid());
  std::complex<double> acc = 0.0;
  for (int i = 0; i < a.size(); ++i) acc += w[i] * std::conj(a[i]) * b[i];
  return acc;
}

GridFunction derivative(const GridFunction& f, int order) {
  require(order == 1 || order == 2, "derivative_order", "derivative order must be 1 or 2");
  return GridFunction(f.grid(), differentiate(f.values(), f.grid().dx, order));
}

ComplexGridFunction derivative(const ComplexGridFunction& f, int order) {
  require(order == 1 || order == 2, "derivative_order", "derivative order must be 1 or 2");
  return ComplexGridFunction(f.grid(), differentiate(f.values(), f.grid().dx, order));
}

std::vector<double> cumulative_trapezoid(const GridFunction& f) {
  const int n = f.size();
  const double h = f.grid().dx;
  std::vector<double> c(n, 0.0);
  for (int i = 1; i < n; ++i) c[i] = c[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
  return c;
}

std::vector<double> cumulative_integral(const GridFunction& f) {
  const int n = f.size();
  const double h = f.grid().dx;
  std::vector<double> c(n, 0.0);
  if (n < 4) return cumulative_trapezoid(f);
  // Panel integrals from the cubic through the four nearest samples
  // (Adams-Moulton weights at the ends).
  c[1] = c[0] + h / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
  for (int i = 2; i < n - 1; ++i)
    c[i] = c[i - 1] + h / 24.0 * (-f[i - 2] + 13.0 * f[i - 1] + 13.0 * f[i] - f[i + 1]);
  c[n - 1] = c[n - 2] +
             h / 24.0 * (9.0 * f[n - 1] + 19.0 * f[n - 2] - 5.0 * f[n - 3] + f[n - 4]);
  return c;
}

ConvolutionResult convolve(const GridFunction& f, const GridFunction& kernel, double norm_tol) {
  const Grid& fg = f.grid();
  const Grid& kg = kernel.grid();
  require(fg.same_spacing(kg), "kernel_spacing",
          "kernel must be sampled at the field spacing");
  // Kernel cells must line up with field cells.
  const double shift = kg.x_min / fg.dx;
  const double nearest = std::round(shift);
  require(std::abs(shift - nearest) <= 1e-6 * std::max(1.0, std::abs(shift)), "kernel_alignment",
          "kernel offsets must be integer multiples of the field spacing");
  const int offset0 = static_cast<int>(nearest);

  double mass = 0.0;
  for (int j = 0; j < kernel.size(); ++j) mass += kernel[j];
  mass *= fg.dx;
  require(std::abs(mass - 1.0) <= norm_tol, "kernel_normalization",
          "kernel must integrate to 1 (got " + std::to_string(mass) + ")");

  const int n = fg.n_points;
  const int m = kernel.size();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    // g_i = sum_j K_j f_{i - (offset0 + j)}
    const int src_hi = i - offset0;           // j = 0 term reads f[src_hi]
    const int j_lo = std::max(0, src_hi - (n - 1));
    const int j_hi = std::min(m - 1, src_hi);
    double acc = 0.0;
    for (int j = j_lo; j <= j_hi; ++j) acc += kernel[j] * f[src_hi - j];
    out[i] = acc * fg.dx;
  }

  // Truncation diagnostic: f_j spreads to outputs [j + offset0, j + offset0
  // + m - 1]; where that window leaves the grid, the corresponding kernel
  // mass is lost. Flag when the total leaked mass is non-negligible.
  std::vector<double> prefix(m + 1, 0.0);
  for (int j = 0; j < m; ++j) prefix[j + 1] = prefix[j] + std::abs(kernel[j]) * fg.dx;
  double total_abs = 0.0;
  for (int j = 0; j < n; ++j) total_abs += std::abs(f[j]) * fg.dx;
  double leaked = 0.0;
  for (int j = 0; j < n; ++j) {
    const int below = -(j + offset0);             // outputs falling under index 0
    const int above = j + offset0 + m - 1 - (n - 1);  // outputs past the last index
    if (below <= 0 && above <= 0) continue;
    double off_mass = 0.0;
    if (below > 0) off_mass += prefix[std::min(m, below)];
    if (above > 0) off_mass += prefix[m] - prefix[std::max(0, m - above)];
    leaked += std::abs(f[j]) * fg.dx * off_mass;
  }
  const bool flagged = total_abs > 0.0 && leaked > 1e-9 * total_abs;
  return ConvolutionResult{GridFunction(fg, std::move(out)), flagged};
}

double sup_norm_diff(const GridFunction& a, const GridFunction& b) {
  require(a.size() == b.size(), "field_shape", "fields must have equal length");
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace qms
