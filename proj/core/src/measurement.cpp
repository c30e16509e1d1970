#include "qms/measurement.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qms {

KernelSpec KernelSpec::ideal() { return KernelSpec(); }

KernelSpec KernelSpec::gaussian(double width) {
  require(width > 0.0 && std::isfinite(width), "kernel_invalid",
          "gaussian kernel width must be positive");
  KernelSpec k;
  k.kind_ = Kind::Gaussian;
  k.width_ = width;
  return k;
}

KernelSpec KernelSpec::gaussian_or_ideal(double width) {
  require(width >= 0.0 && std::isfinite(width), "kernel_invalid",
          "kernel width must be nonnegative");
  return width == 0.0 ? ideal() : gaussian(width);
}

KernelSpec KernelSpec::tabulated(GridFunction samples) {
  KernelSpec k;
  k.kind_ = Kind::Tabulated;
  k.samples_ = std::move(samples);
  return k;
}

KernelSpec KernelSpec::from_csv(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "file_not_found", "cannot open kernel file: " + path);
  std::vector<double> offsets, values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b)) continue;
    try {
      const double off = std::stod(a);
      const double val = std::stod(b);
      offsets.push_back(off);
      values.push_back(val);
    } catch (const std::exception&) {
      // header or stray text line
      continue;
    }
  }
  require(offsets.size() >= 8, "kernel_invalid",
          "tabulated kernel needs at least 8 rows: " + path);
  const double dx = offsets[1] - offsets[0];
  require(dx > 0.0, "kernel_invalid", "kernel offsets must be increasing: " + path);
  for (std::size_t i = 1; i < offsets.size(); ++i)
    require(std::abs(offsets[i] - offsets[i - 1] - dx) <= 1e-9 * dx, "kernel_invalid",
            "kernel offsets must be uniformly spaced: " + path);
  Grid grid(offsets.front(), dx, static_cast<int>(offsets.size()));
  return tabulated(GridFunction(grid, std::move(values)));
}

const GridFunction& KernelSpec::samples() const {
  require(samples_.has_value(), "kernel_invalid", "kernel has no tabulated samples");
  return *samples_;
}

GridFunction KernelSpec::discretize(double dx) const {
  require(kind_ != Kind::Ideal, "kernel_invalid", "the ideal kernel has no samples");
  if (kind_ == Kind::Tabulated) return *samples_;

  // Sub-cell widths are not resolvable; treat them as the delta limit.
  if (width_ < 0.5 * dx) {
    Grid cell(-dx, dx, 8);
    std::vector<double> v(8, 0.0);
    v[1] = 1.0 / dx;
    return GridFunction(cell, std::move(v));
  }

  const int half = std::max(4, static_cast<int>(std::ceil(10.0 * width_ / dx)));
  Grid grid(-half * dx, dx, 2 * half + 1);
  const double norm = 1.0 / (width_ * std::sqrt(2.0 * std::numbers::pi));
  std::vector<double> v(grid.n_points);
  double sum = 0.0;
  for (int i = 0; i < grid.n_points; ++i) {
    const double u = grid.x(i) / width_;
    v[i] = norm * std::exp(-0.5 * u * u);
    sum += v[i];
  }
  // Pin the discrete sum to the exact normalization the convolution uses.
  const double scale = 1.0 / (sum * dx);
  for (double& x : v) x *= scale;
  return GridFunction(grid, std::move(v));
}

KernelReport validate_kernel(const KernelSpec& kernel, const Grid& grid) {
  KernelReport report;
  if (kernel.is_ideal()) {
    report.valid = true;
    report.integral = 1.0;
    report.effective_width = 0.0;
    report.message = "ideal (delta) kernel";
    return report;
  }

  GridFunction k = kernel.kind() == KernelSpec::Kind::Tabulated ? kernel.samples()
                                                                : kernel.discretize(grid.dx);
  report.integral = integrate(k);
  for (int i = 0; i < k.size(); ++i)
    if (k[i] < 0.0) report.nonnegative = false;

  // Narrowest window holding all but 1e-9 of the absolute mass.
  std::vector<double> cum(k.size() + 1, 0.0);
  for (int i = 0; i < k.size(); ++i) cum[i + 1] = cum[i] + std::abs(k[i]) * k.grid().dx;
  const double total = cum.back();
  int lo = 0, hi = k.size();
  while (lo < hi && cum[lo + 1] < 1e-9 * total) ++lo;
  while (hi > lo && total - cum[hi - 1] < 1e-9 * total) --hi;
  report.effective_width = std::max(0, hi - 1 - lo) * k.grid().dx;

  const bool spacing_ok = k.grid().same_spacing(grid);
  const bool norm_ok = std::abs(report.integral - 1.0) <= 1e-6;
  report.valid = spacing_ok && norm_ok;
  if (!spacing_ok)
    report.message = "kernel spacing does not match the target grid";
  else if (!norm_ok)
    report.message = "normalization violated: kernel integrates to " +
                     std::to_string(report.integral);
  else if (!report.nonnegative)
    report.message = "kernel has negative values (permitted; entropy-gain bound not covered)";
  else
    report.message = "ok";
  return report;
}

namespace {

GridFunction apply_kernel(const GridFunction& field, const KernelSpec& kernel, const Grid& grid,
                          TransformResult& result, const char* which) {
  if (kernel.is_ideal()) return field;
  const KernelReport report = validate_kernel(kernel, grid);
  require(report.valid, "kernel_validation",
          std::string(which) + " kernel rejected: " + report.message);
  if (!report.nonnegative)
    result.warnings.push_back(std::string(which) + " kernel has negative values");
  GridFunction k = kernel.kind() == KernelSpec::Kind::Tabulated ? kernel.samples()
                                                                : kernel.discretize(grid.dx);
  ConvolutionResult conv = convolve(field, k);
  if (conv.boundary_truncation) {
    result.boundary_truncation = true;
    result.warnings.push_back(std::string(which) +
                              " field has mass within one kernel width of the grid boundary");
  }
  return std::move(conv.values);
}

}  // namespace

TransformResult transform(const ProbabilityFields& fields, const MeasurementSpec& spec,
                          double drift_tol) {
  TransformResult result{fields, 0.0, false, false, {}};
  GridFunction rho = apply_kernel(fields.density, spec.density_kernel, fields.grid(), result,
                                  "density");
  GridFunction j = apply_kernel(fields.current, spec.current_kernel, fields.grid(), result,
                                "current");

  const double norm = integrate(rho);
  result.renormalization_drift = std::abs(norm - 1.0);
  if (result.renormalization_drift > drift_tol) {
    std::vector<double> v(rho.values());
    const double inv = 1.0 / norm;
    for (double& x : v) x *= inv;
    rho = GridFunction(rho.grid(), std::move(v));
    result.renormalized = true;
    result.warnings.push_back("transformed density renormalized (drift " +
                              std::to_string(result.renormalization_drift) + ")");
  }

  result.fields = ProbabilityFields(std::move(rho), std::move(j), fields.constants);
  return result;
}

}  // namespace qms
