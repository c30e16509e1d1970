#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qms/state.hpp"

namespace qms {

/// Device response kernel for one probabilistic aspect (density or current).
/// `ideal` is the delta-function limit; `gaussian` carries the device width;
/// `tabulated` holds raw offset samples (possibly invalid - validation is a
/// separate step so broken kernels can be reported instead of crashing).
class KernelSpec {
public:
  enum class Kind { Ideal, Gaussian, Tabulated };

  static KernelSpec ideal();
  static KernelSpec gaussian(double width);
  /// Width 0 maps to the ideal kernel.
  static KernelSpec gaussian_or_ideal(double width);
  static KernelSpec tabulated(GridFunction samples);
  /// Two-column CSV (offset,value), one pair per line, optional header line.
  static KernelSpec from_csv(const std::string& path);

  Kind kind() const { return kind_; }
  bool is_ideal() const { return kind_ == Kind::Ideal; }
  double width() const { return width_; }
  const GridFunction& samples() const;

  /// Offset-grid samples at spacing dx, normalized so the discrete sum
  /// integrates to exactly 1. Gaussian kernels narrower than dx/2 degenerate
  /// to the single-cell delta. Ideal kernels have no discretization.
  GridFunction discretize(double dx) const;

private:
  KernelSpec() = default;
  Kind kind_ = Kind::Ideal;
  double width_ = 0.0;
  std::optional<GridFunction> samples_;
};

struct KernelReport {
  bool valid = false;
  double integral = 0.0;
  bool nonnegative = true;
  /// Width of the narrowest centered window holding all but 1e-9 of the
  /// kernel mass; 0 for the ideal kernel.
  double effective_width = 0.0;
  std::string message;
};

/// Checks normalization (within 1e-6) and sign of a kernel as it would be
/// applied on the given grid. Bad kernels produce a failed report, not an
/// error.
KernelReport validate_kernel(const KernelSpec& kernel, const Grid& grid);

/// Device model: density kernel G (width sigma) and current kernel Lambda
/// (width lambda), both stationary difference kernels.
struct MeasurementSpec {
  KernelSpec density_kernel = KernelSpec::ideal();
  KernelSpec current_kernel = KernelSpec::ideal();

  static MeasurementSpec gaussian(double sigma, double lambda) {
    return MeasurementSpec{KernelSpec::gaussian_or_ideal(sigma),
                           KernelSpec::gaussian_or_ideal(lambda)};
  }
};

struct TransformResult {
  ProbabilityFields fields;
  /// |integral drift| of the raw transformed density before renormalization.
  double renormalization_drift = 0.0;
  bool renormalized = false;
  bool boundary_truncation = false;
  std::vector<std::string> warnings;
};

/// The measurement map: density -> G (*) density, current -> Lambda (*)
/// current. Ideal kernels pass fields through unchanged. The output density
/// is renormalized when the drift exceeds `drift_tol` (recorded in the
/// result). Kernel validation failures propagate as errors.
TransformResult transform(const ProbabilityFields& fields, const MeasurementSpec& spec,
                          double drift_tol = 1e-9);

}  // namespace qms
