#pragma once

#include <complex>
#include <vector>

#include "qms/grid.hpp"

namespace qms {

/// Composite quadrature weights for a uniform grid: composite Simpson when
/// the interval count is even, Simpson plus a trailing 3/8 panel otherwise.
/// Exact for polynomials of degree <= 3 either way.
std::vector<double> quadrature_weights(const Grid& grid);

/// Integral of f over the grid span (fixed-weight rule above; exactly linear
/// in f).
double integrate(const GridFunction& f);
std::complex<double> integrate(const ComplexGridFunction& f);

/// L2 inner product with the first argument conjugated.
std::complex<double> inner_product(const ComplexGridFunction& a, const ComplexGridFunction& b);

/// Finite-difference derivative of order 1 or 2: five-point centered
/// stencils in the interior, one-sided stencils of the same accuracy order
/// at the boundaries. Rejects any other order.
GridFunction derivative(const GridFunction& f, int order);
ComplexGridFunction derivative(const ComplexGridFunction& f, int order);

/// Running integral from the first grid point, trapezoid rule. Monotone for
/// nonnegative integrands (used for sampling CDFs).
std::vector<double> cumulative_trapezoid(const GridFunction& f);

/// Running integral from the first grid point with fourth-order accuracy
/// (cubic-interpolant panels). Used where O(dx^2) bias is too coarse, e.g.
/// phase recovery.
std::vector<double> cumulative_integral(const GridFunction& f);

/// Same panels, but accumulated outward from `anchor_index` (result is 0
/// there). Integrands that explode in the tails stay accurate in the
/// interior this way; a left-to-right sweep would carry the tail magnitude
/// into every value and cancel catastrophically.
std::vector<double> cumulative_integral_from(const GridFunction& f, int anchor_index);

struct ConvolutionResult {
  GridFunction values;
  /// Set when the input carries non-negligible mass within one kernel width
  /// of a grid boundary: the kernel mass that would spread past the edge
  /// exceeds 1e-9 of the field's absolute mass.
  bool boundary_truncation = false;
};

/// Discrete stationary convolution g(x_i) = sum_j K(x_i - x_j) f(x_j) dx.
/// The kernel is sampled on its own offset grid, which must share the field
/// spacing and be cell-aligned; it must integrate to 1 within `norm_tol`.
ConvolutionResult convolve(const GridFunction& f, const GridFunction& kernel,
                           double norm_tol = 1e-6);

/// max_i |a_i - b_i| for fields on identical grids.
double sup_norm_diff(const GridFunction& a, const GridFunction& b);

}  // namespace qms
