#pragma once

#include "qms/observables.hpp"

namespace qms {

/// Absolute parameter shifts between a recorded reading (FR or PR) and the
/// intrinsic one. All entries are nonnegative by construction.
struct ErrorIndicators {
  Reading reading = Reading::PR;
  std::map<std::string, double> mean_errors;
  std::map<std::pair<std::string, std::string>, double> correlation_errors;
  std::map<std::string, double> stddev_errors;

  double mean_error(const std::string& label) const;
  double stddev_error(const std::string& label) const;
  double correlation_error(const std::string& a, const std::string& b) const;
};

/// Shannon-type entropies of both readings plus their record-minus-intrinsic
/// deltas. The motional pair is meaningful only for states with a nonzero
/// current (`motional_defined`).
struct EntropyReport {
  double positional_in = 0.0;
  double positional_pr = 0.0;
  double motional_in = 0.0;
  double motional_pr = 0.0;
  double delta_positional = 0.0;
  double delta_motional = 0.0;
  bool motional_defined = false;
};

/// Elementwise |PR - IN| over means and stddevs; complex modulus for
/// correlations. Mean/stddev label sets must match; correlation entries are
/// compared over the pairs present in both sets.
ErrorIndicators pr_error_indicators(const ParameterSet& in_params,
                                    const ParameterSet& pr_params);

/// -integral rho ln rho dx with 0 ln 0 := 0. Rejects unnormalized or
/// negative densities.
double positional_entropy(const GridFunction& density);

struct MotionalEntropy {
  double value = 0.0;
  /// False when the current vanishes identically (integral |J| < 1e-12); the
  /// value is reported as 0 in that case rather than inventing one.
  bool defined = false;
};

/// -integral |J| ln |J| dx with the same 0 ln 0 rule.
MotionalEntropy motional_entropy(const GridFunction& current);

/// Assembles both entropies per reading and their deltas. The positional
/// delta is checked against the smoothing bound (delta >= -1e-9); violations
/// indicate a kernel outside the modeled class and are rejected.
EntropyReport entropy_indicators(const ProbabilityFields& fields_in,
                                 const ProbabilityFields& fields_pr);

}  // namespace qms
