#pragma once

#include <functional>

#include "qms/indicators.hpp"
#include "qms/measurement.hpp"

namespace qms {

/// Gaussian state measured through Gaussian kernels - the one configuration
/// with closed forms for every parameter and indicator. Width 0 means the
/// ideal kernel.
struct GaussianScenario {
  GaussianStateSpec state;
  double sigma = 0.0;
  double lambda = 0.0;
  PhysicalConstants constants;

  /// alpha^4 - lambda^4 + 2 sigma^2 (alpha^2 + lambda^2); the recorded
  /// momentum spread exists only where this is positive (equivalently
  /// alpha^2 + 2 sigma^2 > lambda^2).
  double momentum_domain_radicand() const;
  void validate() const;

  MeasurementSpec measurement() const { return MeasurementSpec::gaussian(sigma, lambda); }
};

/// Ground-state oscillator probed through a density kernel: x0 = 0, k = 0
/// and width fixed by the frequency.
struct OscillatorScenario {
  double omega = 1.0;
  double sigma = 0.0;
  PhysicalConstants constants;

  double alpha() const;
  void validate() const;
  GaussianScenario as_gaussian() const;
};

/// Grid sized for a scenario: half-span span_mult * sqrt(alpha^2 + sigma^2 +
/// lambda^2), widened when a moving state with a broader current kernel
/// pushes the momentum-spread integrand into slow tails.
Grid make_scenario_grid(const GaussianScenario& s, double span_mult = 10.0,
                        int n_points = 4096);
Grid make_scenario_grid(const OscillatorScenario& s, double span_mult = 10.0,
                        int n_points = 4096);

/// The four exact curves: all Gaussians, with variances alpha^2, alpha^2,
/// alpha^2 + sigma^2, alpha^2 + lambda^2.
struct ClosedFormFields {
  std::function<double(double)> rho_in;
  std::function<double(double)> j_in;
  std::function<double(double)> rho_pr;
  std::function<double(double)> j_pr;
};

ClosedFormFields closed_form_fields(const GaussianScenario& s);

struct ClosedFormParameters {
  ParameterSet in;
  ParameterSet pr;
};

/// Exact {x, p} parameters in both readings.
ClosedFormParameters closed_form_parameters(const GaussianScenario& s);

struct ClosedFormIndicators {
  ErrorIndicators errors;
  EntropyReport entropy;
  /// Recorded-minus-intrinsic momentum spread before taking the absolute
  /// value (it can be negative, e.g. sigma = lambda > 0).
  double momentum_spread_shift = 0.0;
};

ClosedFormIndicators closed_form_indicators(const GaussianScenario& s);

struct OscillatorClosedForms {
  double energy_mean_in = 0.0;
  double energy_stddev_in = 0.0;
  double energy_mean_pr = 0.0;
  double energy_stddev_pr = 0.0;
  double energy_mean_error = 0.0;
  double energy_stddev_error = 0.0;
};

OscillatorClosedForms oscillator_closed_forms(const OscillatorScenario& s);

}  // namespace qms
