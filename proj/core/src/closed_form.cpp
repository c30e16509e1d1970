#include "qms/closed_form.hpp"

#include <cmath>
#include <numbers>

namespace qms {

namespace {

double gauss_density(double x, double center, double variance) {
  const double u = x - center;
  return std::exp(-0.5 * u * u / variance) / std::sqrt(2.0 * std::numbers::pi * variance);
}

/// Differential entropy of a normal density with the given variance.
double gaussian_entropy(double variance) {
  return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * variance);
}

}  // namespace

double GaussianScenario::momentum_domain_radicand() const {
  const double a2 = state.alpha * state.alpha;
  const double l2 = lambda * lambda;
  return (a2 + l2) * (a2 - l2 + 2.0 * sigma * sigma);
}

void GaussianScenario::validate() const {
  state.validate();
  constants.validate();
  require(sigma >= 0.0 && std::isfinite(sigma), "kernel_invalid",
          "density kernel width must be nonnegative");
  require(lambda >= 0.0 && std::isfinite(lambda), "kernel_invalid",
          "current kernel width must be nonnegative");
  require(momentum_domain_radicand() > 0.0, "momentum_width_domain",
          "recorded momentum spread undefined for these widths "
          "(requires alpha^2 + 2*sigma^2 > lambda^2)");
}

double OscillatorScenario::alpha() const {
  return std::sqrt(constants.hbar / (2.0 * constants.mass * omega));
}

void OscillatorScenario::validate() const {
  constants.validate();
  require(omega > 0.0 && std::isfinite(omega), "oscillator_invalid",
          "oscillator frequency must be positive");
  require(sigma >= 0.0 && std::isfinite(sigma), "kernel_invalid",
          "density kernel width must be nonnegative");
}

GaussianScenario OscillatorScenario::as_gaussian() const {
  validate();
  return GaussianScenario{{0.0, alpha(), 0.0}, sigma, 0.0, constants};
}

Grid make_scenario_grid(const GaussianScenario& s, double span_mult, int n_points) {
  s.validate();
  require(span_mult >= 4.0, "grid_invalid", "span multiplier must be at least 4");
  const double a2 = s.state.alpha * s.state.alpha;
  const double v_rho = a2 + s.sigma * s.sigma;
  const double v_j = a2 + s.lambda * s.lambda;
  double half = span_mult * std::sqrt(a2 + s.sigma * s.sigma + s.lambda * s.lambda);
  if (s.state.k != 0.0 && v_j > v_rho) {
    // Momentum-spread integrand decays at rate 2/v_j - 1/v_rho (positive on
    // the valid domain); cover ~5.5 of its own widths.
    const double rate = 2.0 / v_j - 1.0 / v_rho;
    half = std::max(half, 5.5 / std::sqrt(rate));
  }
  return Grid::centered(s.state.x0, half, n_points);
}

Grid make_scenario_grid(const OscillatorScenario& s, double span_mult, int n_points) {
  return make_scenario_grid(s.as_gaussian(), span_mult, n_points);
}

ClosedFormFields closed_form_fields(const GaussianScenario& s) {
  s.validate();
  const double x0 = s.state.x0;
  const double a2 = s.state.alpha * s.state.alpha;
  const double v_pr = a2 + s.sigma * s.sigma;
  const double v_j = a2 + s.lambda * s.lambda;
  const double j_scale = s.constants.hbar * s.state.k / s.constants.mass;
  ClosedFormFields f;
  f.rho_in = [=](double x) { return gauss_density(x, x0, a2); };
  f.j_in = [=](double x) { return j_scale * gauss_density(x, x0, a2); };
  f.rho_pr = [=](double x) { return gauss_density(x, x0, v_pr); };
  f.j_pr = [=](double x) { return j_scale * gauss_density(x, x0, v_j); };
  return f;
}

ClosedFormParameters closed_form_parameters(const GaussianScenario& s) {
  s.validate();
  const double hbar = s.constants.hbar;
  const double a2 = s.state.alpha * s.state.alpha;
  const double v_pr = a2 + s.sigma * s.sigma;
  const double k = s.state.k;

  const double dx_in = s.state.alpha;
  const double dx_pr = std::sqrt(v_pr);
  const double dp_in = hbar / (2.0 * s.state.alpha);
  // k-dependent part vanishes identically at k = 0 (no current).
  const double k_term = k == 0.0 ? 0.0
                                 : k * k * (v_pr / std::sqrt(s.momentum_domain_radicand()) - 1.0);
  const double dp_pr = hbar * std::sqrt(k_term + 1.0 / (4.0 * v_pr));

  const std::complex<double> cxp{0.0, 0.5 * hbar};

  auto fill = [&](Reading reading, double dx, double dp) {
    ParameterSet ps;
    ps.reading = reading;
    ps.means["x"] = s.state.x0;
    ps.means["p"] = hbar * k;
    ps.stddevs["x"] = dx;
    ps.stddevs["p"] = dp;
    ps.correlations[{"x", "x"}] = dx * dx;
    ps.correlations[{"p", "p"}] = dp * dp;
    ps.correlations[{"x", "p"}] = cxp;
    ps.correlations[{"p", "x"}] = std::conj(cxp);
    return ps;
  };
  return ClosedFormParameters{fill(Reading::IN, dx_in, dp_in), fill(Reading::PR, dx_pr, dp_pr)};
}

ClosedFormIndicators closed_form_indicators(const GaussianScenario& s) {
  const ClosedFormParameters p = closed_form_parameters(s);
  ClosedFormIndicators out;
  out.errors = pr_error_indicators(p.in, p.pr);
  out.momentum_spread_shift = p.pr.stddev("p") - p.in.stddev("p");

  const double a2 = s.state.alpha * s.state.alpha;
  EntropyReport& e = out.entropy;
  e.positional_in = gaussian_entropy(a2);
  e.positional_pr = gaussian_entropy(a2 + s.sigma * s.sigma);
  e.delta_positional = 0.5 * std::log1p(s.sigma * s.sigma / a2);
  e.motional_defined = s.state.k != 0.0;
  if (e.motional_defined) {
    const double c = s.constants.hbar * std::abs(s.state.k) / s.constants.mass;
    e.motional_in = -c * std::log(c) + c * gaussian_entropy(a2);
    e.motional_pr = -c * std::log(c) + c * gaussian_entropy(a2 + s.lambda * s.lambda);
    e.delta_motional = 0.5 * c * std::log1p(s.lambda * s.lambda / a2);
  }
  return out;
}

OscillatorClosedForms oscillator_closed_forms(const OscillatorScenario& s) {
  s.validate();
  const double hbar = s.constants.hbar;
  const double m = s.constants.mass;
  const double w = s.omega;
  const double s2 = s.sigma * s.sigma;
  const double b = hbar + 2.0 * m * w * s2;

  OscillatorClosedForms out;
  out.energy_mean_in = 0.5 * hbar * w;
  out.energy_stddev_in = 0.0;
  out.energy_mean_pr = w * (hbar * hbar + b * b) / (4.0 * b);
  out.energy_stddev_pr = std::numbers::sqrt2 * m * w * w * s2 * (hbar + m * w * s2) / b;
  out.energy_mean_error = out.energy_mean_pr - out.energy_mean_in;
  out.energy_stddev_error = out.energy_stddev_pr - out.energy_stddev_in;
  return out;
}

}  // namespace qms
