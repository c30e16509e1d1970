#include "qms/indicators.hpp"

#include <cmath>

namespace qms {

namespace {
constexpr double kGainTol = 1e-9;
constexpr double kCurrentMassFloor = 1e-12;
}  // namespace

double ErrorIndicators::mean_error(const std::string& label) const {
  auto it = mean_errors.find(label);
  require(it != mean_errors.end(), "label_unknown", "no mean error for '" + label + "'");
  return it->second;
}

double ErrorIndicators::stddev_error(const std::string& label) const {
  auto it = stddev_errors.find(label);
  require(it != stddev_errors.end(), "label_unknown", "no stddev error for '" + label + "'");
  return it->second;
}

double ErrorIndicators::correlation_error(const std::string& a, const std::string& b) const {
  auto it = correlation_errors.find({a, b});
  require(it != correlation_errors.end(), "label_unknown",
          "no correlation error for (" + a + "," + b + ")");
  return it->second;
}

ErrorIndicators pr_error_indicators(const ParameterSet& in_params,
                                    const ParameterSet& pr_params) {
  require(in_params.labels() == pr_params.labels(), "label_mismatch",
          "intrinsic and recorded parameter sets cover different observables");
  ErrorIndicators out;
  out.reading = pr_params.reading;
  for (const auto& [label, mean] : pr_params.means)
    out.mean_errors[label] = std::abs(mean - in_params.mean(label));
  for (const auto& [label, sd] : pr_params.stddevs)
    out.stddev_errors[label] = std::abs(sd - in_params.stddev(label));
  for (const auto& [pair, c] : pr_params.correlations) {
    auto it = in_params.correlations.find(pair);
    if (it != in_params.correlations.end())
      out.correlation_errors[pair] = std::abs(c - it->second);
  }
  return out;
}

namespace {

double shannon_integral(const GridFunction& f) {
  const auto w = quadrature_weights(f.grid());
  double acc = 0.0;
  for (int i = 0; i < f.size(); ++i) {
    const double v = std::abs(f[i]);
    if (v > 0.0) acc -= w[i] * v * std::log(v);
  }
  return acc;
}

}  // namespace

double positional_entropy(const GridFunction& density) {
  for (int i = 0; i < density.size(); ++i)
    require(density[i] >= 0.0, "density_negative", "density must be nonnegative");
  const double norm = integrate(density);
  require(std::abs(norm - 1.0) <= 1e-6, "density_unnormalized",
          "density must integrate to 1 (got " + std::to_string(norm) + ")");
  return shannon_integral(density);
}

MotionalEntropy motional_entropy(const GridFunction& current) {
  double mass = 0.0;
  const auto w = quadrature_weights(current.grid());
  for (int i = 0; i < current.size(); ++i) mass += w[i] * std::abs(current[i]);
  if (mass < kCurrentMassFloor) return {0.0, false};
  return {shannon_integral(current), true};
}

EntropyReport entropy_indicators(const ProbabilityFields& fields_in,
                                 const ProbabilityFields& fields_pr) {
  EntropyReport report;
  report.positional_in = positional_entropy(fields_in.density);
  report.positional_pr = positional_entropy(fields_pr.density);
  report.delta_positional = report.positional_pr - report.positional_in;
  require(report.delta_positional >= -kGainTol, "entropy_gain_violation",
          "positional entropy decreased under the record transform (" +
              std::to_string(report.delta_positional) +
              "); kernel outside the modeled class");

  const MotionalEntropy t_in = motional_entropy(fields_in.current);
  const MotionalEntropy t_pr = motional_entropy(fields_pr.current);
  report.motional_defined = t_in.defined && t_pr.defined;
  report.motional_in = t_in.value;
  report.motional_pr = t_pr.value;
  report.delta_motional = report.motional_defined ? t_pr.value - t_in.value : 0.0;
  return report;
}

}  // namespace qms
