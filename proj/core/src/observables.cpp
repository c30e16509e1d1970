#include "qms/observables.hpp"

#include <algorithm>
#include <cmath>

namespace qms {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kHermitianTol = 1e-9;
constexpr double kPathTol = 1e-6;
}  // namespace

std::string to_string(Reading reading) {
  switch (reading) {
    case Reading::IN: return "IN";
    case Reading::PR: return "PR";
    case Reading::FR: return "FR";
  }
  return "?";
}

int Observable::max_order() const {
  int m = 0;
  for (const auto& t : terms) m = std::max(m, t.derivative_order);
  return m;
}

void Observable::validate() const {
  require(!terms.empty(), "observable_invalid", "observable needs at least one term");
  for (const auto& t : terms) {
    require(t.derivative_order >= 0 && t.derivative_order <= 2, "observable_invalid",
            "derivative order must be 0, 1 or 2");
    require(std::isfinite(t.scale.real()) && std::isfinite(t.scale.imag()),
            "observable_invalid", "term scale must be finite");
  }
}

Observable position_observable(const Grid& grid) {
  return Observable{"x", {{1.0, GridFunction::sample(grid, [](double x) { return x; }), 0}}};
}

Observable momentum_observable(const PhysicalConstants& constants) {
  return Observable{"p", {{-kI * constants.hbar, std::nullopt, 1}}};
}

Observable momentum_squared_observable(const PhysicalConstants& constants) {
  return Observable{"p2", {{-constants.hbar * constants.hbar, std::nullopt, 2}}};
}

Observable potential_observable(std::string label, GridFunction profile) {
  return Observable{std::move(label), {{1.0, std::move(profile), 0}}};
}

Observable harmonic_hamiltonian(const PhysicalConstants& constants, double omega,
                                const Grid& grid) {
  constants.validate();
  require(omega > 0.0 && std::isfinite(omega), "observable_invalid",
          "oscillator frequency must be positive");
  const double hbar = constants.hbar;
  const double m = constants.mass;
  Observable h{"H", {}};
  h.terms.push_back({-hbar * hbar / (2.0 * m), std::nullopt, 2});
  h.terms.push_back(
      {0.5 * m * omega * omega, GridFunction::sample(grid, [](double x) { return x * x; }), 0});
  return h;
}

double ParameterSet::mean(const std::string& label) const {
  auto it = means.find(label);
  require(it != means.end(), "label_unknown", "no mean recorded for '" + label + "'");
  return it->second;
}

double ParameterSet::stddev(const std::string& label) const {
  auto it = stddevs.find(label);
  require(it != stddevs.end(), "label_unknown", "no stddev recorded for '" + label + "'");
  return it->second;
}

std::complex<double> ParameterSet::correlation(const std::string& a,
                                               const std::string& b) const {
  auto it = correlations.find({a, b});
  if (it != correlations.end()) return it->second;
  auto rev = correlations.find({b, a});
  require(rev != correlations.end(), "label_unknown",
          "no correlation recorded for (" + a + "," + b + ")");
  return std::conj(rev->second);
}

std::vector<std::string> ParameterSet::labels() const {
  std::vector<std::string> out;
  out.reserve(means.size());
  for (const auto& [label, _] : means) out.push_back(label);
  return out;
}

namespace {

/// Modulus/phase derivatives shared by every observable application.
struct StateDerivatives {
  GridFunction mod_d1, mod_d2, phase_d1, phase_d2;

  explicit StateDerivatives(const WaveFunction& psi)
      : mod_d1(derivative(psi.modulus, 1)),
        mod_d2(derivative(psi.modulus, 2)),
        phase_d1(derivative(psi.phase, 1)),
        phase_d2(derivative(psi.phase, 2)) {}
};

ComplexGridFunction apply_phase_factored_impl(const Observable& obs, const WaveFunction& psi,
                                              const StateDerivatives& d) {
  obs.validate();
  const int n = psi.modulus.size();
  std::vector<std::complex<double>> out(n, 0.0);
  for (const auto& term : obs.terms) {
    if (term.profile)
      require(term.profile->grid().same_geometry(psi.grid()), "grid_mismatch",
              "observable profile grid must match the state grid");
    for (int i = 0; i < n; ++i) {
      std::complex<double> base;
      switch (term.derivative_order) {
        case 0:
          base = psi.modulus[i];
          break;
        case 1:
          base = d.mod_d1[i] + kI * psi.modulus[i] * d.phase_d1[i];
          break;
        default:
          base = d.mod_d2[i] + 2.0 * kI * d.mod_d1[i] * d.phase_d1[i] +
                 kI * psi.modulus[i] * d.phase_d2[i] -
                 psi.modulus[i] * d.phase_d1[i] * d.phase_d1[i];
          break;
      }
      if (term.profile) base *= (*term.profile)[i];
      out[i] += term.scale * base;
    }
  }
  return ComplexGridFunction(psi.grid(), std::move(out));
}

}  // namespace

ComplexGridFunction apply_phase_factored(const Observable& obs, const WaveFunction& psi) {
  return apply_phase_factored_impl(obs, psi, StateDerivatives(psi));
}

ParameterSet parameters(const WaveFunction& psi, const std::vector<Observable>& observables,
                        Reading reading) {
  require(!observables.empty(), "observable_invalid", "need at least one observable");
  const StateDerivatives derivs(psi);
  const auto w = quadrature_weights(psi.grid());
  const int n = psi.modulus.size();

  ParameterSet ps;
  ps.reading = reading;

  struct Entry {
    std::string label;
    std::vector<std::complex<double>> delta;  // (A - <A>) psi, phase-factored
  };
  std::vector<Entry> entries;
  entries.reserve(observables.size());

  for (const auto& obs : observables) {
    require(!ps.means.count(obs.label), "label_duplicate",
            "duplicate observable label '" + obs.label + "'");
    ComplexGridFunction applied = apply_phase_factored_impl(obs, psi, derivs);
    std::complex<double> mean = 0.0;
    for (int i = 0; i < n; ++i) mean += w[i] * psi.modulus[i] * applied[i];
    require(std::isfinite(mean.real()) && std::isfinite(mean.imag()), "parameters_diverged",
            "mean of '" + obs.label + "' is not finite on this state");
    const double scale = std::max(1.0, std::abs(mean.real()));
    if (std::abs(mean.imag()) > kHermitianTol * scale)
      ps.warnings.push_back("observable '" + obs.label +
                            "' looks non-hermitian (imaginary mean residual " +
                            std::to_string(mean.imag()) + ")");
    ps.means[obs.label] = mean.real();

    Entry e{obs.label, std::vector<std::complex<double>>(n)};
    for (int i = 0; i < n; ++i) e.delta[i] = applied[i] - mean.real() * psi.modulus[i];
    entries.push_back(std::move(e));
  }

  for (const auto& a : entries) {
    for (const auto& b : entries) {
      std::complex<double> c = 0.0;
      for (int i = 0; i < n; ++i) c += w[i] * std::conj(a.delta[i]) * b.delta[i];
      require(std::isfinite(c.real()) && std::isfinite(c.imag()), "parameters_diverged",
              "correlation (" + a.label + "," + b.label + ") is not finite on this state");
      ps.correlations[{a.label, b.label}] = c;
    }
  }

  for (const auto& e : entries) {
    const std::complex<double> c = ps.correlations[{e.label, e.label}];
    ps.stddevs[e.label] = std::sqrt(std::max(0.0, c.real()));
  }
  return ps;
}

std::complex<double> expectation_substitution(const ProbabilityFields& fields,
                                              const Observable& obs) {
  obs.validate();
  require(obs.max_order() <= 2, "substitution_order",
          "substitution path unavailable for derivative order > 2; use the wave-function path");

  const int n = fields.density.size();
  const auto w = quadrature_weights(fields.grid());
  const double m_over_hbar = fields.constants.mass / fields.constants.hbar;

  const GridFunction rho_d1 = derivative(fields.density, 1);
  std::vector<double> mod_v(n);
  for (int i = 0; i < n; ++i) mod_v[i] = std::sqrt(fields.density[i]);
  const GridFunction mod(fields.grid(), std::move(mod_v));
  const GridFunction mod_d2 = derivative(mod, 2);
  const GridFunction j_d1 = derivative(fields.current, 1);

  const double peak = fields.density.max_abs();
  const double ratio_floor = std::max(kRatioCutoffAbs, kRatioCutoffRel * peak);

  std::complex<double> acc = 0.0;
  for (const auto& term : obs.terms) {
    if (term.profile)
      require(term.profile->grid().same_geometry(fields.grid()), "grid_mismatch",
              "observable profile grid must match the field grid");
    std::complex<double> sum = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> s;
      switch (term.derivative_order) {
        case 0:
          s = fields.density[i];
          break;
        case 1:
          s = 0.5 * rho_d1[i] + kI * m_over_hbar * fields.current[i];
          break;
        default: {
          const double ratio = fields.density[i] >= ratio_floor
                                   ? fields.current[i] / fields.density[i]
                                   : 0.0;
          s = mod[i] * mod_d2[i] + kI * m_over_hbar * j_d1[i] -
              m_over_hbar * m_over_hbar * ratio * fields.current[i];
          break;
        }
      }
      if (term.profile) s *= (*term.profile)[i];
      sum += w[i] * s;
    }
    acc += term.scale * sum;
  }
  require(std::isfinite(acc.real()) && std::isfinite(acc.imag()), "parameters_diverged",
          "substitution expectation of '" + obs.label + "' is not finite");
  return acc;
}

ParameterSet pr_parameters(const ProbabilityFields& fields_pr,
                           const std::vector<Observable>& observables) {
  ReconstructionResult recon = reconstruct_wavefunction(fields_pr);
  ParameterSet ps = parameters(recon.psi, observables, Reading::PR);
  if (recon.current_in_tail)
    ps.warnings.push_back("current is non-negligible below the density tail level; "
                          "recovered phase is unreliable there");
  for (const auto& obs : observables) {
    if (obs.max_order() > 2) continue;
    const std::complex<double> sub = expectation_substitution(fields_pr, obs);
    const double mean = ps.mean(obs.label);
    const double tol = kPathTol * std::max(1.0, std::abs(mean));
    require(std::abs(sub.real() - mean) <= tol, "path_mismatch",
            "substitution and wave-function expectations disagree for '" + obs.label + "': " +
                std::to_string(sub.real()) + " vs " + std::to_string(mean));
  }
  return ps;
}

}  // namespace qms
