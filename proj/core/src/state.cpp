#include "qms/state.hpp"

#include <cmath>
#include <numbers>

namespace qms {

namespace {
constexpr double kNormTol = 1e-6;
}

WaveFunction::WaveFunction(GridFunction modulus_, GridFunction phase_,
                           PhysicalConstants constants_)
    : modulus(std::move(modulus_)), phase(std::move(phase_)), constants(constants_) {
  constants.validate();
  require(modulus.grid().same_geometry(phase.grid()), "grid_mismatch",
          "modulus and phase must share one grid");
  for (int i = 0; i < modulus.size(); ++i)
    require(modulus[i] >= 0.0, "modulus_negative", "wave-function modulus must be nonnegative");
  std::vector<double> sq(modulus.size());
  for (int i = 0; i < modulus.size(); ++i) sq[i] = modulus[i] * modulus[i];
  const double norm = integrate(GridFunction(modulus.grid(), std::move(sq)));
  require(std::abs(norm - 1.0) <= kNormTol, "state_unnormalized",
          "wave function must be square-normalized (got " + std::to_string(norm) + ")");
}

ComplexGridFunction WaveFunction::to_complex() const {
  std::vector<std::complex<double>> v(modulus.size());
  for (int i = 0; i < modulus.size(); ++i)
    v[i] = std::polar(modulus[i], phase[i]);
  return ComplexGridFunction(grid(), std::move(v));
}

ProbabilityFields::ProbabilityFields(GridFunction density_, GridFunction current_,
                                     PhysicalConstants constants_)
    : density(std::move(density_)), current(std::move(current_)), constants(constants_) {
  constants.validate();
  require(density.grid().same_geometry(current.grid()), "grid_mismatch",
          "density and current must share one grid");
  for (int i = 0; i < density.size(); ++i)
    require(density[i] >= 0.0, "density_negative", "probability density must be nonnegative");
  const double norm = integrate(density);
  require(std::abs(norm - 1.0) <= kNormTol, "density_unnormalized",
          "probability density must integrate to 1 (got " + std::to_string(norm) + ")");
}

WaveFunction make_gaussian_state(const GaussianStateSpec& spec,
                                 const PhysicalConstants& constants, const Grid& grid) {
  spec.validate();
  constants.validate();
  const double peak_mod = std::pow(spec.alpha * std::sqrt(2.0 * std::numbers::pi), -0.5);
  auto mod_at = [&](double x) {
    const double u = (x - spec.x0) / (2.0 * spec.alpha);
    return peak_mod * std::exp(-u * u);
  };
  require(mod_at(grid.x_min) < 1e-10 * peak_mod && mod_at(grid.x_max()) < 1e-10 * peak_mod,
          "grid_too_narrow",
          "grid boundaries must lie in the far tail of the state (modulus < 1e-10 of peak)");

  GridFunction modulus = GridFunction::sample(grid, mod_at);
  std::vector<double> sq(modulus.size());
  for (int i = 0; i < modulus.size(); ++i) sq[i] = modulus[i] * modulus[i];
  const double norm = integrate(GridFunction(grid, std::move(sq)));
  std::vector<double> scaled(modulus.size());
  const double inv = 1.0 / std::sqrt(norm);
  for (int i = 0; i < modulus.size(); ++i) scaled[i] = modulus[i] * inv;

  GridFunction phase = GridFunction::sample(grid, [&](double x) { return spec.k * x; });
  return WaveFunction(GridFunction(grid, std::move(scaled)), std::move(phase), constants);
}

ProbabilityFields to_probability_fields(const WaveFunction& psi) {
  const int n = psi.modulus.size();
  std::vector<double> rho(n);
  for (int i = 0; i < n; ++i) rho[i] = psi.modulus[i] * psi.modulus[i];
  const GridFunction phase_slope = derivative(psi.phase, 1);
  const double scale = psi.constants.hbar / psi.constants.mass;
  std::vector<double> j(n);
  for (int i = 0; i < n; ++i) j[i] = scale * rho[i] * phase_slope[i];
  return ProbabilityFields(GridFunction(psi.grid(), std::move(rho)),
                           GridFunction(psi.grid(), std::move(j)), psi.constants);
}

ReconstructionResult reconstruct_wavefunction(const ProbabilityFields& fields) {
  const int n = fields.density.size();
  const Grid& grid = fields.grid();
  const double peak = fields.density.max_abs();
  const double ratio_floor = std::max(kRatioCutoffAbs, kRatioCutoffRel * peak);

  std::vector<double> mod(n), ratio(n);
  for (int i = 0; i < n; ++i) {
    mod[i] = std::sqrt(fields.density[i]);
    ratio[i] = fields.density[i] >= ratio_floor ? fields.current[i] / fields.density[i] : 0.0;
  }

  // Diagnostic: current present where the density has already died off.
  const double tail_level = kTailLevelRel * peak;
  const double j_peak = fields.current.max_abs();
  bool current_in_tail = false;
  for (int i = 0; i < n && !current_in_tail; ++i)
    if (fields.density[i] < tail_level && std::abs(fields.current[i]) > 1e-9 * j_peak)
      current_in_tail = true;

  const double m_over_hbar = fields.constants.mass / fields.constants.hbar;
  std::vector<double> running =
      cumulative_integral(GridFunction(grid, std::move(ratio)));
  const double anchor = running[n / 2];
  std::vector<double> phase(n);
  for (int i = 0; i < n; ++i) phase[i] = m_over_hbar * (running[i] - anchor);

  WaveFunction psi(GridFunction(grid, std::move(mod)), GridFunction(grid, std::move(phase)),
                   fields.constants);
  return ReconstructionResult{std::move(psi), current_in_tail};
}

}  // namespace qms
