#pragma once

#include "qms/calculus.hpp"
#include "qms/grid.hpp"

namespace qms {

struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;

  void validate() const {
    require(hbar > 0.0 && mass > 0.0, "constants_invalid",
            "hbar and mass must be positive");
  }
};

/// Gaussian packet parameters: center x0, width alpha, phase slope k.
struct GaussianStateSpec {
  double x0 = 0.0;
  double alpha = 1.0;
  double k = 0.0;

  void validate() const {
    require(alpha > 0.0, "state_invalid", "gaussian width alpha must be positive");
    require(std::isfinite(x0) && std::isfinite(k), "state_invalid",
            "state parameters must be finite");
  }
};

/// Pure state in modulus/phase form: psi(x) = modulus(x) * exp(i*phase(x)).
/// The modulus is nonnegative and square-normalized on its grid.
struct WaveFunction {
  GridFunction modulus;
  GridFunction phase;
  PhysicalConstants constants;

  WaveFunction(GridFunction modulus, GridFunction phase, PhysicalConstants constants);

  const Grid& grid() const { return modulus.grid(); }

  /// Explicit complex samples modulus * exp(i*phase).
  ComplexGridFunction to_complex() const;
};

/// Paired probability density and current on a common grid. Density is
/// nonnegative and normalized; the current is the motional counterpart.
struct ProbabilityFields {
  GridFunction density;
  GridFunction current;
  PhysicalConstants constants;

  ProbabilityFields(GridFunction density, GridFunction current, PhysicalConstants constants);

  const Grid& grid() const { return density.grid(); }
};

/// Relative density level below which current/density ratios are treated as
/// zero. Kept far below the tail-diagnostic level so ratio clipping never
/// bites into integrand support (clipping at the diagnostic level loses
/// percent-scale weight from momentum-spread integrals near the width-domain
/// boundary).
inline constexpr double kRatioCutoffRel = 1e-100;
inline constexpr double kRatioCutoffAbs = 1e-250;

/// Relative density level used for tail diagnostics ("negligible" checks).
inline constexpr double kTailLevelRel = 1e-12;

/// Sampled Gaussian state with modulus (alpha*sqrt(2*pi))^(-1/2) *
/// exp(-(x-x0)^2/(4*alpha^2)) and phase k*x, renormalized on the grid.
/// Rejects grids whose boundary modulus exceeds 1e-10 of the peak.
WaveFunction make_gaussian_state(const GaussianStateSpec& spec,
                                 const PhysicalConstants& constants, const Grid& grid);

/// density = modulus^2, current = (hbar/m) * modulus^2 * phase'.
ProbabilityFields to_probability_fields(const WaveFunction& psi);

struct ReconstructionResult {
  WaveFunction psi;
  /// Set when the current is non-negligible in the region where the density
  /// is below the tail-diagnostic level (the recovered phase is unreliable
  /// there).
  bool current_in_tail = false;
};

/// Modulus-phase reconstruction: modulus = sqrt(density), phase = (m/hbar) *
/// running integral of current/density anchored to zero at the grid center.
/// The ratio is zeroed below the ratio cutoff.
ReconstructionResult reconstruct_wavefunction(const ProbabilityFields& fields);

}  // namespace qms
