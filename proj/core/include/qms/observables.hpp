#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qms/state.hpp"

namespace qms {

enum class Reading { IN, PR, FR };

std::string to_string(Reading reading);

/// One term of an observable: scale * profile(x) * (d/dx)^order. The scale
/// may be complex (momentum carries -i*hbar); a missing profile means 1.
struct ObservableTerm {
  std::complex<double> scale = 1.0;
  std::optional<GridFunction> profile;
  int derivative_order = 0;
};

/// Sum of multiplicative/derivative terms with order <= 2, e.g. position,
/// momentum, potentials and Hamiltonians built from them.
struct Observable {
  std::string label;
  std::vector<ObservableTerm> terms;

  int max_order() const;
  void validate() const;
};

Observable position_observable(const Grid& grid);
Observable momentum_observable(const PhysicalConstants& constants);
Observable momentum_squared_observable(const PhysicalConstants& constants);
Observable potential_observable(std::string label, GridFunction profile);
/// H = p^2/(2m) + (m omega^2 / 2) x^2.
Observable harmonic_hamiltonian(const PhysicalConstants& constants, double omega,
                                const Grid& grid);

/// Probabilistic numerical parameters of a set of observables in one
/// reading: means, pairwise correlations (complex), standard deviations.
struct ParameterSet {
  Reading reading = Reading::IN;
  std::map<std::string, double> means;
  std::map<std::pair<std::string, std::string>, std::complex<double>> correlations;
  std::map<std::string, double> stddevs;
  std::vector<std::string> warnings;

  double mean(const std::string& label) const;
  double stddev(const std::string& label) const;
  std::complex<double> correlation(const std::string& a, const std::string& b) const;
  std::vector<std::string> labels() const;
};

/// (A psi) with the global phase factor exp(i*phase) divided out. Inner
/// products between two such fields equal the physical matrix elements, and
/// the integrands stay smooth even where the recovered phase winds fast.
ComplexGridFunction apply_phase_factored(const Observable& obs, const WaveFunction& psi);

/// Wave-function-path parameters: means (psi, A psi), correlations
/// (dA psi, dB psi), standard deviations sqrt(C(A,A)). Non-hermitian-looking
/// observables (imaginary mean residual above 1e-9) are flagged in
/// `warnings` rather than silently truncated.
ParameterSet parameters(const WaveFunction& psi, const std::vector<Observable>& observables,
                        Reading reading);

/// Expectation through the density/current substitutions, never touching the
/// wave function:
///   order 0: integral of profile * rho
///   order 1: integral of profile * (rho'/2 + i (m/hbar) J)
///   order 2: integral of profile * (sqrt(rho) * sqrt(rho)'' + i (m/hbar) J'
///            - (m/hbar)^2 J^2/rho)
/// Rejects terms of order > 2 ("substitution path unavailable").
std::complex<double> expectation_substitution(const ProbabilityFields& fields,
                                              const Observable& obs);

/// Reconstructs the record-side wave function from the fields, then runs the
/// wave-function path; means of order <= 2 observables are cross-checked
/// against the substitution path within 1e-6.
ParameterSet pr_parameters(const ProbabilityFields& fields_pr,
                           const std::vector<Observable>& observables);

}  // namespace qms
