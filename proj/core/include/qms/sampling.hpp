#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qms/indicators.hpp"
#include "qms/observables.hpp"

namespace qms {

/// Uniform doubles in [0, 1) from the 53 high bits of mt19937_64. The
/// mapping avoids distribution-object variability, so a (seed, n) pair gives
/// the same stream on every platform.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

private:
  std::mt19937_64 engine_;
};

/// One simulated detection campaign for a single observable: n recorded
/// values plus the seed that produced them.
struct SampleSet {
  std::string label;
  std::vector<double> values;
  std::uint64_t seed = 0;

  int n() const { return static_cast<int>(values.size()); }
  void validate() const;

  /// Single-column CSV, header line "<label> seed=<seed>".
  void write_csv(const std::string& path) const;
  static SampleSet read_csv(const std::string& path);
};

/// Inverse-CDF sampler over a sampled nonnegative density (trapezoid CDF,
/// quadratic inversion inside each cell).
class InverseCdfSampler {
public:
  explicit InverseCdfSampler(const GridFunction& density);
  double draw(double u01) const;

private:
  Grid grid_;
  std::vector<double> density_;
  std::vector<double> cdf_;  // normalized running mass at grid points
};

/// n independent position draws from the recorded density. Deterministic
/// given the seed; rejects n < 2.
SampleSet sample_position(const ProbabilityFields& fields_pr, int n, std::uint64_t seed);

/// n independent momentum draws from the squared modulus of the spectral
/// amplitude of psi_pr, evaluated on an adaptive band around the state's
/// momentum mean. Rejects states whose spectral mass leaks into the
/// outermost 5% of the evaluated band (> 1e-6), e.g. when the band clips at
/// the grid's resolvable-frequency limit.
SampleSet sample_momentum(const WaveFunction& psi_pr, int n, std::uint64_t seed);

/// Sample statistics: mean (1/n) sum a_k, correlation (1/n) sum
/// (a_k - <a>)(b_k - <b>) over paired indices, stddev sqrt(C(A,A)). The
/// divisor is n, not n-1. Cross-set correlations are computed only when
/// `paired` is set, which requires equal n across sets.
ParameterSet fr_statistics(const std::vector<SampleSet>& samples, bool paired);

/// Elementwise |FR - IN| over the shared labels.
ErrorIndicators fr_error_indicators(const ParameterSet& fr, const ParameterSet& in_params);

}  // namespace qms
