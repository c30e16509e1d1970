#include "qms/sampling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qms {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace

void SampleSet::validate() const {
  require(n() >= 2, "sample_count", "a sample set needs at least 2 values");
  for (double v : values)
    require(std::isfinite(v), "sample_not_finite", "sample set contains a non-finite value");
}

void SampleSet::write_csv(const std::string& path) const {
  validate();
  std::ofstream out(path, std::ios::binary);  // binary: LF line endings everywhere
  require(out.good(), "file_write", "cannot write sample file: " + path);
  out << label << " seed=" << seed << "\n";
  for (double v : values) out << format_double(v) << "\n";
  require(out.good(), "file_write", "failed writing sample file: " + path);
}

SampleSet SampleSet::read_csv(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "file_not_found", "cannot open sample file: " + path);
  std::string header;
  require(static_cast<bool>(std::getline(in, header)), "sample_csv_format",
          "sample file is empty: " + path);
  std::istringstream hs(header);
  SampleSet set;
  hs >> set.label;
  std::string token;
  while (hs >> token) {
    if (token.rfind("seed=", 0) == 0) set.seed = std::stoull(token.substr(5));
  }
  require(!set.label.empty(), "sample_csv_format", "sample file header lacks a label: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    set.values.push_back(std::stod(line));
  }
  set.validate();
  return set;
}

InverseCdfSampler::InverseCdfSampler(const GridFunction& density)
    : grid_(density.grid()), density_(density.values()) {
  const int n = density.size();
  for (int i = 0; i < n; ++i)
    require(density_[i] >= 0.0, "density_negative", "sampling density must be nonnegative");
  cdf_.assign(n, 0.0);
  for (int i = 1; i < n; ++i)
    cdf_[i] = cdf_[i - 1] + 0.5 * grid_.dx * (density_[i - 1] + density_[i]);
  const double total = cdf_.back();
  require(total > 0.0, "density_zero", "sampling density has no mass");
  for (double& c : cdf_) c /= total;
  for (double& d : density_) d /= total;
}

double InverseCdfSampler::draw(double u) const {
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  int cell = static_cast<int>(it - cdf_.begin()) - 1;
  cell = std::clamp(cell, 0, static_cast<int>(cdf_.size()) - 2);

  // Density is linear inside the cell, so the local CDF is quadratic:
  // r = b t + a t^2 with b = rho_i, a = (rho_{i+1} - rho_i) / (2 dx).
  const double r = u - cdf_[cell];
  const double b = density_[cell];
  const double a = (density_[cell + 1] - density_[cell]) / (2.0 * grid_.dx);
  double t;
  const double disc = b * b + 4.0 * a * r;
  const double denom = b + std::sqrt(std::max(0.0, disc));
  if (denom > 0.0)
    t = 2.0 * r / denom;
  else
    t = 0.5 * grid_.dx;
  t = std::clamp(t, 0.0, grid_.dx);
  return grid_.x(cell) + t;
}

SampleSet sample_position(const ProbabilityFields& fields_pr, int n, std::uint64_t seed) {
  require(n >= 2, "sample_count", "need at least 2 draws");
  const InverseCdfSampler sampler(fields_pr.density);
  SeededRng rng(seed);
  SampleSet set{"x", {}, seed};
  set.values.reserve(n);
  for (int i = 0; i < n; ++i) set.values.push_back(sampler.draw(rng.uniform01()));
  return set;
}

SampleSet sample_momentum(const WaveFunction& psi_pr, int n, std::uint64_t seed) {
  require(n >= 2, "sample_count", "need at least 2 draws");
  const Grid& xg = psi_pr.grid();
  const double hbar = psi_pr.constants.hbar;

  const ParameterSet mom =
      parameters(psi_pr, {momentum_observable(psi_pr.constants)}, Reading::PR);
  const double p_mean = mom.mean("p");
  const double p_spread = std::max(mom.stddev("p"), 1e-9);

  // Evaluate the spectral density on a band around the state's momentum,
  // clipped to the frequencies the x-grid can resolve.
  const double p_nyquist = std::numbers::pi * hbar / xg.dx;
  const double lo = std::max(p_mean - 12.0 * p_spread, -p_nyquist);
  const double hi = std::min(p_mean + 12.0 * p_spread, p_nyquist);
  require(hi > lo, "aliasing_guard", "momentum band is empty; state not resolvable");
  const int n_p = std::max(xg.n_points, 1024);
  const Grid pg(lo, (hi - lo) / (n_p - 1), n_p);

  const ComplexGridFunction psi = psi_pr.to_complex();
  std::vector<double> spectral(n_p);
  const double amp_scale = xg.dx / std::sqrt(2.0 * std::numbers::pi * hbar);
  for (int j = 0; j < n_p; ++j) {
    const double p = pg.x(j);
    const std::complex<double> step = std::polar(1.0, -p * xg.dx / hbar);
    std::complex<double> phase = std::polar(1.0, -p * xg.x_min / hbar);
    std::complex<double> acc = 0.0;
    for (int i = 0; i < xg.n_points; ++i) {
      acc += psi[i] * phase;
      phase *= step;
    }
    spectral[j] = std::norm(acc * amp_scale);
  }

  GridFunction density(pg, std::move(spectral));
  const double total = integrate(density);
  require(total > 0.0, "density_zero", "spectral density has no mass");
  const int guard = std::max(1, n_p / 20);
  double outer = 0.0;
  for (int j = 0; j < guard; ++j) outer += density[j] * pg.dx;
  for (int j = n_p - guard; j < n_p; ++j) outer += density[j] * pg.dx;
  require(outer / total <= 1e-6, "aliasing_guard",
          "spectral density leaks into the outermost 5% of the momentum band "
          "(mass fraction " + std::to_string(outer / total) + ")");

  const InverseCdfSampler sampler(density);
  SeededRng rng(seed);
  SampleSet set{"p", {}, seed};
  set.values.reserve(n);
  for (int i = 0; i < n; ++i) set.values.push_back(sampler.draw(rng.uniform01()));
  return set;
}

ParameterSet fr_statistics(const std::vector<SampleSet>& samples, bool paired) {
  require(!samples.empty(), "sample_count", "need at least one sample set");
  for (const auto& s : samples) s.validate();
  if (paired)
    for (const auto& s : samples)
      require(s.n() == samples.front().n(), "sample_pairing",
              "paired correlations require equal sample counts");

  ParameterSet ps;
  ps.reading = Reading::FR;
  std::vector<std::vector<double>> centered(samples.size());
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const auto& s = samples[j];
    require(!ps.means.count(s.label), "label_duplicate",
            "duplicate sample label '" + s.label + "'");
    double mean = 0.0;
    for (double v : s.values) mean += v;
    mean /= s.n();
    ps.means[s.label] = mean;
    centered[j].resize(s.n());
    for (int k = 0; k < s.n(); ++k) centered[j][k] = s.values[k] - mean;
  }

  for (std::size_t j = 0; j < samples.size(); ++j) {
    for (std::size_t l = 0; l < samples.size(); ++l) {
      if (j != l && !paired) continue;
      double c = 0.0;
      const int count = samples[j].n();
      for (int k = 0; k < count; ++k) c += centered[j][k] * centered[l][k];
      c /= count;
      ps.correlations[{samples[j].label, samples[l].label}] = c;
    }
  }

  for (const auto& s : samples)
    ps.stddevs[s.label] =
        std::sqrt(std::max(0.0, ps.correlations[{s.label, s.label}].real()));
  return ps;
}

ErrorIndicators fr_error_indicators(const ParameterSet& fr, const ParameterSet& in_params) {
  require(fr.reading == Reading::FR, "reading_mismatch",
          "first argument must be a factual-record parameter set");
  ErrorIndicators out = pr_error_indicators(in_params, fr);
  out.reading = Reading::FR;
  return out;
}

}  // namespace qms
