#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qms/state.hpp"

using namespace qms;

namespace {

const PhysicalConstants kUnit{1.0, 1.0};

Grid default_grid(double x0, double alpha) {
  return Grid::centered(x0, 10.0 * alpha, 4096);
}

GridFunction gaussian_density(const Grid& g, double center, double variance) {
  return GridFunction::sample(g, [=](double x) {
    const double u = x - center;
    return std::exp(-0.5 * u * u / variance) /
           std::sqrt(2.0 * std::numbers::pi * variance);
  });
}

}  // namespace

TEST_CASE("make_gaussian_state: squared modulus peak is 1/sqrt(2 pi)") {
  auto psi = make_gaussian_state({0.0, 1.0, 0.0}, kUnit, default_grid(0.0, 1.0));
  const int center = psi.grid().n_points / 2;
  // nearest grid point to x = 0
  const double x = psi.grid().x(center);
  const double expected = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  CHECK(psi.modulus[center] * psi.modulus[center] == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("make_gaussian_state: normalized for any spec") {
  for (double alpha : {0.3, 1.0, 2.7}) {
    auto psi = make_gaussian_state({1.5, alpha, 2.0}, kUnit, default_grid(1.5, alpha));
    std::vector<double> sq(psi.modulus.size());
    for (int i = 0; i < psi.modulus.size(); ++i) sq[i] = psi.modulus[i] * psi.modulus[i];
    CHECK(std::abs(integrate(GridFunction(psi.grid(), sq)) - 1.0) < 1e-8);
  }
}

TEST_CASE("make_gaussian_state: phase is k*x") {
  auto psi = make_gaussian_state({2.0, 1.0, 3.0}, kUnit, default_grid(2.0, 1.0));
  for (int i = 0; i < psi.phase.size(); i += 97)
    CHECK(psi.phase[i] == doctest::Approx(3.0 * psi.grid().x(i)).epsilon(1e-12));
}

TEST_CASE("make_gaussian_state: rejects grids with visible boundary modulus") {
  Grid narrow = Grid::centered(0.0, 3.0, 128);
  CHECK_THROWS_AS(make_gaussian_state({0.0, 1.0, 0.0}, kUnit, narrow), ValidationError);
}

TEST_CASE("to_probability_fields: peak current is hbar*k/m / sqrt(2 pi)") {
  auto psi = make_gaussian_state({0.0, 1.0, 2.0}, kUnit, default_grid(0.0, 1.0));
  auto fields = to_probability_fields(psi);
  const int center = psi.grid().n_points / 2;
  const double x = psi.grid().x(center);
  const double expected = 2.0 * std::exp(-x * x / 2.0) / std::sqrt(2.0 * std::numbers::pi);
  CHECK(fields.current[center] == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("to_probability_fields: real state carries no current") {
  auto psi = make_gaussian_state({0.0, 1.0, 0.0}, kUnit, default_grid(0.0, 1.0));
  auto fields = to_probability_fields(psi);
  CHECK(fields.current.max_abs() == 0.0);
}

TEST_CASE("to_probability_fields: J/rho = hbar k / m wherever rho is alive") {
  auto psi = make_gaussian_state({0.0, 1.0, 1.0}, kUnit, default_grid(0.0, 1.0));
  auto fields = to_probability_fields(psi);
  const double peak = fields.density.max_abs();
  for (int i = 0; i < fields.density.size(); ++i) {
    if (fields.density[i] < kTailLevelRel * peak) continue;
    CHECK(fields.current[i] / fields.density[i] == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("to_probability_fields: integral of J equals hbar k / m") {
  auto psi = make_gaussian_state({0.0, 1.0, 2.0}, kUnit, default_grid(0.0, 1.0));
  CHECK(std::abs(integrate(to_probability_fields(psi).current) - 2.0) < 1e-8);

  PhysicalConstants other{2.0, 4.0};
  auto psi2 = make_gaussian_state({0.0, 1.0, 3.0}, other, default_grid(0.0, 1.0));
  CHECK(std::abs(integrate(to_probability_fields(psi2).current) - 1.5) < 1e-8);
}

TEST_CASE("reconstruct_wavefunction: recovers the phase slope where rho is alive") {
  auto psi = make_gaussian_state({0.0, 1.0, 2.0}, kUnit, default_grid(0.0, 1.0));
  auto recon = reconstruct_wavefunction(to_probability_fields(psi));
  auto slope = derivative(recon.psi.phase, 1);
  const double peak = psi.modulus.max_abs();
  for (int i = 0; i < slope.size(); ++i) {
    if (psi.modulus[i] * psi.modulus[i] < kTailLevelRel * peak * peak) continue;
    CHECK(slope[i] == doctest::Approx(2.0).epsilon(1e-8));
  }
  CHECK_FALSE(recon.current_in_tail);
}

TEST_CASE("reconstruct_wavefunction: zero current gives a flat phase") {
  auto psi = make_gaussian_state({0.0, 1.0, 0.0}, kUnit, default_grid(0.0, 1.0));
  auto recon = reconstruct_wavefunction(to_probability_fields(psi));
  CHECK(recon.psi.phase.max_abs() == 0.0);
}

TEST_CASE("reconstruct_wavefunction: phase anchored to zero at the grid center") {
  auto psi = make_gaussian_state({0.5, 1.0, 1.7}, kUnit, default_grid(0.5, 1.0));
  auto recon = reconstruct_wavefunction(to_probability_fields(psi));
  CHECK(recon.psi.phase[recon.psi.grid().n_points / 2] == 0.0);
}

TEST_CASE("round trip fields -> psi -> fields, non-constant flow profile") {
  Grid g = Grid::centered(0.0, 12.0, 4096);
  auto rho = gaussian_density(g, 0.0, 1.0);
  const double norm = integrate(rho);
  std::vector<double> rv(rho.values());
  for (double& v : rv) v /= norm;
  rho = GridFunction(g, std::move(rv));
  // current with a broader profile than the density, so J/rho varies in x
  auto j = GridFunction::sample(g, [](double x) {
    return 0.3 * std::exp(-0.5 * x * x / 1.5) / std::sqrt(2.0 * std::numbers::pi * 1.5);
  });
  ProbabilityFields fields(rho, j, kUnit);

  auto recon = reconstruct_wavefunction(fields);
  auto back = to_probability_fields(recon.psi);
  CHECK(sup_norm_diff(back.density, fields.density) < 1e-8);
  CHECK(sup_norm_diff(back.current, fields.current) < 1e-8);
}

TEST_CASE("round trip psi -> fields -> psi reproduces modulus and phase slope") {
  auto psi = make_gaussian_state({0.0, 0.8, 1.3}, kUnit, default_grid(0.0, 0.8));
  auto recon = reconstruct_wavefunction(to_probability_fields(psi));
  CHECK(sup_norm_diff(recon.psi.modulus, psi.modulus) < 1e-12);
  auto slope_in = derivative(psi.phase, 1);
  auto slope_back = derivative(recon.psi.phase, 1);
  const double peak = psi.modulus.max_abs();
  for (int i = 0; i < slope_in.size(); ++i) {
    if (psi.modulus[i] < 1e-6 * peak) continue;
    CHECK(slope_back[i] == doctest::Approx(slope_in[i]).epsilon(1e-8));
  }
}

TEST_CASE("ProbabilityFields: rejects unnormalized or negative densities") {
  Grid g = Grid::centered(0.0, 10.0, 512);
  auto rho = gaussian_density(g, 0.0, 1.0);
  std::vector<double> scaled(rho.values());
  for (double& v : scaled) v *= 0.5;
  CHECK_THROWS_AS(ProbabilityFields(GridFunction(g, scaled), GridFunction::zeros(g), kUnit),
                  ValidationError);
  std::vector<double> neg(rho.values());
  neg[10] = -1e-3;
  CHECK_THROWS_AS(ProbabilityFields(GridFunction(g, neg), GridFunction::zeros(g), kUnit),
                  ValidationError);
}

TEST_CASE("WaveFunction: rejects negative modulus and bad normalization") {
  Grid g = Grid::centered(0.0, 10.0, 512);
  auto rho = gaussian_density(g, 0.0, 1.0);
  std::vector<double> mod(rho.values().size());
  for (std::size_t i = 0; i < mod.size(); ++i) mod[i] = std::sqrt(rho.values()[i]);
  auto phase = GridFunction::zeros(g);
  CHECK_NOTHROW(WaveFunction(GridFunction(g, mod), phase, kUnit));

  std::vector<double> neg(mod);
  neg[0] = -1e-6;
  CHECK_THROWS_AS(WaveFunction(GridFunction(g, neg), phase, kUnit), ValidationError);

  std::vector<double> big(mod);
  for (double& v : big) v *= 1.1;
  CHECK_THROWS_AS(WaveFunction(GridFunction(g, big), phase, kUnit), ValidationError);
}
