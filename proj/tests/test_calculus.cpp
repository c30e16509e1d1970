#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qms/calculus.hpp"

using namespace qms;

namespace {

double std_normal(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

GridFunction gaussian_density(const Grid& g, double center, double variance) {
  return GridFunction::sample(g, [=](double x) {
    const double u = x - center;
    return std::exp(-0.5 * u * u / variance) /
           std::sqrt(2.0 * std::numbers::pi * variance);
  });
}

GridFunction delta_kernel(double dx) {
  Grid cell(-dx, dx, 8);
  std::vector<double> v(8, 0.0);
  v[1] = 1.0 / dx;
  return GridFunction(cell, std::move(v));
}

GridFunction sampled_gaussian_kernel(double width, double dx) {
  const int half = static_cast<int>(std::ceil(10.0 * width / dx));
  Grid g(-half * dx, dx, 2 * half + 1);
  auto k = GridFunction::sample(g, [=](double x) {
    return std::exp(-0.5 * x * x / (width * width)) /
           (width * std::sqrt(2.0 * std::numbers::pi));
  });
  double sum = 0.0;
  for (int i = 0; i < k.size(); ++i) sum += k[i] * dx;
  std::vector<double> v(k.values());
  for (double& x : v) x /= sum;
  return GridFunction(g, std::move(v));
}

}  // namespace

TEST_CASE("integrate: zero field on any grid") {
  Grid g(-3.0, 0.1, 61);
  CHECK(integrate(GridFunction::zeros(g)) == 0.0);
}

TEST_CASE("integrate: standard normal density on [-10,10], n=4096") {
  Grid g = Grid::centered(0.0, 10.0, 4096);
  auto f = GridFunction::sample(g, std_normal);
  CHECK(std::abs(integrate(f) - 1.0) < 1e-10);
}

TEST_CASE("integrate: odd integrand on a symmetric grid") {
  Grid g = Grid::centered(0.0, 10.0, 4097);
  auto f = GridFunction::sample(g, [](double x) { return x * std_normal(x); });
  CHECK(std::abs(integrate(f)) < 1e-12);
}

TEST_CASE("integrate: exact for cubics, both parities of the interval count") {
  for (int n : {399, 400}) {
    Grid g(-1.5, 3.5 / (n - 1), n);
    auto f = GridFunction::sample(g, [](double x) { return 2.0 - x + 3.0 * x * x - x * x * x; });
    const double a = g.x_min, b = g.x_max();
    auto antider = [](double x) {
      return 2.0 * x - 0.5 * x * x + x * x * x - 0.25 * x * x * x * x;
    };
    CHECK(integrate(f) == doctest::Approx(antider(b) - antider(a)).epsilon(1e-13));
  }
}

TEST_CASE("integrate: linear in the integrand to machine precision") {
  Grid g = Grid::centered(0.0, 5.0, 512);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> fv(g.n_points), gv(g.n_points), combo(g.n_points);
  const double a = 1.7, b = -0.3;
  for (int i = 0; i < g.n_points; ++i) {
    fv[i] = unif(rng);
    gv[i] = unif(rng);
    combo[i] = a * fv[i] + b * gv[i];
  }
  const double lhs = integrate(GridFunction(g, combo));
  const double rhs = a * integrate(GridFunction(g, fv)) + b * integrate(GridFunction(g, gv));
  CHECK(std::abs(lhs - rhs) < 1e-13);
}

TEST_CASE("derivative: constant goes to zero") {
  Grid g(-4.0, 0.05, 161);
  auto f = GridFunction::sample(g, [](double) { return 3.25; });
  CHECK(derivative(f, 1).max_abs() == 0.0);
}

TEST_CASE("derivative: second derivative of x^2 is 2 everywhere") {
  Grid g = Grid::centered(0.0, 5.0, 513);
  auto f = GridFunction::sample(g, [](double x) { return x * x; });
  auto d2 = derivative(f, 2);
  for (int i = 0; i < d2.size(); ++i) CHECK(d2[i] == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("derivative: sin -> cos within 1e-9 in the interior at dx=0.005") {
  Grid g(-2.0, 0.005, 801);
  auto f = GridFunction::sample(g, [](double x) { return std::sin(x); });
  auto d1 = derivative(f, 1);
  for (int i = 2; i < d1.size() - 2; ++i)
    CHECK(std::abs(d1[i] - std::cos(g.x(i))) < 1e-9);
}

TEST_CASE("derivative: boundary stencils handle cubics exactly") {
  Grid g(0.0, 0.1, 64);
  auto f = GridFunction::sample(g, [](double x) { return x * x * x - 2.0 * x; });
  auto d1 = derivative(f, 1);
  auto d2 = derivative(f, 2);
  for (int i : {0, 1, 62, 63}) {
    CHECK(d1[i] == doctest::Approx(3.0 * g.x(i) * g.x(i) - 2.0).epsilon(1e-9));
    CHECK(d2[i] == doctest::Approx(6.0 * g.x(i)).epsilon(1e-8));
  }
}

TEST_CASE("derivative: twice-applied first derivative tracks the second") {
  Grid g = Grid::centered(1.0, 4.0, 2048);
  auto f = GridFunction::sample(g, [](double x) { return std::exp(-0.3 * x * x) * std::cos(x); });
  auto dd = derivative(derivative(f, 1), 1);
  auto d2 = derivative(f, 2);
  double worst = 0.0;
  for (int i = 4; i < g.n_points - 4; ++i) worst = std::max(worst, std::abs(dd[i] - d2[i]));
  CHECK(worst < 1e-5);  // O(dx^2) consistency between the two routes
}

TEST_CASE("derivative: rejects unsupported order") {
  Grid g(0.0, 0.1, 32);
  auto f = GridFunction::zeros(g);
  CHECK_THROWS_AS(derivative(f, 3), ValidationError);
  CHECK_THROWS_AS(derivative(f, 0), ValidationError);
}

TEST_CASE("cumulative_integral: fourth-order accuracy on a smooth integrand") {
  Grid g(0.0, 0.01, 1001);
  auto f = GridFunction::sample(g, [](double x) { return std::cos(3.0 * x); });
  auto c4 = cumulative_integral(f);
  auto c2 = cumulative_trapezoid(f);
  double worst4 = 0.0, worst2 = 0.0;
  for (int i = 0; i < g.n_points; ++i) {
    const double exact = std::sin(3.0 * g.x(i)) / 3.0;
    worst4 = std::max(worst4, std::abs(c4[i] - exact));
    worst2 = std::max(worst2, std::abs(c2[i] - exact));
  }
  CHECK(worst4 < 1e-8);
  CHECK(worst2 > 1e-6);  // trapezoid visibly worse on the same grid
}

TEST_CASE("convolve: discrete delta kernel is the identity") {
  Grid g = Grid::centered(0.0, 8.0, 1024);
  auto f = GridFunction::sample(g, [](double x) { return std::exp(-0.5 * x * x) * (1 + x); });
  auto out = convolve(f, delta_kernel(g.dx));
  CHECK(sup_norm_diff(out.values, f) < 1e-12);
  CHECK_FALSE(out.boundary_truncation);
}

TEST_CASE("convolve: gaussian density var 1 against gaussian kernel var 0.25") {
  Grid g = Grid::centered(0.0, 14.0, 4096);
  auto f = gaussian_density(g, 0.0, 1.0);
  auto out = convolve(f, sampled_gaussian_kernel(0.5, g.dx));
  auto expected = gaussian_density(g, 0.0, 1.25);
  CHECK(sup_norm_diff(out.values, expected) < 1e-8);
}

TEST_CASE("convolve: preserves the integral for edge-decayed fields") {
  Grid g = Grid::centered(0.5, 15.0, 4096);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.2, 1.5);
  for (int trial = 0; trial < 5; ++trial) {
    const double width = unif(rng);
    auto f = gaussian_density(g, unif(rng), unif(rng));
    auto out = convolve(f, sampled_gaussian_kernel(width, g.dx));
    CHECK(std::abs(integrate(out.values) - integrate(f)) < 1e-6);
    CHECK_FALSE(out.boundary_truncation);
  }
}

TEST_CASE("convolve: rejects kernels on a different spacing") {
  Grid g = Grid::centered(0.0, 5.0, 256);
  auto f = gaussian_density(g, 0.0, 1.0);
  CHECK_THROWS_AS(convolve(f, sampled_gaussian_kernel(0.5, g.dx * 1.5)), ValidationError);
}

TEST_CASE("convolve: rejects unnormalized kernels") {
  Grid g = Grid::centered(0.0, 5.0, 256);
  auto f = gaussian_density(g, 0.0, 0.5);
  auto k = sampled_gaussian_kernel(0.3, g.dx);
  std::vector<double> v(k.values());
  for (double& x : v) x *= 0.9;
  CHECK_THROWS_AS(convolve(f, GridFunction(k.grid(), v)), ValidationError);
}

TEST_CASE("convolve: flags mass within one kernel width of the boundary") {
  Grid g = Grid::centered(0.0, 3.0, 512);
  auto f = gaussian_density(g, 2.5, 1.0);  // visibly truncated on the right
  auto out = convolve(f, sampled_gaussian_kernel(0.4, g.dx));
  CHECK(out.boundary_truncation);
}
