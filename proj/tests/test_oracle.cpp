#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sasaki/background.hpp"
#include "sasaki/geometry.hpp"
#include "sasaki/metric.hpp"
#include "sasaki/oracle.hpp"
#include "sasaki/samples.hpp"
#include "sasaki/solver.hpp"

using namespace sasaki;

namespace {
double sup_diff(const InvariantPotential& a, const InvariantPotential& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}
}  // namespace

TEST_CASE("oracle geodesic endpoints") {
  const SGrid g(15.0, 2049);
  std::mt19937_64 rng(3);
  const auto a = samples::random_potential(g, rng);
  const auto b = samples::random_potential(g, rng);
  CHECK(sup_diff(oracle_geodesic(a, b, 0.0), a) < 1e-6);
  CHECK(sup_diff(oracle_geodesic(a, b, 1.0), b) < 1e-6);
}

TEST_CASE("oracle reproduces the conformal geodesic") {
  const SGrid g(15.0, 2049);
  const auto zero = InvariantPotential::zero(g);
  const auto phi1 = samples::conformal_endpoint(g);
  for (double t : {0.1, 0.5, 0.83}) {
    const auto exact = InvariantPotential::sample(g, [t](double s) {
      return background::softplus(2.0 * t + s) - background::softplus(s);
    });
    CHECK(sup_diff(oracle_geodesic(zero, phi1, t), exact) < 1e-6);
  }
}

TEST_CASE("oracle distances") {
  const SGrid g(15.0, 2049);
  const auto zero = InvariantPotential::zero(g);
  CHECK(oracle_distance(zero, samples::conformal_endpoint(g)) ==
        doctest::Approx(samples::conformal_distance()).epsilon(1e-8));
  std::mt19937_64 rng(4);
  const auto phi = samples::random_potential(g, rng);
  CHECK(oracle_distance(phi, phi) == 0.0);
  CHECK(oracle_distance(phi, phi.shifted(0.7)) ==
        doctest::Approx(0.7 * std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-8));
}

TEST_CASE("constant-shift distance equals the length of the straight path") {
  const SGrid g(15.0, 1025);
  const auto path = SpacetimePath::sample(g, 17, [](double t, double s) { return 0.7 * t + 0.0 * s; });
  CHECK(path_length(path) == doctest::Approx(0.7 * std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-6));
}

TEST_CASE("oracle path residual converges at second order") {
  double previous = 0.0;
  for (int level = 0; level < 3; ++level) {
    const SGrid g(15.0, (128u << level) + 1);
    const auto path =
        oracle_path(InvariantPotential::zero(g), samples::conformal_endpoint(g), (32u << level) + 1);
    const double res = geodesic_residual(path, 0.0);
    if (level > 0) CHECK(previous / res == doctest::Approx(4.0).epsilon(0.2));
    previous = res;
  }
}

TEST_CASE("oracle path has constant speed") {
  const SGrid g(15.0, 513);
  std::mt19937_64 rng(6);
  const auto tri = samples::random_toric_triple(g, rng);
  const auto path = oracle_path(tri.p, tri.q, 65);
  const auto e = speed_squared(path);
  const double h = g.spacing(), dt = path.dt();
  for (double v : e) CHECK(std::abs(v - e[0]) <= 5.0 * (h * h + dt * dt) * e[0]);
}

TEST_CASE("flatness: the four point identity holds in u-space") {
  const XGrid xg(kDefaultMomentNodes);
  std::mt19937_64 rng(10);
  const auto up = samples::random_symplectic(xg, rng);
  const auto uq = samples::random_symplectic(xg, rng);
  const auto ur = samples::random_symplectic(xg, rng);
  const double lambda = 0.3;
  const auto ua = SymplecticPotential::interpolate(uq, ur, lambda);
  const double dpq = symplectic_distance(up, uq), dpr = symplectic_distance(up, ur);
  const double dqr = symplectic_distance(uq, ur), dpa = symplectic_distance(up, ua);
  const double slack = lambda * dpr * dpr + (1 - lambda) * dpq * dpq - lambda * (1 - lambda) * dqr * dqr - dpa * dpa;
  CHECK(std::abs(slack) < 1e-10 * dqr * dqr);
}

TEST_CASE("energy by the moment-space quadrature matches the s-space one") {
  const SGrid g(15.0, 2049);
  const auto phi1 = samples::conformal_endpoint(g);
  CHECK(dual_energy(legendre(phi1)) == doctest::Approx(energy_E(phi1)).epsilon(1e-4));
  std::mt19937_64 rng(12);
  const auto phi = samples::random_potential(g, rng);
  CHECK(dual_energy(legendre(phi)) == doctest::Approx(energy_E(phi)).epsilon(1e-4));
}
