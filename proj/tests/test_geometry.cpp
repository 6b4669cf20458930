#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sasaki/background.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/geometry.hpp"
#include "sasaki/samples.hpp"

using namespace sasaki;

namespace {
const double kTwoPi = 2.0 * std::numbers::pi;

double sup_diff(const InvariantPotential& a, const InvariantPotential& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}
}  // namespace

TEST_CASE("background functions stay finite in the tails") {
  CHECK(background::f0(-800.0) == doctest::Approx(0.0));
  CHECK(background::f0(800.0) == doctest::Approx(800.0));
  CHECK(background::f0_d2(0.0) == doctest::Approx(0.25));
  CHECK(background::f0_d2(-800.0) >= 0.0);
  CHECK(background::u0(0.5) == doctest::Approx(-std::log(2.0)));
  CHECK(background::u0_from_logit(-40.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(SGrid(15.0, 2), ValidationError);
  CHECK_THROWS_AS(SGrid(-1.0, 33), ValidationError);
  CHECK_THROWS_AS(InvariantPotential(SGrid(15.0, 33), std::vector<double>(32)), ValidationError);
  const SGrid g(15.0, 31);
  CHECK(g.node(0) == -15.0);
  CHECK(g.node(30) == doctest::Approx(15.0));
  CHECK(XGrid(4097).node(4096) == doctest::Approx(4097.0 / 4098.0));
}

TEST_CASE("density of the background potential") {
  const SGrid g(15.0, 257);
  const auto rho = ma_density(InvariantPotential::zero(g));
  for (std::size_t i = 1; i + 1 < g.size(); ++i)
    CHECK(rho[i] == doctest::Approx(background::f0_d2(g.node(i))));
  CHECK(total_mass(InvariantPotential::zero(g)) == doctest::Approx(kTwoPi).epsilon(1e-9));
}

TEST_CASE("constant shifts leave the density unchanged") {
  const SGrid g(15.0, 129);
  const auto a = ma_density(InvariantPotential::zero(g));
  const auto b = ma_density(InvariantPotential::zero(g).shifted(3.5));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-10));
}

TEST_CASE("non-positive potentials are rejected with the failing node") {
  const SGrid g(15.0, 257);
  const auto bad = InvariantPotential::sample(g, [](double s) { return -0.5 * background::f0(s) * (s > 0 ? 3.0 : 1.0); });
  CHECK(first_positivity_failure(bad) >= 0);
  CHECK_THROWS_AS(ma_density(bad), PositivityViolation);
  try {
    ma_density(bad);
  } catch (const PositivityViolation& e) {
    CHECK(static_cast<std::ptrdiff_t>(e.index()) == first_positivity_failure(bad));
  }
  CHECK_THROWS_AS(legendre(bad), NonConvexInput);
}

TEST_CASE("mass formula from asymptotic slopes") {
  const SGrid g(15.0, 2049);
  for (double alpha : {0.1, 0.3, 0.5}) {
    const auto phi = samples::slope_singular(g, alpha);
    CHECK(total_mass(phi) == doctest::Approx(kTwoPi * (1.0 - alpha)).epsilon(1e-8));
  }
  std::mt19937_64 rng(11);
  for (int k = 0; k < 5; ++k)
    CHECK(total_mass(samples::random_potential(g, rng)) == doctest::Approx(kTwoPi).epsilon(1e-8));
}

TEST_CASE("legendre transform of the background is zero") {
  const SGrid g(15.0, 2049);
  const auto u = legendre(InvariantPotential::zero(g));
  for (double v : u.closed_remainder()) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("conformal endpoint has remainder -2x") {
  const SGrid g(15.0, 2049);
  const auto u = legendre(samples::conformal_endpoint(g));
  const auto closed = u.closed_remainder();
  const double dx = u.xgrid().spacing();
  double worst = 0.0;
  for (std::size_t k = 0; k < closed.size(); ++k)
    worst = std::max(worst, std::abs(closed[k] + 2.0 * dx * static_cast<double>(k)));
  CHECK(worst < 1e-9);
}

TEST_CASE("legendre round trips") {
  const SGrid g(15.0, 2049);
  CHECK(sup_diff(inverse_legendre(legendre(InvariantPotential::zero(g)), g), InvariantPotential::zero(g)) < 1e-8);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    const auto phi = samples::random_potential(g, rng);
    CHECK(sup_diff(inverse_legendre(legendre(phi), g), phi) < 1e-6);
  }
}

TEST_CASE("legendre is order reversing") {
  const SGrid g(15.0, 1025);
  std::mt19937_64 rng(8);
  const auto phi = samples::random_potential(g, rng);
  const auto lower = legendre(phi.shifted(-0.25));
  const auto upper = legendre(phi);
  for (std::size_t k = 0; k < lower.remainder().size(); ++k)
    CHECK(lower.remainder()[k] >= upper.remainder()[k]);
}

TEST_CASE("legendre preconditions") {
  const SGrid g(15.0, 1025);
  CHECK_THROWS_AS(legendre(samples::slope_singular(g, 0.3)), ValidationError);
  // sup for the smallest x sits at s < -L on a short interval
  const SGrid narrow(5.0, 257);
  CHECK_THROWS_AS(legendre(InvariantPotential::zero(narrow)), TruncationWarning);
}

TEST_CASE("inverse transform rejects non-convex symplectic potentials") {
  const XGrid xg(1023);
  std::vector<double> v(xg.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = 2.0 * std::sin(std::numbers::pi * xg.node(k));
  CHECK_THROWS_AS(inverse_legendre(SymplecticPotential(xg, v, 0.0, 0.0), SGrid(15.0, 257)), NonConvexInput);
}

TEST_CASE("resample reproduces smooth data") {
  const SGrid coarse(15.0, 1025), fine(15.0, 2049);
  const auto a = resample(samples::conformal_endpoint(coarse), fine);
  CHECK(sup_diff(a, samples::conformal_endpoint(fine)) < 1e-7);
}

TEST_CASE("legendre is shift equivariant") {
  const SGrid g(15.0, 2049);
  std::mt19937_64 rng(3);
  const auto phi = samples::random_potential(g, rng);
  const auto a = legendre(phi).closed_remainder();
  const auto b = legendre(phi.shifted(0.7)).closed_remainder();
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(b[k] == doctest::Approx(a[k] - 0.7).epsilon(1e-12).scale(1.0));
}

TEST_CASE("density of the conformal endpoint") {
  const SGrid g(15.0, 2049);
  const auto rho = ma_density(samples::conformal_endpoint(g));
  const double h2 = g.spacing() * g.spacing();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double exact = background::f0_d2(2.0 + g.node(i));
    CHECK(std::abs(rho[i] - exact) <= 2.0 * h2 * exact + 1e-10);
  }
}

TEST_CASE("halving the density") {
  const SGrid g(15.0, 1025);
  const auto rho = ma_density(InvariantPotential::sample(g, [](double s) { return -0.5 * background::f0(s); }, 0.0, -0.5));
  for (std::size_t i = 1; i + 1 < g.size(); ++i)
    CHECK(rho[i] == doctest::Approx(0.5 * background::f0_d2(g.node(i))).epsilon(1e-3).scale(1e-6));
}

TEST_CASE("inverse transform of -2x is the conformal endpoint") {
  const XGrid xg(kDefaultMomentNodes);
  std::vector<double> v(xg.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = -2.0 * xg.node(k);
  const SGrid g(15.0, 2049);
  const auto phi = inverse_legendre(SymplecticPotential(xg, v, 0.0, -2.0), g);
  CHECK(sup_diff(phi, samples::conformal_endpoint(g)) < 1e-6);
}
