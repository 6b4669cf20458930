#include "sasaki/samples.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "sasaki/background.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/geometry.hpp"

namespace sasaki::samples {

namespace {

using background::softplus;
constexpr double kPi = std::numbers::pi;
constexpr int kModes = 4;

// log((1 + e^{-s}) / (1 + delta e^{-s})) = softplus(-s) - softplus(log(delta) - s)
double log_ratio(double s, double delta) { return softplus(-s) - softplus(std::log(delta) - s); }

// Increasing on g >= 0, grows like log g, w'(g) <= 1 / (2 sqrt 2).
double sublinear_profile(double g) { return 0.5 * std::log1p(0.5 * g * g); }

}  // namespace

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("GEOD_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    return fallback;
  }
}

InvariantPotential conformal_endpoint(const SGrid& grid, double a) {
  return InvariantPotential::sample(grid, [a](double s) { return softplus(2.0 * a + s) - softplus(s); });
}

SpacetimePath conformal_path(const SGrid& grid, std::size_t tcount) {
  return SpacetimePath::sample(grid, tcount,
                               [](double t, double s) { return softplus(2.0 * t + s) - softplus(s); });
}

double conformal_distance() { return std::sqrt(8.0 * kPi / 3.0); }

InvariantPotential random_potential(const SGrid& grid, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> budget(0.1, 0.8);
  double b[kModes];
  double weight = 0.0;
  for (int m = 0; m < kModes; ++m) {
    b[m] = unit(rng);
    const double w = (m + 1) * kPi;
    weight += std::abs(b[m]) * (0.25 * w * w + w);
  }
  const double scale = budget(rng) / weight;
  const double c = unit(rng);
  return InvariantPotential::sample(grid, [&](double s) {
    const double x = background::sigmoid(s);
    double v = c;
    for (int m = 0; m < kModes; ++m) v += scale * b[m] * std::sin((m + 1) * kPi * x);
    return v;
  });
}

SymplecticPotential random_symplectic(const XGrid& xgrid, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> budget(0.2, 3.0);
  double a[kModes];
  double weight = 0.0;
  for (int m = 0; m < kModes; ++m) {
    a[m] = unit(rng);
    const double w = (m + 1) * kPi;
    weight += std::abs(a[m]) * w * w;
  }
  const double scale = budget(rng) / weight;
  const double c = unit(rng);
  const double slope = 1.5 * unit(rng);
  std::vector<double> v(xgrid.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double x = xgrid.node(k);
    v[k] = c + slope * x;
    for (int m = 0; m < kModes; ++m) v[k] += scale * a[m] * std::sin((m + 1) * kPi * x);
  }
  return SymplecticPotential(xgrid, std::move(v), c, c + slope);
}

ToricTriple random_toric_triple(const SGrid& grid, std::mt19937_64& rng, const XGrid& xgrid) {
  auto draw = [&] {
    for (;;) {
      try {
        InvariantPotential phi = inverse_legendre(random_symplectic(xgrid, rng), grid);
        if (first_positivity_failure(phi) < 0) return phi;
      } catch (const NonConvexInput&) {
      }
    }
  };
  InvariantPotential p = draw();
  InvariantPotential q = draw();
  InvariantPotential r = draw();
  return {std::move(p), std::move(q), std::move(r)};
}

InvariantPotential slope_singular(const SGrid& grid, double alpha) {
  return InvariantPotential::sample(grid, [alpha](double s) { return -alpha * softplus(-s); }, alpha, 0.0);
}

InvariantPotential slope_approximant(const SGrid& grid, double alpha, double delta) {
  return InvariantPotential::sample(grid, [=](double s) { return -alpha * log_ratio(s, delta); });
}

InvariantPotential sublinear_singular(const SGrid& grid) {
  return InvariantPotential::sample(grid, [](double s) { return -sublinear_profile(softplus(-s)); });
}

InvariantPotential sublinear_approximant(const SGrid& grid, double delta) {
  return InvariantPotential::sample(grid, [delta](double s) { return -sublinear_profile(log_ratio(s, delta)); });
}

}  // namespace sasaki::samples
