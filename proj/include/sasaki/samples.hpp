#pragma once

// Closed-form and seeded random potentials used by the tests, the acceptance
// suite and the command-line front end.

#include <cstdint>
#include <random>

#include "sasaki/grid.hpp"
#include "sasaki/mabuchi.hpp"
#include "sasaki/potential.hpp"

namespace sasaki::samples {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// GEOD_SEED if set and parseable, otherwise the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);

/// log(1 + e^{2a + s}) - log(1 + e^s); a = 1 is the conformal endpoint.
InvariantPotential conformal_endpoint(const SGrid& grid, double a = 1.0);
/// phi_t = log(1 + e^{2t + s}) - log(1 + e^s), the geodesic from 0.
SpacetimePath conformal_path(const SGrid& grid, std::size_t tcount);
/// sqrt(8 pi / 3)
double conformal_distance();

/// c + sum_m b_m sin(m pi sigma(s)), coefficients small enough that the
/// density stays above 0.2 f0''.
InvariantPotential random_potential(const SGrid& grid, std::mt19937_64& rng);

/// Remainder c + b x + sum_m a_m sin(m pi x) with sum |a_m| (m pi)^2 <= 3.
SymplecticPotential random_symplectic(const XGrid& xgrid, std::mt19937_64& rng);

struct ToricTriple {
  InvariantPotential p;
  InvariantPotential q;
  InvariantPotential r;
};
/// Three random symplectic potentials mapped to the given grid; redrawn
/// when the inverse transform reports a non-convex input.
ToricTriple random_toric_triple(const SGrid& grid, std::mt19937_64& rng,
                                const XGrid& xgrid = XGrid(kDefaultMomentNodes));

/// -alpha log(1 + e^{-s}): left slope alpha, density (1 - alpha) f0''.
InvariantPotential slope_singular(const SGrid& grid, double alpha);
/// -alpha log((1 + e^{-s}) / (1 + delta e^{-s})); decreases to the
/// slope-singular model as delta -> 0.
InvariantPotential slope_approximant(const SGrid& grid, double alpha, double delta);

/// -log(1 + g^2 / 2) / 2 with g = log(1 + e^{-s}): unbounded below like
/// -log|s|, zero slopes, full mass.
InvariantPotential sublinear_singular(const SGrid& grid);
/// Same with g = log((1 + e^{-s}) / (1 + delta e^{-s})), decreasing as delta -> 0.
InvariantPotential sublinear_approximant(const SGrid& grid, double delta);

}  // namespace sasaki::samples
