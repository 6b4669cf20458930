#pragma once

// Invariant geometry of S^1-invariant potentials on (CP^1, 2 omega_FS):
// Monge-Ampere density, total mass and Legendre duality with symplectic
// potentials on the moment interval (0, 1).

#include <cstddef>
#include <vector>

#include "sasaki/grid.hpp"
#include "sasaki/potential.hpp"

namespace sasaki {

/// rho_i = f0''(s_i) + D^2 phi_i, central differences in the interior and
/// second-order one-sided differences at the two end nodes. The measure on
/// CP^1 is 2*pi*rho(s) ds. Throws PositivityViolation if any rho_i <= 0.
std::vector<double> ma_density(const InvariantPotential& phi);

/// Same as ma_density but returns the first failing node instead of throwing.
std::ptrdiff_t first_positivity_failure(const InvariantPotential& phi);

/// Mass of rho ds outside [-L, L] on each side, read off from the boundary
/// slope of f0 + phi and the asymptotic slopes.
struct TailMass {
  double left;
  double right;
};
TailMass tail_mass(const InvariantPotential& phi);

/// 2*pi * integral of rho (trapezoid) plus the tail mass outside [-L, L]
/// implied by the asymptotic slopes. Exact value: 2*pi*(1 + right - left).
double total_mass(const InvariantPotential& phi);

/// Legendre conjugate u(x) = sup_s [x s - f0(s) - phi(s)], returned as its
/// remainder against u0. phi must be positive with zero slopes. Throws
/// NonConvexInput or TruncationWarning.
SymplecticPotential legendre(const InvariantPotential& phi,
                             const XGrid& xgrid = XGrid(kDefaultMomentNodes));

/// phi(s) = sup_x [x s - u(x)] - f0(s) on the given grid. Throws NonConvexInput.
InvariantPotential inverse_legendre(const SymplecticPotential& u, const SGrid& grid);

/// Spline resampling onto another grid (nodes outside the source range are
/// held constant). Slopes are carried over.
InvariantPotential resample(const InvariantPotential& phi, const SGrid& grid);

}  // namespace sasaki
