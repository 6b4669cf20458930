#pragma once

// Legendre-duality ground truth. In the moment coordinate x the invariant
// weak geodesic between phi0 and phi1 is the affine path (1 - t) u0 + t u1 of
// symplectic potentials, the velocity is -du/dt, and the pushforward of the
// Monge-Ampere measure is Lebesgue measure on (0, 1). Distances are therefore
// flat L^2 distances of symplectic potentials. Nothing here shares code with
// the finite-difference solver or the s-space quadrature.

#include <cstddef>

#include "sasaki/grid.hpp"
#include "sasaki/mabuchi.hpp"
#include "sasaki/potential.hpp"

namespace sasaki {

/// sqrt(2*pi * int_0^1 (v1 - v0)^2 dx), composite Simpson on the closed
/// moment grid (endpoint limits included).
double symplectic_distance(const SymplecticPotential& u0, const SymplecticPotential& u1);

/// inverse_legendre((1 - t) legendre(phi0) + t legendre(phi1)) on phi0's grid.
InvariantPotential oracle_geodesic(const InvariantPotential& phi0, const InvariantPotential& phi1,
                                   double t, const XGrid& xgrid = XGrid(kDefaultMomentNodes));

/// The oracle geodesic sampled at t_j = j / (tcount - 1).
SpacetimePath oracle_path(const InvariantPotential& phi0, const InvariantPotential& phi1,
                          std::size_t tcount, const XGrid& xgrid = XGrid(kDefaultMomentNodes));

double oracle_distance(const InvariantPotential& phi0, const InvariantPotential& phi1,
                       const XGrid& xgrid = XGrid(kDefaultMomentNodes));

/// 2*pi * int_0^1 phi(x)^2 dx, with phi expressed through the symplectic
/// potential: phi = x v'(x) + softplus(y) - softplus(y + v'(x)) - v(x),
/// y = logit(x).
double dual_energy(const SymplecticPotential& u);

}  // namespace sasaki
