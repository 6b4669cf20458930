#pragma once

// The Sasaki side of the Hopf fibration S^3 -> CP^1: invariant quantities on
// S^3 are the CP^1 ones times the fibre length 2*pi.

#include "sasaki/mabuchi.hpp"
#include "sasaki/metric.hpp"
#include "sasaki/potential.hpp"

namespace sasaki {

double sasaki_inner_product(const InvariantPotential& phi, const TangentField& a,
                            const TangentField& b);

/// sqrt(2*pi) * distance(phi0, phi1, cfg, method).value
double sasaki_distance(const InvariantPotential& phi0, const InvariantPotential& phi1,
                       const SolverConfig& cfg = {},
                       DistanceMethod method = DistanceMethod::eps_limit);

/// int eta ^ d eta_phi = 2*pi * total_mass(phi).
double contact_volume(const InvariantPotential& phi);

/// Defect of the path written in the cone variable r = 1 + t / 2 with
/// psi(r, s) = phi(2 (r - 1), s) + 4 log r. With G = f0 + psi - 4 log r
/// (the radial term removed by its own second difference) the defect at each
/// node interior in r and s is r^2 (det Hess_{r,s} G / 4 - eps f0''); the
/// max of its absolute value is returned.
double cone_residual(const SpacetimePath& path, double eps);

}  // namespace sasaki
