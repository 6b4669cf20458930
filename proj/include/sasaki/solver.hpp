#pragma once

// Epsilon-geodesics as solutions of the degenerate Monge-Ampere problem on the
// strip [0, 1] x [-L, L]. With F(t, s) = f0(s) + phi(t, s) the invariant
// reduction of the epsilon-geodesic equation is
//
//   F_tt F_ss - F_ts^2 = eps * f0''(s),   phi(0, .) = phi0,   phi(1, .) = phi1,
//
// closed at s = +-L by the exponential tail of a smooth potential: the missing
// neighbour beyond the last node is extrapolated with ratio exp(-h), the
// decay rate of f0'' and of every potential in the class. Dividing by F_ss gives
// phi_tt - (d_s phi_t)^2 / F_ss = eps f0'' / F_ss, i.e. the covariant
// acceleration along the path equals eps times the background-to-current
// density ratio; eps = 0 is the geodesic equation.

#include <cstddef>
#include <vector>

#include "sasaki/grid.hpp"
#include "sasaki/mabuchi.hpp"
#include "sasaki/potential.hpp"

namespace sasaki {

struct SolverConfig {
  std::vector<double> eps_schedule{1.0, 1e-1, 1e-2, 1e-3, 1e-4};
  double newton_tol = 1e-10;
  int max_newton_iters = 50;
  double damping = 0.5;
  SGrid grid{kDefaultHalfWidth, 257};
  std::size_t tcount = 65;

  /// Throws ValidationError on a non-decreasing or non-positive schedule,
  /// newton_tol <= 0, damping outside (0, 1) or tcount < 3.
  void validate() const;
};

struct GeodesicSolution {
  SpacetimePath path;
  double eps;
  double residual;   // max nodal defect, boundary columns included
  int newton_iters;
  // This solution lies below the next-smaller-eps one (within 1e-8). Always
  // true for the last entry.
  bool monotone_flag;
};

/// One solution per eps in the schedule, each warm-started from the previous.
/// Throws GridMismatch, PositivityViolation, NewtonDivergence, PositivityLoss.
std::vector<GeodesicSolution> solve_eps_geodesic(const InvariantPotential& phi0,
                                                 const InvariantPotential& phi1,
                                                 const SolverConfig& cfg);

/// max |F_tt F_ss - F_ts^2 - eps f0''| over nodes interior in both t and s,
/// all second differences central.
double geodesic_residual(const SpacetimePath& path, double eps);

/// phi_tt - F_ts^2 / F_ss with the solver's stencil (tail closure at
/// s = +-L); zero on the t = 0 and t = 1 rows.
std::vector<double> geodesic_acceleration(const SpacetimePath& path);

}  // namespace sasaki
