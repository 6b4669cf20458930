#pragma once

// The distance on the space of invariant potentials, its extension to
// decreasing limits, energy functionals and the CAT(0) comparison check.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sasaki/grid.hpp"
#include "sasaki/potential.hpp"
#include "sasaki/solver.hpp"

namespace sasaki {

enum class DistanceMethod { oracle, eps_limit };

std::string_view to_string(DistanceMethod m);
/// Accepts "oracle" and "eps_limit"; throws ValidationError otherwise.
DistanceMethod parse_distance_method(std::string_view name);

struct EpsLength {
  double eps;
  double length;
  double residual;
  int newton_iters;
};

struct DistanceReport {
  double value = 0.0;
  DistanceMethod method = DistanceMethod::oracle;
  std::vector<EpsLength> eps_trace;  // empty for the oracle method
  SGrid grid{kDefaultHalfWidth, kDefaultPotentialNodes};
  std::size_t tcount = 0;
  std::size_t xnodes = kDefaultMomentNodes;
};

/// Oracle: flat L^2 distance of symplectic potentials. eps_limit: lengths of
/// the eps-geodesics for every eps in the schedule, value = the smallest-eps
/// length. Inputs not on cfg.grid are resampled onto it for eps_limit.
DistanceReport distance(const InvariantPotential& phi0, const InvariantPotential& phi1,
                        const SolverConfig& cfg = {},
                        DistanceMethod method = DistanceMethod::eps_limit);

/// 2*pi * int phi^2 rho ds (trapezoid plus tails). Throws PositivityViolation.
double energy_E(const InvariantPotential& phi);

struct MassTest {
  bool full_mass;
  double deficit;  // 2*pi - total_mass
};
MassTest full_mass_test(const InvariantPotential& phi);

struct TildeReport {
  double value;
  std::vector<double> level_distances;
  std::vector<double> cauchy_trace;  // |d_k - d_{k+1}|
  bool converged;
};

/// d(u_K, v_K) at the deepest level, with the Cauchy trace. Both sequences
/// must be pointwise non-increasing; converged means the trace never grows
/// and ends at or below tol. Throws NotDecreasing, GridMismatch.
TildeReport tilde_distance(std::span<const InvariantPotential> u,
                           std::span<const InvariantPotential> v, const SolverConfig& cfg = {},
                           DistanceMethod method = DistanceMethod::oracle, double tol = 1e-3);

struct Cat0Report {
  std::string p_id = "p";
  std::string q_id = "q";
  std::string r_id = "r";
  double lambda = 0.0;
  double d_pq = 0.0;
  double d_pr = 0.0;
  double d_qr = 0.0;
  double d_pa = 0.0;
  double d_qa = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  DistanceMethod method = DistanceMethod::oracle;
};

/// a = oracle_geodesic(q, r, lambda); slack =
/// lambda d_pr^2 + (1 - lambda) d_pq^2 - lambda (1 - lambda) d_qr^2 - d_pa^2;
/// passes iff slack >= -tol_factor * d_qr^2. lambda may be 0 or 1.
/// Throws DegenerateTriangle if d_qr <= 1e-9.
Cat0Report cat0_check(const InvariantPotential& p, const InvariantPotential& q,
                      const InvariantPotential& r, double lambda, const SolverConfig& cfg = {},
                      DistanceMethod method = DistanceMethod::oracle, double tol_factor = 1e-3);

}  // namespace sasaki
