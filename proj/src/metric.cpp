#include "sasaki/metric.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <numbers>
#include <utility>

#include "sasaki/errors.hpp"
#include "sasaki/geometry.hpp"
#include "sasaki/mabuchi.hpp"
#include "sasaki/oracle.hpp"

namespace sasaki {

namespace {

InvariantPotential on_grid(const InvariantPotential& phi, const SGrid& grid) {
  return phi.grid() == grid ? phi : resample(phi, grid);
}

void check_decreasing(std::span<const InvariantPotential> seq) {
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (!(seq[k].grid() == seq[k + 1].grid())) throw GridMismatch("sequence levels use different grids");
    for (std::size_t i = 0; i < seq[k].size(); ++i)
      if (seq[k + 1][i] > seq[k][i] + 1e-12) throw NotDecreasing(k + 1, i);
  }
}

}  // namespace

std::string_view to_string(DistanceMethod m) {
  return m == DistanceMethod::oracle ? "oracle" : "eps_limit";
}

DistanceMethod parse_distance_method(std::string_view name) {
  if (name == "oracle") return DistanceMethod::oracle;
  if (name == "eps_limit") return DistanceMethod::eps_limit;
  throw ValidationError("unknown distance method: " + std::string(name));
}

DistanceReport distance(const InvariantPotential& phi0, const InvariantPotential& phi1,
                        const SolverConfig& cfg, DistanceMethod method) {
  if (!(phi0.grid() == phi1.grid())) throw GridMismatch("distance endpoints live on different grids");
  DistanceReport report;
  report.method = method;
  if (method == DistanceMethod::oracle) {
    report.grid = phi0.grid();
    report.value = oracle_distance(phi0, phi1);
    return report;
  }
  cfg.validate();
  report.grid = cfg.grid;
  report.tcount = cfg.tcount;
  report.xnodes = 0;
  const auto solutions = solve_eps_geodesic(on_grid(phi0, cfg.grid), on_grid(phi1, cfg.grid), cfg);
  for (const auto& sol : solutions)
    report.eps_trace.push_back({sol.eps, path_length(sol.path), sol.residual, sol.newton_iters});
  report.value = report.eps_trace.back().length;
  return report;
}

double energy_E(const InvariantPotential& phi) {
  const std::vector<double> rho = ma_density(phi);
  const auto v = phi.values();
  const std::size_t n = v.size();
  double sum = 0.5 * (v[0] * v[0] * rho[0] + v[n - 1] * v[n - 1] * rho[n - 1]);
  for (std::size_t i = 1; i + 1 < n; ++i) sum += v[i] * v[i] * rho[i];
  sum *= phi.grid().spacing();
  const TailMass tail = tail_mass(phi);
  sum += v[0] * v[0] * tail.left + v[n - 1] * v[n - 1] * tail.right;
  return 2.0 * std::numbers::pi * sum;
}

MassTest full_mass_test(const InvariantPotential& phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double deficit = two_pi - total_mass(phi);
  return {std::abs(deficit) <= 1e-6 * two_pi, deficit};
}

TildeReport tilde_distance(std::span<const InvariantPotential> u,
                           std::span<const InvariantPotential> v, const SolverConfig& cfg,
                           DistanceMethod method, double tol) {
  if (u.empty() || u.size() != v.size())
    throw ValidationError("tilde_distance needs two non-empty sequences of equal length");
  check_decreasing(u);
  check_decreasing(v);
  TildeReport report{};
  for (std::size_t k = 0; k < u.size(); ++k)
    report.level_distances.push_back(distance(u[k], v[k], cfg, method).value);
  bool monotone = true;
  for (std::size_t k = 0; k + 1 < u.size(); ++k) {
    report.cauchy_trace.push_back(std::abs(report.level_distances[k] - report.level_distances[k + 1]));
    if (k > 0 && report.cauchy_trace[k] > report.cauchy_trace[k - 1] + 1e-12) monotone = false;
  }
  report.value = report.level_distances.back();
  report.converged = monotone && (report.cauchy_trace.empty() || report.cauchy_trace.back() <= tol);
  return report;
}

Cat0Report cat0_check(const InvariantPotential& p, const InvariantPotential& q,
                      const InvariantPotential& r, double lambda, const SolverConfig& cfg,
                      DistanceMethod method, double tol_factor) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ValidationError("lambda must lie in [0, 1]");
  Cat0Report report;
  report.lambda = lambda;
  report.method = method;

  if (method == DistanceMethod::oracle) {
    const SymplecticPotential up = legendre(p);
    const SymplecticPotential uq = legendre(q);
    const SymplecticPotential ur = legendre(r);
    report.d_qr = symplectic_distance(uq, ur);
    if (report.d_qr <= 1e-9) throw DegenerateTriangle("d(q, r) <= 1e-9");
    // The symplectic potential of the oracle point is the affine combination.
    const SymplecticPotential ua = SymplecticPotential::interpolate(uq, ur, lambda);
    report.d_pq = symplectic_distance(up, uq);
    report.d_pr = symplectic_distance(up, ur);
    report.d_pa = symplectic_distance(up, ua);
    report.d_qa = symplectic_distance(uq, ua);
  } else {
    cfg.validate();
    const InvariantPotential pg = on_grid(p, cfg.grid);
    const InvariantPotential qg = on_grid(q, cfg.grid);
    const InvariantPotential rg = on_grid(r, cfg.grid);
    const InvariantPotential a = oracle_geodesic(qg, rg, lambda);
    const std::array<std::pair<const InvariantPotential*, const InvariantPotential*>, 5> pairs{
        {{&qg, &rg}, {&pg, &qg}, {&pg, &rg}, {&pg, &a}, {&qg, &a}}};
    std::array<double, 5> d{};
    std::array<std::exception_ptr, 5> failures{};
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < 5; ++k) {
      try {
        d[k] = distance(*pairs[k].first, *pairs[k].second, cfg, DistanceMethod::eps_limit).value;
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
    for (const auto& f : failures)
      if (f) std::rethrow_exception(f);
    report.d_qr = d[0];
    if (report.d_qr <= 1e-9) throw DegenerateTriangle("d(q, r) <= 1e-9");
    report.d_pq = d[1];
    report.d_pr = d[2];
    report.d_pa = d[3];
    report.d_qa = d[4];
  }
  report.slack = lambda * report.d_pr * report.d_pr + (1.0 - lambda) * report.d_pq * report.d_pq -
                 lambda * (1.0 - lambda) * report.d_qr * report.d_qr - report.d_pa * report.d_pa;
  report.tolerance = tol_factor * report.d_qr * report.d_qr;
  report.passed = report.slack >= -report.tolerance;
  return report;
}

}  // namespace sasaki
