#include "sasaki/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sasaki/background.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/kernels.hpp"
#include "sasaki/spline.hpp"

namespace sasaki {

namespace {

std::vector<double> second_differences(std::span<const double> v, double h) {
  const std::size_t n = v.size();
  std::vector<double> d2(n);
  const double ih2 = 1.0 / (h * h);
  for (std::size_t i = 1; i + 1 < n; ++i) d2[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) * ih2;
  if (n >= 4) {
    d2[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) * ih2;
    d2[n - 1] = (2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) * ih2;
  } else {
    d2[0] = d2[1];
    d2[n - 1] = d2[n - 2];
  }
  return d2;
}

std::vector<double> raw_density(const InvariantPotential& phi) {
  const SGrid& g = phi.grid();
  std::vector<double> rho = second_differences(phi.values(), g.spacing());
  for (std::size_t i = 0; i < rho.size(); ++i) rho[i] += background::f0_d2(g.node(i));
  return rho;
}

}  // namespace

std::ptrdiff_t first_positivity_failure(const InvariantPotential& phi) {
  const std::vector<double> rho = raw_density(phi);
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (!(rho[i] > 0.0)) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::vector<double> ma_density(const InvariantPotential& phi) {
  std::vector<double> rho = raw_density(phi);
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (!(rho[i] > 0.0)) throw PositivityViolation(i);
  return rho;
}

TailMass tail_mass(const InvariantPotential& phi) {
  const SGrid& g = phi.grid();
  const double h = g.spacing();
  const auto v = phi.values();
  const std::size_t n = v.size();
  const double dphi_left = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
  const double dphi_right = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
  const double slope_left = background::f0_d1(g.node(0)) + dphi_left;
  const double slope_right = background::f0_d1(g.node(n - 1)) + dphi_right;
  // Asymptotic slopes of f0 + phi are 0 + left_slope and 1 + right_slope.
  return {slope_left - phi.left_slope(), 1.0 + phi.right_slope() - slope_right};
}

double total_mass(const InvariantPotential& phi) {
  const std::vector<double> rho = ma_density(phi);
  const double h = phi.grid().spacing();
  const std::size_t n = rho.size();
  double interior = 0.5 * (rho.front() + rho.back());
  for (std::size_t i = 1; i + 1 < n; ++i) interior += rho[i];
  interior *= h;
  const TailMass tail = tail_mass(phi);
  return 2.0 * std::numbers::pi * (interior + tail.left + tail.right);
}

SymplecticPotential legendre(const InvariantPotential& phi, const XGrid& xgrid) {
  if (first_positivity_failure(phi) >= 0)
    throw NonConvexInput("legendre: potential is not positive");
  if (!phi.smooth_class())
    throw ValidationError("legendre: asymptotic slopes must vanish (full moment interval)");
  const SGrid& g = phi.grid();
  const UniformSpline spline(g.node(0), g.spacing(), phi.values());
  std::vector<double> slopes(g.size());
  for (std::size_t i = 0; i < slopes.size(); ++i)
    slopes[i] = background::f0_d1(g.node(i)) + spline.derivative(g.node(i));
  if (!std::is_sorted(slopes.begin(), slopes.end()))
    throw NonConvexInput("legendre: interpolated slope is not monotone");

  std::vector<double> remainder(xgrid.size());
  const auto status = kernels::omp::conjugate(spline, slopes, xgrid, remainder);
  if (status.truncated_at >= 0)
    throw TruncationWarning("legendre: supremum attained at s = +-L for x = " +
                            std::to_string(xgrid.node(static_cast<std::size_t>(status.truncated_at))) +
                            "; increase L");
  // Endpoint limits v(0) = -phi(-inf), v(1) = -phi(+inf). Smooth potentials
  // approach their limits like e^{+-s}, so phi(-+inf) = phi(-+L) -+ phi'(-+L).
  const double left = g.node(0);
  const double right = g.node(g.size() - 1);
  const double phi_minus_inf = spline.value(left) - spline.derivative(left);
  const double phi_plus_inf = spline.value(right) + spline.derivative(right);
  return SymplecticPotential(xgrid, std::move(remainder), -phi_minus_inf, -phi_plus_inf);
}

InvariantPotential inverse_legendre(const SymplecticPotential& u, const SGrid& grid) {
  const XGrid& xg = u.xgrid();
  const std::vector<double> closed = u.closed_remainder();
  const std::size_t last = closed.size() - 1;
  const double dx = xg.spacing();

  std::vector<double> full(closed.size());
  for (std::size_t k = 0; k <= last; ++k)
    full[k] = background::u0(dx * static_cast<double>(k)) + closed[k];
  for (std::size_t k = 1; k < last; ++k)
    if (full[k + 1] - 2.0 * full[k] + full[k - 1] < 0.0)
      throw NonConvexInput("inverse_legendre: symplectic potential not convex at node " +
                           std::to_string(k));

  const UniformSpline spline(0.0, dx, closed);
  std::vector<double> slopes(last, 0.0);
  double bound = 0.0;
  for (std::size_t k = 0; k <= last; ++k)
    bound = std::max(bound, std::abs(spline.derivative(dx * static_cast<double>(k))));
  for (std::size_t k = 1; k < last; ++k) {
    const double x = dx * static_cast<double>(k);
    slopes[k] = background::logit(x) + spline.derivative(x);
  }
  if (!std::is_sorted(slopes.begin() + 1, slopes.end()))
    throw NonConvexInput("inverse_legendre: interpolated slope is not monotone");

  std::vector<double> values(grid.size());
  const auto status = kernels::omp::inverse_conjugate(spline, slopes, 2.0 * bound + 1.0, grid, values);
  if (status.truncated_at >= 0)
    throw NonConvexInput("inverse_legendre: no maximiser found at node " +
                         std::to_string(status.truncated_at));
  return InvariantPotential(grid, std::move(values));
}

InvariantPotential resample(const InvariantPotential& phi, const SGrid& grid) {
  if (phi.grid() == grid) return phi;
  const SGrid& src = phi.grid();
  const UniformSpline spline(src.node(0), src.spacing(), phi.values());
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double s = grid.node(i);
    if (s <= src.node(0))
      out[i] = phi.values().front();
    else if (s >= src.node(src.size() - 1))
      out[i] = phi.values().back();
    else
      out[i] = spline.value(s);
  }
  return InvariantPotential(grid, std::move(out), phi.left_slope(), phi.right_slope());
}

}  // namespace sasaki
