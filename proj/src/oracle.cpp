#include "sasaki/oracle.hpp"

#include <cmath>
#include <numbers>

#include "sasaki/background.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/geometry.hpp"
#include "sasaki/spline.hpp"

namespace sasaki {

namespace {

// Composite Simpson on uniformly spaced closed-grid samples; falls back to
// the trapezoid rule on the last interval when the interval count is odd.
double simpson(std::span<const double> f, double h) {
  const std::size_t intervals = f.size() - 1;
  const std::size_t even = intervals - intervals % 2;
  double sum = 0.0;
  for (std::size_t k = 0; k < even; k += 2) sum += f[k] + 4.0 * f[k + 1] + f[k + 2];
  sum *= h / 3.0;
  if (even != intervals) sum += 0.5 * h * (f[intervals - 1] + f[intervals]);
  return sum;
}

void require_smooth_pair(const InvariantPotential& a, const InvariantPotential& b) {
  if (!(a.grid() == b.grid())) throw GridMismatch("oracle endpoints live on different grids");
}

}  // namespace

double symplectic_distance(const SymplecticPotential& u0, const SymplecticPotential& u1) {
  if (!(u0.xgrid() == u1.xgrid())) throw GridMismatch("moment grids differ");
  const std::vector<double> a = u0.closed_remainder();
  const std::vector<double> b = u1.closed_remainder();
  std::vector<double> sq(a.size());
  for (std::size_t k = 0; k < sq.size(); ++k) sq[k] = (b[k] - a[k]) * (b[k] - a[k]);
  return std::sqrt(2.0 * std::numbers::pi * simpson(sq, u0.xgrid().spacing()));
}

InvariantPotential oracle_geodesic(const InvariantPotential& phi0, const InvariantPotential& phi1,
                                   double t, const XGrid& xgrid) {
  require_smooth_pair(phi0, phi1);
  const SymplecticPotential u0 = legendre(phi0, xgrid);
  const SymplecticPotential u1 = legendre(phi1, xgrid);
  return inverse_legendre(SymplecticPotential::interpolate(u0, u1, t), phi0.grid());
}

SpacetimePath oracle_path(const InvariantPotential& phi0, const InvariantPotential& phi1,
                          std::size_t tcount, const XGrid& xgrid) {
  require_smooth_pair(phi0, phi1);
  if (tcount < 2) throw ValidationError("a path needs at least two time slices");
  const SymplecticPotential u0 = legendre(phi0, xgrid);
  const SymplecticPotential u1 = legendre(phi1, xgrid);
  std::vector<InvariantPotential> slices;
  slices.reserve(tcount);
  for (std::size_t j = 0; j < tcount; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(tcount - 1);
    slices.push_back(inverse_legendre(SymplecticPotential::interpolate(u0, u1, t), phi0.grid()));
  }
  return SpacetimePath::from_slices(slices);
}

double oracle_distance(const InvariantPotential& phi0, const InvariantPotential& phi1,
                       const XGrid& xgrid) {
  require_smooth_pair(phi0, phi1);
  return symplectic_distance(legendre(phi0, xgrid), legendre(phi1, xgrid));
}

double dual_energy(const SymplecticPotential& u) {
  const std::vector<double> closed = u.closed_remainder();
  const double dx = u.xgrid().spacing();
  const UniformSpline spline(0.0, dx, closed);
  std::vector<double> sq(closed.size());
  sq.front() = closed.front() * closed.front();
  sq.back() = closed.back() * closed.back();
  for (std::size_t k = 1; k + 1 < closed.size(); ++k) {
    const double x = dx * static_cast<double>(k);
    const double y = background::logit(x);
    const double dv = spline.derivative(x);
    const double phi =
        x * dv + background::softplus(y) - background::softplus(y + dv) - closed[k];
    sq[k] = phi * phi;
  }
  return 2.0 * std::numbers::pi * simpson(sq, dx);
}

}  // namespace sasaki
