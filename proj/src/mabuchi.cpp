#include "sasaki/mabuchi.hpp"

#include <cmath>
#include <numbers>

#include "sasaki/errors.hpp"
#include "sasaki/geometry.hpp"

namespace sasaki {

namespace {

void require_same_grid(const SGrid& a, const SGrid& b) {
  if (!(a == b)) throw GridMismatch("tangent field and potential live on different grids");
}

// First derivative in s, central inside and second-order one-sided at the ends.
std::vector<double> s_derivative(std::span<const double> v, double h) {
  const std::size_t n = v.size();
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
  d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
  return d;
}

double weighted_trapezoid(std::span<const double> a, std::span<const double> b,
                          std::span<const double> rho, double h) {
  const std::size_t n = rho.size();
  double sum = 0.5 * (a[0] * b[0] * rho[0] + a[n - 1] * b[n - 1] * rho[n - 1]);
  for (std::size_t i = 1; i + 1 < n; ++i) sum += a[i] * b[i] * rho[i];
  return 2.0 * std::numbers::pi * h * sum;
}

}  // namespace

TangentField::TangentField(SGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw GridMismatch("tangent field size does not match grid");
}

TangentField TangentField::scaled(double a) const {
  std::vector<double> v(values_);
  for (double& x : v) x *= a;
  return TangentField(grid_, std::move(v));
}

SpacetimePath::SpacetimePath(SGrid grid, std::size_t tcount, std::vector<double> values)
    : grid_(grid), tcount_(tcount), values_(std::move(values)) {
  if (tcount_ < 2) throw ValidationError("a path needs at least two time slices");
  if (values_.size() != tcount_ * grid_.size())
    throw GridMismatch("path values do not match (tcount x grid) shape");
}

SpacetimePath SpacetimePath::from_slices(const std::vector<InvariantPotential>& slices) {
  if (slices.size() < 2) throw ValidationError("a path needs at least two time slices");
  const SGrid grid = slices.front().grid();
  std::vector<double> v;
  v.reserve(slices.size() * grid.size());
  for (const auto& s : slices) {
    require_same_grid(s.grid(), grid);
    v.insert(v.end(), s.values().begin(), s.values().end());
  }
  return SpacetimePath(grid, slices.size(), std::move(v));
}

InvariantPotential SpacetimePath::slice(std::size_t j) const {
  const auto r = row(j);
  return InvariantPotential(grid_, std::vector<double>(r.begin(), r.end()));
}

double inner_product(const InvariantPotential& phi, const TangentField& a, const TangentField& b) {
  require_same_grid(phi.grid(), a.grid());
  require_same_grid(phi.grid(), b.grid());
  const std::vector<double> rho = ma_density(phi);
  return weighted_trapezoid(a.values(), b.values(), rho, phi.grid().spacing());
}

std::vector<double> time_derivative(std::span<const double> field, std::size_t tcount,
                                    std::size_t scount) {
  if (tcount < 3) throw ValidationError("time derivative needs at least three slices");
  const double dt = 1.0 / static_cast<double>(tcount - 1);
  std::vector<double> out(field.size());
  const auto f = [&](std::size_t j, std::size_t i) { return field[j * scount + i]; };
  const std::size_t m = tcount - 1;
  for (std::size_t i = 0; i < scount; ++i) {
    out[i] = (-3.0 * f(0, i) + 4.0 * f(1, i) - f(2, i)) / (2.0 * dt);
    out[m * scount + i] = (3.0 * f(m, i) - 4.0 * f(m - 1, i) + f(m - 2, i)) / (2.0 * dt);
  }
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = 0; i < scount; ++i)
      out[j * scount + i] = (f(j + 1, i) - f(j - 1, i)) / (2.0 * dt);
  return out;
}

std::vector<double> time_derivative(const SpacetimePath& path) {
  return time_derivative(path.values(), path.tcount(), path.grid().size());
}

std::vector<double> speed_squared(const SpacetimePath& path) {
  const std::size_t n = path.grid().size();
  const std::vector<double> velocity = time_derivative(path);
  std::vector<double> e(path.tcount());
  for (std::size_t j = 0; j < e.size(); ++j) {
    const std::vector<double> rho = ma_density(path.slice(j));
    const std::span<const double> v(velocity.data() + j * n, n);
    e[j] = weighted_trapezoid(v, v, rho, path.grid().spacing());
  }
  return e;
}

double path_length(const SpacetimePath& path) {
  const std::vector<double> e = speed_squared(path);
  double sum = 0.5 * (std::sqrt(e.front()) + std::sqrt(e.back()));
  for (std::size_t j = 1; j + 1 < e.size(); ++j) sum += std::sqrt(e[j]);
  return sum * path.dt();
}

std::vector<double> covariant_derivative(const SpacetimePath& path, std::span<const double> field) {
  const std::size_t n = path.grid().size();
  const std::size_t tc = path.tcount();
  if (field.size() != n * tc) throw GridMismatch("field does not match the path lattice");
  const double h = path.grid().spacing();
  const std::vector<double> velocity = time_derivative(path);
  const std::vector<double> field_dot = time_derivative(field, tc, n);
  std::vector<double> out(field.size());
  for (std::size_t j = 0; j < tc; ++j) {
    const std::vector<double> rho = ma_density(path.slice(j));
    const auto dpsi = s_derivative(field.subspan(j * n, n), h);
    const auto dvel = s_derivative(std::span<const double>(velocity).subspan(j * n, n), h);
    for (std::size_t i = 0; i < n; ++i)
      out[j * n + i] = field_dot[j * n + i] - dpsi[i] * dvel[i] / rho[i];
  }
  return out;
}

}  // namespace sasaki
