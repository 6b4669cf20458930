#pragma once

// L^2 (Mabuchi-type) structure on invariant potentials: the inner product
// <psi1, psi2>_phi = 2*pi * int psi1 psi2 rho_phi ds, path lengths and the
// covariant derivative along a path.

#include <span>
#include <vector>

#include "sasaki/grid.hpp"
#include "sasaki/potential.hpp"

namespace sasaki {

/// An invariant function, identified with a tangent vector at any potential
/// sampled on the same grid.
class TangentField {
 public:
  TangentField(SGrid grid, std::vector<double> values);
  template <class Fn>
  static TangentField sample(const SGrid& grid, Fn&& fn) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(grid.node(i));
    return TangentField(grid, std::move(v));
  }

  const SGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  TangentField scaled(double a) const;

 private:
  SGrid grid_;
  std::vector<double> values_;
};

/// phi(t_j, s_i), t_j = j / M, stored time-major.
class SpacetimePath {
 public:
  SpacetimePath(SGrid grid, std::size_t tcount, std::vector<double> values);

  static SpacetimePath from_slices(const std::vector<InvariantPotential>& slices);
  template <class Fn>
  static SpacetimePath sample(const SGrid& grid, std::size_t tcount, Fn&& fn) {
    std::vector<double> v(grid.size() * tcount);
    for (std::size_t j = 0; j < tcount; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(tcount - 1);
      for (std::size_t i = 0; i < grid.size(); ++i) v[j * grid.size() + i] = fn(t, grid.node(i));
    }
    return SpacetimePath(grid, tcount, std::move(v));
  }

  const SGrid& grid() const noexcept { return grid_; }
  std::size_t tcount() const noexcept { return tcount_; }
  double dt() const noexcept { return 1.0 / static_cast<double>(tcount_ - 1); }
  double time(std::size_t j) const noexcept { return static_cast<double>(j) * dt(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> row(std::size_t j) const noexcept {
    return std::span<const double>(values_).subspan(j * grid_.size(), grid_.size());
  }
  double at(std::size_t j, std::size_t i) const noexcept { return values_[j * grid_.size() + i]; }
  InvariantPotential slice(std::size_t j) const;

 private:
  SGrid grid_;
  std::size_t tcount_;
  std::vector<double> values_;
};

/// Throws GridMismatch or PositivityViolation.
double inner_product(const InvariantPotential& phi, const TangentField& a, const TangentField& b);

/// Time derivative of a path (or of any field on the same (t, s) lattice):
/// central differences inside, second-order one-sided at t = 0 and t = 1.
std::vector<double> time_derivative(const SpacetimePath& path);
std::vector<double> time_derivative(std::span<const double> field, std::size_t tcount,
                                    std::size_t scount);

/// e(t_j) = <phi_dot, phi_dot> at every time node.
std::vector<double> speed_squared(const SpacetimePath& path);

/// Trapezoid rule in t of sqrt(e(t_j)).
double path_length(const SpacetimePath& path);

/// psi_dot - (d_s psi)(d_s phi_dot) / F_ss at every node, with F = f0 + phi.
std::vector<double> covariant_derivative(const SpacetimePath& path, std::span<const double> field);

}  // namespace sasaki
