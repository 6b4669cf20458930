#pragma once

#include <span>
#include <vector>

#include "sasaki/grid.hpp"

namespace sasaki {

/// An S^1-invariant potential phi(s) sampled on an SGrid. The slopes record
/// the asymptotic behaviour phi ~ slope * s as s -> -inf / +inf; both vanish
/// for smooth members of the space of potentials.
class InvariantPotential {
 public:
  InvariantPotential(SGrid grid, std::vector<double> values, double left_slope = 0.0,
                     double right_slope = 0.0);

  static InvariantPotential zero(const SGrid& grid);
  template <class Fn>
  static InvariantPotential sample(const SGrid& grid, Fn&& fn, double left_slope = 0.0,
                                   double right_slope = 0.0) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(grid.node(i));
    return InvariantPotential(grid, std::move(v), left_slope, right_slope);
  }

  const SGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }
  double left_slope() const noexcept { return left_slope_; }
  double right_slope() const noexcept { return right_slope_; }
  bool smooth_class() const noexcept { return left_slope_ == 0.0 && right_slope_ == 0.0; }

  InvariantPotential shifted(double c) const;

 private:
  SGrid grid_;
  std::vector<double> values_;
  double left_slope_;
  double right_slope_;
};

/// Legendre conjugate u = u0 + v stored through its bounded remainder v on
/// the interior moment nodes, plus the endpoint limits v(0) and v(1).
class SymplecticPotential {
 public:
  SymplecticPotential(XGrid xgrid, std::vector<double> remainder, double left_limit,
                      double right_limit);

  const XGrid& xgrid() const noexcept { return xgrid_; }
  std::span<const double> remainder() const noexcept { return remainder_; }
  double left_limit() const noexcept { return left_limit_; }
  double right_limit() const noexcept { return right_limit_; }

  /// Remainder on all K + 2 nodes 0, x_1, ..., x_K, 1.
  std::vector<double> closed_remainder() const;

  /// Pointwise affine combination (1 - t) * a + t * b.
  static SymplecticPotential interpolate(const SymplecticPotential& a,
                                         const SymplecticPotential& b, double t);

 private:
  XGrid xgrid_;
  std::vector<double> remainder_;
  double left_limit_;
  double right_limit_;
};

}  // namespace sasaki
