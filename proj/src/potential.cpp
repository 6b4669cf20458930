#include "sasaki/potential.hpp"

#include <cmath>

#include "sasaki/errors.hpp"

namespace sasaki {

InvariantPotential::InvariantPotential(SGrid grid, std::vector<double> values, double left_slope,
                                       double right_slope)
    : grid_(grid), values_(std::move(values)), left_slope_(left_slope), right_slope_(right_slope) {
  if (values_.size() != grid_.size())
    throw GridMismatch("potential has " + std::to_string(values_.size()) + " values for a " +
                       std::to_string(grid_.size()) + "-node grid");
  for (double v : values_)
    if (!std::isfinite(v)) throw ValidationError("potential values must be finite");
}

InvariantPotential InvariantPotential::zero(const SGrid& grid) {
  return InvariantPotential(grid, std::vector<double>(grid.size(), 0.0));
}

InvariantPotential InvariantPotential::shifted(double c) const {
  std::vector<double> v(values_);
  for (double& x : v) x += c;
  return InvariantPotential(grid_, std::move(v), left_slope_, right_slope_);
}

SymplecticPotential::SymplecticPotential(XGrid xgrid, std::vector<double> remainder,
                                         double left_limit, double right_limit)
    : xgrid_(xgrid),
      remainder_(std::move(remainder)),
      left_limit_(left_limit),
      right_limit_(right_limit) {
  if (remainder_.size() != xgrid_.size())
    throw GridMismatch("remainder size does not match the moment grid");
  for (double v : remainder_)
    if (!std::isfinite(v)) throw ValidationError("remainder values must be finite");
}

std::vector<double> SymplecticPotential::closed_remainder() const {
  std::vector<double> out;
  out.reserve(remainder_.size() + 2);
  out.push_back(left_limit_);
  out.insert(out.end(), remainder_.begin(), remainder_.end());
  out.push_back(right_limit_);
  return out;
}

SymplecticPotential SymplecticPotential::interpolate(const SymplecticPotential& a,
                                                     const SymplecticPotential& b, double t) {
  if (!(a.xgrid_ == b.xgrid_)) throw GridMismatch("moment grids differ");
  std::vector<double> v(a.remainder_.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = (1.0 - t) * a.remainder_[k] + t * b.remainder_[k];
  return SymplecticPotential(a.xgrid_, std::move(v),
                             (1.0 - t) * a.left_limit_ + t * b.left_limit_,
                             (1.0 - t) * a.right_limit_ + t * b.right_limit_);
}

}  // namespace sasaki
