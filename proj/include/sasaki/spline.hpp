#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace sasaki {

/// Clamped cubic spline on a uniform grid. End slopes come from fourth-order
/// one-sided differences so the interpolant is O(h^4) up to the boundary.
class UniformSpline {
 public:
  UniformSpline(double origin, double spacing, std::span<const double> values);

  double value(double x) const noexcept {
    const auto [i, a, b] = locate(x);
    return curv_[i] * a * a * a / (6.0 * h_) + curv_[i + 1] * b * b * b / (6.0 * h_) +
           (y_[i] / h_ - curv_[i] * h_ / 6.0) * a + (y_[i + 1] / h_ - curv_[i + 1] * h_ / 6.0) * b;
  }

  double derivative(double x) const noexcept {
    const auto [i, a, b] = locate(x);
    return -curv_[i] * a * a / (2.0 * h_) + curv_[i + 1] * b * b / (2.0 * h_) +
           (y_[i + 1] - y_[i]) / h_ - (curv_[i + 1] - curv_[i]) * h_ / 6.0;
  }

  double second_derivative(double x) const noexcept {
    const auto [i, a, b] = locate(x);
    return (curv_[i] * a + curv_[i + 1] * b) / h_;
  }

  std::size_t size() const noexcept { return y_.size(); }
  double node(std::size_t i) const noexcept { return x0_ + h_ * static_cast<double>(i); }

 private:
  struct Cell {
    std::size_t index;
    double to_right;  // x_{i+1} - x
    double from_left; // x - x_i
  };

  Cell locate(double x) const noexcept {
    const double r = (x - x0_) / h_;
    const auto last = static_cast<std::ptrdiff_t>(y_.size()) - 2;
    auto i = static_cast<std::ptrdiff_t>(std::floor(r));
    i = std::clamp<std::ptrdiff_t>(i, 0, last);
    const double left = x0_ + h_ * static_cast<double>(i);
    return {static_cast<std::size_t>(i), left + h_ - x, x - left};
  }

  double x0_;
  double h_;
  std::vector<double> y_;
  std::vector<double> curv_;
};

}  // namespace sasaki
