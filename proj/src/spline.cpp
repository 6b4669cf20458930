#include "sasaki/spline.hpp"

#include <stdexcept>

namespace sasaki {

namespace {

double left_slope(std::span<const double> y, double h) {
  if (y.size() >= 5)
    return (-25.0 * y[0] + 48.0 * y[1] - 36.0 * y[2] + 16.0 * y[3] - 3.0 * y[4]) / (12.0 * h);
  if (y.size() >= 3) return (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h);
  return (y[1] - y[0]) / h;
}

double right_slope(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  if (n >= 5)
    return (25.0 * y[n - 1] - 48.0 * y[n - 2] + 36.0 * y[n - 3] - 16.0 * y[n - 4] + 3.0 * y[n - 5]) /
           (12.0 * h);
  if (n >= 3) return (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * h);
  return (y[n - 1] - y[n - 2]) / h;
}

}  // namespace

UniformSpline::UniformSpline(double origin, double spacing, std::span<const double> values)
    : x0_(origin), h_(spacing), y_(values.begin(), values.end()), curv_(values.size(), 0.0) {
  const std::size_t n = y_.size();
  if (n < 2 || !(h_ > 0.0)) throw std::invalid_argument("spline needs >= 2 nodes and h > 0");

  // Tridiagonal system for the nodal second derivatives, solved by the
  // Thomas algorithm. Rows: clamped end, interior continuity, clamped end.
  std::vector<double> diag(n), upper(n), rhs(n);
  const double d0 = left_slope(y_, h_);
  const double dn = right_slope(y_, h_);
  diag[0] = 2.0;
  upper[0] = 1.0;
  rhs[0] = 6.0 * ((y_[1] - y_[0]) / h_ - d0) / h_;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    diag[i] = 4.0;
    upper[i] = 1.0;
    rhs[i] = 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (h_ * h_);
  }
  diag[n - 1] = 2.0;
  rhs[n - 1] = 6.0 * (dn - (y_[n - 1] - y_[n - 2]) / h_) / h_;

  // Every sub-diagonal entry is 1.
  for (std::size_t i = 1; i < n; ++i) {
    const double m = 1.0 / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  curv_[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) curv_[i] = (rhs[i] - upper[i] * curv_[i + 1]) / diag[i];
}

}  // namespace sasaki
