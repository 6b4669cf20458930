#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::omp`; both run the same
// per-node arithmetic, so their outputs agree bit for bit. The library calls
// the OpenMP versions; tests and bench/ compare the two.

#include <cmath>
#include <cstddef>
#include <span>

#include "sasaki/grid.hpp"
#include "sasaki/spline.hpp"

namespace sasaki::kernels {

/// Returned by the conjugate kernels: index of the first target whose
/// optimiser fell outside the sampled range, or -1.
struct ConjugateStatus {
  std::ptrdiff_t truncated_at = -1;
};

/// Stencil data for the strip equation F_tt F_ss - F_ts^2 = eps f0''.
/// `values` holds (tcount) x (scount) samples of phi, time-major.
struct StripView {
  std::span<const double> values;
  std::span<const double> background_d2;  // f0''(s_i)
  std::size_t tcount;                     // M + 1
  std::size_t scount;                     // N
  double dt;
  double ds;
};

/// Ghost closure at s = -+L: phi_{-1} = (1 + r) phi_0 - r phi_1 with
/// r = e^{-h} (mirrored at the right end). Exact for tails a(t) + c(t) e^{+-s},
/// the form every smooth potential takes as s -> -+inf.
inline double tail_ratio(double ds) noexcept { return std::exp(-ds); }

/// Second differences of F at a node, using the tail ghost at the two ends.
struct StripHessian {
  double ftt;
  double fss;
  double fts;
};

inline StripHessian strip_hessian(const StripView& v, std::size_t j, std::size_t i) noexcept {
  const std::size_t n = v.scount;
  const double r = tail_ratio(v.ds);
  const auto at = [&](std::size_t jj, std::size_t ii) { return v.values[jj * n + ii]; };
  const auto below = [&](std::size_t jj) {
    return i == 0 ? (1.0 + r) * at(jj, 0) - r * at(jj, 1) : at(jj, i - 1);
  };
  const auto above = [&](std::size_t jj) {
    return i + 1 == n ? (1.0 + r) * at(jj, n - 1) - r * at(jj, n - 2) : at(jj, i + 1);
  };
  const double c = at(j, i);
  return {(at(j + 1, i) - 2.0 * c + at(j - 1, i)) / (v.dt * v.dt),
          v.background_d2[i] + (above(j) - 2.0 * c + below(j)) / (v.ds * v.ds),
          (above(j + 1) - below(j + 1) - above(j - 1) + below(j - 1)) / (4.0 * v.dt * v.ds)};
}

/// Unknown ordering for the Newton system: time index runs fastest, so the
/// 9-point stencil has half-bandwidth M.
inline std::size_t unknown_index(std::size_t j, std::size_t i, std::size_t tcount) noexcept {
  return i * (tcount - 2) + (j - 1);
}

namespace serial {
// Remainder v(x_k) of the conjugate of f0 + phi, where phi is given by its
// spline and node_slopes[i] = F'(s_i) is increasing.
ConjugateStatus conjugate(const UniformSpline& phi, std::span<const double> node_slopes,
                          const XGrid& xgrid, std::span<double> out);

// phi(s_i) from a remainder spline on the closed moment grid. node_slopes[k]
// is u'(x_k) at the interior closed-grid nodes k = 1..K (index 0 unused) and
// slope_bound >= sup |v'|.
ConjugateStatus inverse_conjugate(const UniformSpline& remainder,
                                  std::span<const double> node_slopes, double slope_bound,
                                  const SGrid& grid, std::span<double> out);

// Defect F_tt F_ss - F_ts^2 - eps f0'' at every unknown node.
void strip_defect(const StripView& view, double eps, std::span<double> out);

// Jacobian of strip_defect in LAPACK general-band column-major layout,
// kl = ku = M, leading dimension 3M + 1.
void strip_jacobian_band(const StripView& view, std::span<double> band);

// F_tt > 0 and F_ss > 0 at every unknown node.
bool strip_admissible(const StripView& view);
}  // namespace serial

namespace omp {
// Same contracts as the serial reference.
ConjugateStatus conjugate(const UniformSpline& phi, std::span<const double> node_slopes,
                          const XGrid& xgrid, std::span<double> out);
ConjugateStatus inverse_conjugate(const UniformSpline& remainder,
                                  std::span<const double> node_slopes, double slope_bound,
                                  const SGrid& grid, std::span<double> out);
void strip_defect(const StripView& view, double eps, std::span<double> out);
void strip_jacobian_band(const StripView& view, std::span<double> band);
bool strip_admissible(const StripView& view);
}  // namespace omp

}  // namespace sasaki::kernels
